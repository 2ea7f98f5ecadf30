// divmom: exact summatory functions of divisor-function powers, the
// Euler-product leading constants, the Mobius-inverted function family,
// and empirical verification of the leading-order asymptotic.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "divmom/asymptotics.hpp"
#include "divmom/euler_product.hpp"
#include "divmom/lemma_coeffs.hpp"
#include "divmom/multiplicative.hpp"
#include "divmom/segmented.hpp"
#include "divmom/squarefull.hpp"

using json = nlohmann::json;
using namespace divmom;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Counts accept plain integers and short scientific forms like 1e8.
std::uint64_t parse_count(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + ": empty value");
  if (text.find_first_not_of("0123456789") == std::string::npos) {
    try {
      return std::stoull(text);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + text + "' out of range");
    }
  }
  std::size_t used = 0;
  long double v = 0;
  try {
    v = std::stold(text, &used);
  } catch (const std::exception&) {
    throw UsageError(flag + ": cannot parse '" + text + "'");
  }
  if (used != text.size() || v < 1 || v > 9.2e18L || v != std::floor(v))
    throw UsageError(flag + ": '" + text + "' is not a positive integer");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw UsageError("--grid: expected start:stop:factor, got '" + text + "'");
  const std::uint64_t start = parse_count(text.substr(0, c1), "--grid start");
  const std::uint64_t stop =
      parse_count(text.substr(c1 + 1, c2 - c1 - 1), "--grid stop");
  double factor = 0;
  try {
    factor = std::stod(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw UsageError("--grid: bad factor in '" + text + "'");
  }
  if (factor <= 1.0) throw UsageError("--grid: factor must be > 1");
  if (stop < start) throw UsageError("--grid: stop must be >= start");
  std::vector<std::uint64_t> grid;
  std::uint64_t x = start;
  while (x < stop) {
    grid.push_back(x);
    const double next = static_cast<double>(x) * factor;
    x = std::max(x + 1, static_cast<std::uint64_t>(std::llround(next)));
  }
  grid.push_back(stop);
  return grid;
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw UsageError("cannot parse rational '" + text + "' (use n or n/d)");
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw UsageError("--c: empty coefficient list");
  return out;
}

std::string rational_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// Spec selector: --r picks tau^r; --spec accepts tau, tau^N, one, unit.
struct SpecChoice {
  MultiplicativeSpec spec;
  unsigned r = 0;  // 0 when the spec is not a tau power
};

SpecChoice resolve_spec(unsigned r, const std::string& name) {
  if (r > 0 && !name.empty())
    throw UsageError("give either --r or --spec, not both");
  if (r > 0) return {tau_pow_spec(r), r};
  if (name.empty()) throw UsageError("one of --r or --spec is required");
  if (name == "tau") return {tau_pow_spec(1), 1};
  if (name.rfind("tau^", 0) == 0) {
    unsigned rr = 0;
    try {
      rr = static_cast<unsigned>(std::stoul(name.substr(4)));
    } catch (const std::exception&) {
      throw UsageError("bad spec name '" + name + "'");
    }
    return {tau_pow_spec(rr), rr};
  }
  if (name == "one") return {one_spec(), 0};
  if (name == "unit") return {unit_spec(), 0};
  throw UsageError("unknown spec '" + name +
                   "' (expected tau, tau^N, one, or unit)");
}

struct OutputOptions {
  std::string format = "json";
  std::string path;
  bool no_timestamp = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--output", out.path,
                  "Write output to a file (default stdout)");
  cmd->add_flag("--no-timestamp", out.no_timestamp,
                "Omit timing metadata (timestamp, elapsed_ms) for "
                "byte-reproducible output");
}

void write_text(const OutputOptions& opt, const std::string& body) {
  if (opt.path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(opt.path);
  if (!f) throw std::runtime_error("cannot open output file " + opt.path);
  f << body;
}

void emit_json(const OutputOptions& opt, json j, double elapsed_ms) {
  if (!opt.no_timestamp) {
    j["timestamp"] = iso_timestamp();
    j["elapsed_ms"] = elapsed_ms;
  }
  write_text(opt, j.dump(2) + "\n");
}

std::string csv_escape(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Single-record CSV: a header row from the scalar fields, one data row.
void emit_csv_record(const OutputOptions& opt, const json& j) {
  std::ostringstream head, row;
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_array() || it.value().is_object()) continue;
    head << (first ? "" : ",") << it.key();
    row << (first ? "" : ",") << csv_escape(it.value());
    first = false;
  }
  write_text(opt, head.str() + "\n" + row.str() + "\n");
}

unsigned effective_threads(unsigned flag_value) {
  if (const char* env = std::getenv("DM_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError("DM_THREADS: cannot parse '" + std::string(env) + "'");
    }
  }
  return flag_value;
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Decimal digits of the value that the tail estimate leaves trustworthy.
unsigned stable_digits(const Real& value, double tail, unsigned digits) {
  if (tail <= 0 || value == 0) return digits;
  const double rel = tail / std::abs(value.convert_to<double>());
  if (rel <= 0) return digits;
  const double d = -std::log10(rel) - 1;
  if (d < 1) return 1;
  return std::min(digits, static_cast<unsigned>(d));
}

/* ------------------------------------------------------------------ */

struct SumArgs {
  unsigned r = 0;
  std::string spec_name;
  std::string x_text;
  std::string segment_text = "1048576";
  unsigned threads = 0;
  OutputOptions out;
};

int run_sum(const SumArgs& a) {
  const SpecChoice choice = resolve_spec(a.r, a.spec_name);
  const std::uint64_t x = parse_count(a.x_text, "--x");
  SegmentedOptions opt;
  opt.segment_size = parse_count(a.segment_text, "--segment-size");
  opt.threads = effective_threads(a.threads);
  const auto t0 = std::chrono::steady_clock::now();
  const BigInt sum = segmented_sum(choice.spec, x, opt);
  const double elapsed = ms_since(t0);

  json j;
  j["spec"] = choice.spec.name;
  j["r"] = choice.r;
  j["x"] = x;
  j["sum"] = sum.str();  // exact decimal string, never floating
  j["segment_size"] = opt.segment_size;
  if (a.out.format == "json") {
    emit_json(a.out, j, elapsed);
  } else if (a.out.format == "csv") {
    if (!a.out.no_timestamp) {
      j["timestamp"] = iso_timestamp();
      j["elapsed_ms"] = elapsed;
    }
    emit_csv_record(a.out, j);
  } else {
    std::ostringstream os;
    os << "S(" << x << ") = " << sum.str() << "  [" << choice.spec.name
       << ", segment " << opt.segment_size << "]\n";
    write_text(a.out, os.str());
  }
  return 0;
}

struct ConstantArgs {
  unsigned r = 0;
  std::string prime_limit_text = "1000000";
  unsigned digits = 50;
  unsigned alpha_cutoff = 64;
  OutputOptions out;
};

int run_constant(const ConstantArgs& a) {
  if (a.r == 0) throw UsageError("--r is required");
  const MultiplicativeSpec spec = tau_pow_spec(a.r);
  const std::uint64_t prime_limit =
      parse_count(a.prime_limit_text, "--prime-limit");
  const auto t0 = std::chrono::steady_clock::now();
  const EulerProductResult c = leading_constant(
      spec, spec.prime_value, prime_limit, a.digits, a.alpha_cutoff);
  const double elapsed = ms_since(t0);

  json j;
  j["spec"] = spec.name;
  j["k"] = c.k;
  j["prime_limit"] = c.prime_limit;
  j["alpha_cutoff"] = c.alpha_cutoff;
  j["precision_digits"] = c.precision_digits;
  j["value"] = c.value.str(a.digits);
  j["tail_estimate"] = c.tail_estimate;
  if (a.out.format == "json") {
    emit_json(a.out, j, elapsed);
  } else if (a.out.format == "csv") {
    emit_csv_record(a.out, j);
  } else {
    std::ostringstream os;
    os << "C = "
       << c.value.str(stable_digits(c.value, c.tail_estimate, a.digits))
       << "  (tail estimate " << c.tail_estimate << ", primes to "
       << c.prime_limit << ")\n";
    write_text(a.out, os.str());
  }
  return 0;
}

struct DepthArgs {
  unsigned r = 0;
  unsigned max_alpha = 8;
  OutputOptions out;
};

int run_depth(const DepthArgs& a) {
  if (a.r == 0) throw UsageError("--r is required");
  const MultiplicativeSpec base = tau_pow_spec(a.r);
  const unsigned k = static_cast<unsigned>(base.prime_value);
  const DepthFamily fam = depth_family(base, k);
  // p-independent family: alpha alone determines the value.
  std::vector<std::vector<std::int64_t>> table(k + 1);
  for (unsigned j = 0; j <= k; ++j)
    for (unsigned al = 0; al <= a.max_alpha; ++al)
      table[j].push_back(fam.members[j].prime_power(2, al));

  json j;
  j["spec"] = base.name;
  j["k"] = k;
  j["max_alpha"] = a.max_alpha;
  j["values"] = table;  // values[j][alpha] = f_j(p^alpha)
  if (a.out.format == "json") {
    emit_json(a.out, j, 0.0);
  } else if (a.out.format == "csv") {
    std::ostringstream os;
    os << "j";
    for (unsigned al = 0; al <= a.max_alpha; ++al) os << ",alpha" << al;
    os << "\n";
    for (unsigned jj = 0; jj <= k; ++jj) {
      os << jj;
      for (auto v : table[jj]) os << "," << v;
      os << "\n";
    }
    write_text(a.out, os.str());
  } else {
    std::ostringstream os;
    for (unsigned jj = 0; jj <= k; ++jj) {
      os << "f_" << jj << "(p^alpha):";
      for (auto v : table[jj]) os << " " << v;
      os << "\n";
    }
    write_text(a.out, os.str());
  }
  return 0;
}

struct Lemma1Args {
  unsigned k = 0;
  std::string c_text;
  OutputOptions out;
};

int run_lemma1(const Lemma1Args& a) {
  if (a.k == 0) throw UsageError("--k must be >= 1");
  RationalPolynomial input;
  input.coefficients = parse_rational_list(a.c_text);
  const TransformResult res = lemma1_upper_coeffs(a.k, input);

  json j;
  j["k"] = a.k;
  json c_in = json::array(), c_out = json::array();
  for (const auto& q : input.coefficients) c_in.push_back(rational_string(q));
  for (const auto& q : res.upper.coefficients)
    c_out.push_back(rational_string(q));
  j["c"] = c_in;
  j["C"] = c_out;
  j["ell_min"] = a.k;
  j["ell_max"] = a.k + input.degree();
  if (a.out.format == "json") {
    emit_json(a.out, j, 0.0);
  } else if (a.out.format == "csv") {
    std::ostringstream os;
    os << "ell,C\n";
    for (std::size_t m = 0; m < res.upper.coefficients.size(); ++m)
      os << (a.k + m) << "," << rational_string(res.upper.coefficients[m])
         << "\n";
    write_text(a.out, os.str());
  } else {
    std::ostringstream os;
    for (std::size_t m = 0; m < res.upper.coefficients.size(); ++m)
      os << "C_" << (a.k + m) << " = "
         << rational_string(res.upper.coefficients[m]) << "\n";
    write_text(a.out, os.str());
  }
  return 0;
}

struct SquarefullArgs {
  std::string t_text;
  std::string method = "enumerate";
  OutputOptions out;
};

int run_squarefull(const SquarefullArgs& a) {
  const std::uint64_t t = parse_count(a.t_text, "--t");
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t count =
      a.method == "scan" ? squarefull_count_scan(t) : squarefull_count(t);
  const double elapsed = ms_since(t0);

  json j;
  j["t"] = t;
  j["count"] = count;
  j["method"] = a.method;
  if (a.out.format == "json") {
    emit_json(a.out, j, elapsed);
  } else if (a.out.format == "csv") {
    emit_csv_record(a.out, j);
  } else {
    std::ostringstream os;
    os << count << " squarefull numbers <= " << t << "\n";
    write_text(a.out, os.str());
  }
  return 0;
}

struct VerifyArgs {
  unsigned r = 0;
  std::string grid_text = "10000:100000000:2";
  std::string prime_limit_text = "1000000";
  double tolerance = 0.15;
  unsigned digits = 50;
  std::string segment_text = "1048576";
  unsigned threads = 0;
  OutputOptions out;
};

json verify_report_json(const VerificationReport& rep, unsigned digits) {
  json j;
  j["r"] = rep.r;
  j["k"] = rep.k;
  j["grid"] = rep.grid;
  json sums = json::array();
  for (const auto& s : rep.sums) sums.push_back(s.str());
  j["sums"] = sums;
  j["fitted_leading"] = rep.fitted_leading.str(digits);
  j["predicted_C"] = rep.predicted_constant.str(digits);
  j["predicted_tail"] = rep.predicted_tail;
  j["relative_deviation"] = rep.relative_deviation;
  j["raw_ratio_at_max"] = rep.raw_ratio_at_max;
  j["max_relative_residual"] = rep.max_relative_residual;
  j["tolerance"] = rep.tolerance;
  j["pass"] = rep.pass;
  j["prime_limit"] = rep.prime_limit;
  j["precision_digits"] = rep.precision_digits;
  j["segment_size"] = rep.segment_size;
  j["threads"] = rep.threads;
  return j;
}

int run_verify(const VerifyArgs& a) {
  if (a.r == 0) throw UsageError("--r is required");
  const std::vector<std::uint64_t> grid = parse_grid(a.grid_text);
  VerifyOptions opt;
  opt.precision_digits = a.digits;
  opt.segment_size = parse_count(a.segment_text, "--segment-size");
  opt.threads = effective_threads(a.threads);
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport rep = verify_theorem(
      a.r, grid, parse_count(a.prime_limit_text, "--prime-limit"), a.tolerance,
      opt);
  const double elapsed = ms_since(t0);

  if (a.out.format == "json") {
    emit_json(a.out, verify_report_json(rep, a.digits), elapsed);
  } else if (a.out.format == "csv") {
    std::ostringstream os;
    os << "r,x,sum,fitted_leading,predicted_C,relative_deviation,"
          "raw_ratio_at_max,tolerance,pass\n";
    for (std::size_t i = 0; i < rep.grid.size(); ++i)
      os << rep.r << "," << rep.grid[i] << "," << rep.sums[i].str() << ","
         << rep.fitted_leading.str(a.digits) << ","
         << rep.predicted_constant.str(a.digits) << ","
         << rep.relative_deviation << "," << rep.raw_ratio_at_max << ","
         << rep.tolerance << "," << (rep.pass ? "true" : "false") << "\n";
    write_text(a.out, os.str());
  } else {
    std::ostringstream os;
    const unsigned show =
        stable_digits(rep.predicted_constant, rep.predicted_tail, a.digits);
    os << "r=" << rep.r << " k=" << rep.k << " grid " << rep.grid.front()
       << ".." << rep.grid.back() << " (" << rep.grid.size() << " points)\n"
       << "fitted leading   " << rep.fitted_leading.str(show) << "\n"
       << "predicted C      " << rep.predicted_constant.str(show) << "\n"
       << "relative dev     " << rep.relative_deviation << " (tolerance "
       << rep.tolerance << ")\n"
       << "raw ratio at max " << rep.raw_ratio_at_max << "\n"
       << (rep.pass ? "PASS" : "FAIL") << "\n";
    write_text(a.out, os.str());
  }
  return rep.pass ? 0 : 3;
}

struct BenchArgs {
  unsigned r = 2;
  std::string x_text = "1000000000";
  std::vector<std::string> segment_texts;
  unsigned threads = 0;
  OutputOptions out;
};

int run_bench(const BenchArgs& a) {
  const MultiplicativeSpec spec = tau_pow_spec(a.r);
  const std::uint64_t x = parse_count(a.x_text, "--x");
  std::vector<std::string> seg_texts = a.segment_texts;
  if (seg_texts.empty()) seg_texts = {"1048576"};
  const unsigned threads = effective_threads(a.threads);

  json runs = json::array();
  std::optional<BigInt> reference;
  bool invariant = true;
  for (const auto& st : seg_texts) {
    SegmentedOptions opt;
    opt.segment_size = parse_count(st, "--segment-size");
    opt.threads = threads;
    const auto t0 = std::chrono::steady_clock::now();
    const BigInt sum = segmented_sum(spec, x, opt);
    const double elapsed = ms_since(t0);
    if (!reference)
      reference = sum;
    else if (*reference != sum)
      invariant = false;
    json run;
    run["segment_size"] = opt.segment_size;
    run["elapsed_ms"] = elapsed;
    run["ns_per_n"] = elapsed * 1e6 / static_cast<double>(x);
    runs.push_back(run);
  }

  json j;
  j["spec"] = spec.name;
  j["x"] = x;
  j["threads"] = threads;
  j["runs"] = runs;
  j["sum"] = reference->str();
  j["segment_invariant"] = invariant;
  if (a.out.format == "json") {
    emit_json(a.out, j, 0.0);
  } else if (a.out.format == "csv") {
    std::ostringstream os;
    os << "spec,x,threads,segment_size,elapsed_ms,ns_per_n\n";
    for (const auto& run : runs)
      os << spec.name << "," << x << "," << threads << ","
         << run["segment_size"] << "," << run["elapsed_ms"] << ","
         << run["ns_per_n"] << "\n";
    write_text(a.out, os.str());
  } else {
    std::ostringstream os;
    for (const auto& run : runs)
      os << "segment " << run["segment_size"] << ": "
         << run["elapsed_ms"].get<double>() / 1000.0 << " s, " << run["ns_per_n"]
         << " ns/n\n";
    os << "sum = " << reference->str()
       << (invariant ? "" : "  SEGMENT-SIZE MISMATCH") << "\n";
    write_text(a.out, os.str());
  }
  if (!invariant) throw std::runtime_error("segment-size invariance violated");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "divmom: summatory divisor-function powers, Euler-product constants, "
      "and asymptotic verification"};
  app.require_subcommand(1);

  SumArgs sum_args;
  auto* sum_cmd = app.add_subcommand("sum", "Exact S(x) = sum_{n<=x} f(n)");
  sum_cmd->add_option("--r", sum_args.r, "Use f = tau^r");
  sum_cmd->add_option("--spec", sum_args.spec_name,
                      "Named spec: tau, tau^N, one, unit");
  sum_cmd->add_option("--x", sum_args.x_text, "Upper bound")->required();
  sum_cmd->add_option("--segment-size", sum_args.segment_text,
                      "Sieve segment entries (>= 1024)")
      ->capture_default_str();
  sum_cmd
      ->add_option("--threads", sum_args.threads, "Worker threads (0 = auto)")
      ->capture_default_str();
  add_output_options(sum_cmd, sum_args.out);
  sum_cmd->set_config("--config");

  ConstantArgs const_args;
  auto* const_cmd =
      app.add_subcommand("constant", "Leading constant C = E / (k-1)!");
  const_cmd->add_option("--r", const_args.r, "Use f = tau^r (k = 2^r)");
  const_cmd
      ->add_option("--prime-limit", const_args.prime_limit_text,
                   "Truncate the Euler product at this prime")
      ->capture_default_str();
  const_cmd
      ->add_option("--digits", const_args.digits, "Working decimal precision")
      ->check(CLI::Range(10u, 2000u))
      ->capture_default_str();
  const_cmd
      ->add_option("--alpha-cutoff", const_args.alpha_cutoff,
                   "Starting exponent cutoff (auto-raised)")
      ->check(CLI::Range(8u, 1000000u))
      ->capture_default_str();
  add_output_options(const_cmd, const_args.out);
  const_cmd->set_config("--config");

  DepthArgs depth_args;
  auto* depth_cmd =
      app.add_subcommand("depth", "Table of f_j(p^alpha) for the tau^r family");
  depth_cmd->add_option("--r", depth_args.r, "Base spec tau^r");
  depth_cmd
      ->add_option("--max-alpha", depth_args.max_alpha,
                   "Largest exponent shown")
      ->check(CLI::Range(0u, 64u))
      ->capture_default_str();
  add_output_options(depth_cmd, depth_args.out);
  depth_cmd->set_config("--config");

  Lemma1Args lemma_args;
  auto* lemma_cmd = app.add_subcommand(
      "lemma1", "Exact upper coefficients of the log-weighted transform");
  lemma_cmd->add_option("--k", lemma_args.k, "Weight exponent");
  lemma_cmd
      ->add_option("--c", lemma_args.c_text,
                   "Input coefficients c_0,c_1,... as n or n/d")
      ->required();
  add_output_options(lemma_cmd, lemma_args.out);
  lemma_cmd->set_config("--config");

  SquarefullArgs sq_args;
  auto* sq_cmd = app.add_subcommand("squarefull", "Count squarefull s <= t");
  sq_cmd->add_option("--t", sq_args.t_text, "Bound")->required();
  sq_cmd->add_option("--method", sq_args.method, "enumerate or scan")
      ->check(CLI::IsMember({"enumerate", "scan"}))
      ->capture_default_str();
  add_output_options(sq_cmd, sq_args.out);
  sq_cmd->set_config("--config");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Fit S_r(x)/x and compare with the Euler-product constant");
  verify_cmd->add_option("--r", verify_args.r, "Moment order");
  verify_cmd
      ->add_option("--grid", verify_args.grid_text,
                   "Geometric grid start:stop:factor")
      ->capture_default_str();
  verify_cmd
      ->add_option("--prime-limit", verify_args.prime_limit_text,
                   "Euler-product truncation")
      ->capture_default_str();
  verify_cmd
      ->add_option("--tolerance", verify_args.tolerance,
                   "Relative deviation allowed for the fitted leading "
                   "coefficient")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--digits", verify_args.digits, "Working precision")
      ->check(CLI::Range(10u, 2000u))
      ->capture_default_str();
  verify_cmd
      ->add_option("--segment-size", verify_args.segment_text,
                   "Sieve segment entries")
      ->capture_default_str();
  verify_cmd
      ->add_option("--threads", verify_args.threads,
                   "Worker threads (0 = auto)")
      ->capture_default_str();
  add_output_options(verify_cmd, verify_args.out);
  verify_cmd->set_config("--config");

  BenchArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("bench", "Sieve throughput for segmented sums");
  bench_cmd->add_option("--r", bench_args.r, "Spec tau^r")
      ->capture_default_str();
  bench_cmd->add_option("--x", bench_args.x_text, "Upper bound")
      ->capture_default_str();
  bench_cmd->add_option("--segment-size", bench_args.segment_texts,
                        "Segment entries; repeat to compare sizes");
  bench_cmd
      ->add_option("--threads", bench_args.threads, "Worker threads (0 = auto)")
      ->capture_default_str();
  add_output_options(bench_cmd, bench_args.out);
  bench_cmd->set_config("--config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 1;
  }

  try {
    if (sum_cmd->parsed()) return run_sum(sum_args);
    if (const_cmd->parsed()) return run_constant(const_args);
    if (depth_cmd->parsed()) return run_depth(depth_args);
    if (lemma_cmd->parsed()) return run_lemma1(lemma_args);
    if (sq_cmd->parsed()) return run_squarefull(sq_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (bench_cmd->parsed()) return run_bench(bench_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
