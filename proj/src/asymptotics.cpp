#include "divmom/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "divmom/euler_product.hpp"

namespace divmom {

namespace {

constexpr std::uint64_t kExactRationalBudget = 100000;

std::vector<Real> sample_logs(std::span<const SamplePoint> samples) {
  std::vector<Real> u;
  u.reserve(samples.size());
  for (const auto& s : samples) u.push_back(log(Real(s.x)));
  return u;
}

void check_fit_inputs(std::span<const SamplePoint> samples, unsigned degree) {
  if (samples.size() < static_cast<std::size_t>(degree) + 2)
    throw std::invalid_argument(
        "fit_log_polynomial: need at least degree + 2 = " +
        std::to_string(degree + 2) + " samples, got " +
        std::to_string(samples.size()));
  std::uint64_t x_min = samples.front().x, x_max = samples.front().x;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].x < 1)
      throw std::invalid_argument("fit_log_polynomial: x must be >= 1");
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].x == samples[j].x)
        throw std::invalid_argument(
            "fit_log_polynomial: duplicate abscissa x = " +
            std::to_string(samples[i].x));
    x_min = std::min(x_min, samples[i].x);
    x_max = std::max(x_max, samples[i].x);
  }
  if (x_max < 100 * x_min)
    throw std::invalid_argument(
        "fit_log_polynomial: abscissae must span at least a factor of 100");
}

double fit_residual(std::span<const SamplePoint> samples,
                    const std::vector<Real>& u,
                    const std::vector<Real>& coeffs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Real fit = 0;
    for (std::size_t j = coeffs.size(); j-- > 0;) fit = fit * u[i] + coeffs[j];
    const Real denom = abs(samples[i].value);
    const Real rel = abs(fit - samples[i].value) /
                     (denom > 0 ? denom : Real(1));
    worst = std::max(worst, rel.convert_to<double>());
  }
  return worst;
}

}  // namespace

Real harmonic_sum(std::uint64_t t, unsigned precision_digits) {
  if (t < 1) throw std::invalid_argument("harmonic_sum: t must be >= 1");
  PrecisionGuard guard(precision_digits);
  Real s = 0;
  for (std::uint64_t n = t; n >= 1; --n) s += Real(1) / n;
  return s;
}

Rational weighted_partial_sum_exact(const MultiplicativeSpec& spec,
                                    std::uint64_t x) {
  if (x > kExactRationalBudget)
    throw std::length_error(
        "weighted_partial_sum_exact: x = " + std::to_string(x) +
        " exceeds the exact-rational budget of " +
        std::to_string(kExactRationalBudget));
  const SieveTable table = sieve_values(spec, x);
  Rational s = 0;
  for (std::uint64_t n = x; n >= 1; --n) {
    if (table.values[n] == 0) continue;
    s += Rational(table.values[n], n);
  }
  return s;
}

Real weighted_partial_sum(const MultiplicativeSpec& spec, std::uint64_t x,
                          unsigned precision_digits) {
  if (x < 1)
    throw std::invalid_argument("weighted_partial_sum: x must be >= 1");
  PrecisionGuard guard(precision_digits);
  if (x <= kExactRationalBudget) return Real(weighted_partial_sum_exact(spec, x));
  const SieveTable table = sieve_values(spec, x);
  Real s = 0;
  for (std::uint64_t n = x; n >= 1; --n) {
    if (table.values[n] == 0) continue;
    s += Real(table.values[n]) / n;
  }
  return s;
}

Real log_weighted_sum(const MultiplicativeSpec& spec, std::uint64_t x,
                      unsigned k, bool divide_by_n,
                      unsigned precision_digits) {
  if (x < 1) throw std::invalid_argument("log_weighted_sum: x must be >= 1");
  if (k < 1) throw std::invalid_argument("log_weighted_sum: k must be >= 1");
  const SieveTable table = sieve_values(spec, x);
  PrecisionGuard guard(precision_digits);
  const Real log_x = log(Real(x));
  Real s = 0;
  for (std::uint64_t n = x; n >= 1; --n) {
    const std::int64_t f = table.values[n];
    if (f == 0) continue;
    Real term = pow(log_x - log(Real(n)), static_cast<int>(k));
    term *= f;
    if (divide_by_n) term /= n;
    s += term;
  }
  return s;
}

FitResult fit_log_polynomial(std::span<const SamplePoint> samples,
                             unsigned degree, unsigned precision_digits) {
  check_fit_inputs(samples, degree);
  PrecisionGuard guard(precision_digits);
  const std::size_t n = samples.size();
  const std::vector<Real> u = sample_logs(samples);

  // Discrete orthogonal polynomials over {u_i}: p_{j+1} = (u - a_j) p_j -
  // b_j p_{j-1}, with coefficients chosen so <p_i, p_j> = 0 for i != j
  // under <f, g> = sum_i f(u_i) g(u_i).
  std::vector<Real> p_prev(n, Real(0)), p_cur(n, Real(1));
  std::vector<Real> mono_prev(1, Real(0));  // monomial expansions
  std::vector<Real> mono_cur(1, Real(1));
  std::vector<Real> solution(degree + 1, Real(0));
  Real norm_prev = 0, norm_cur = 0;
  double condition = 0.0;

  for (unsigned j = 0; j <= degree; ++j) {
    norm_cur = 0;
    Real proj_y = 0, proj_u = 0;
    for (std::size_t i = 0; i < n; ++i) {
      norm_cur += p_cur[i] * p_cur[i];
      proj_y += samples[i].value * p_cur[i];
      proj_u += u[i] * p_cur[i] * p_cur[i];
    }
    if (norm_cur == 0)
      throw std::runtime_error("fit_log_polynomial: degenerate basis");
    const Real d_j = proj_y / norm_cur;
    for (std::size_t c = 0; c < mono_cur.size(); ++c)
      solution[c] += d_j * mono_cur[c];

    // Conditioning: L1 norm of the normalized basis polynomial's monomial
    // expansion.
    Real l1 = 0;
    for (const Real& c : mono_cur) l1 += abs(c);
    condition = std::max(
        condition, (l1 / sqrt(norm_cur)).convert_to<double>());

    if (j == degree) break;
    const Real a_j = proj_u / norm_cur;
    const Real b_j = (j == 0) ? Real(0) : norm_cur / norm_prev;
    std::vector<Real> p_next(n);
    for (std::size_t i = 0; i < n; ++i)
      p_next[i] = (u[i] - a_j) * p_cur[i] - b_j * p_prev[i];
    std::vector<Real> mono_next(mono_cur.size() + 1, Real(0));
    for (std::size_t c = 0; c < mono_cur.size(); ++c) {
      mono_next[c + 1] += mono_cur[c];
      mono_next[c] -= a_j * mono_cur[c];
    }
    for (std::size_t c = 0; c < mono_prev.size(); ++c)
      mono_next[c] -= b_j * mono_prev[c];
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    mono_prev = std::move(mono_cur);
    mono_cur = std::move(mono_next);
    norm_prev = norm_cur;
  }

  FitResult res;
  res.degree = degree;
  res.coefficients = std::move(solution);
  res.condition_diagnostic = condition;
  res.max_relative_residual = fit_residual(samples, u, res.coefficients);
  return res;
}

FitResult fit_log_polynomial_qr(std::span<const SamplePoint> samples,
                                unsigned degree, unsigned precision_digits) {
  check_fit_inputs(samples, degree);
  PrecisionGuard guard(precision_digits);
  const std::size_t n = samples.size();
  const std::size_t m = static_cast<std::size_t>(degree) + 1;
  const std::vector<Real> u = sample_logs(samples);

  // Column-major Vandermonde and right-hand side.
  std::vector<std::vector<Real>> a(m, std::vector<Real>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Real pw = 1;
    for (std::size_t j = 0; j < m; ++j) {
      a[j][i] = pw;
      pw *= u[i];
    }
  }
  std::vector<Real> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = samples[i].value;

  // Householder QR, reflectors applied column by column.
  for (std::size_t j = 0; j < m; ++j) {
    Real norm2 = 0;
    for (std::size_t i = j; i < n; ++i) norm2 += a[j][i] * a[j][i];
    Real alpha = sqrt(norm2);
    if (alpha == 0)
      throw std::runtime_error("fit_log_polynomial_qr: rank-deficient matrix");
    if (a[j][j] > 0) alpha = -alpha;
    std::vector<Real> v(n, Real(0));
    for (std::size_t i = j; i < n; ++i) v[i] = a[j][i];
    v[j] -= alpha;
    Real vnorm2 = 0;
    for (std::size_t i = j; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0) continue;
    auto reflect = [&](std::vector<Real>& col) {
      Real dot = 0;
      for (std::size_t i = j; i < n; ++i) dot += v[i] * col[i];
      const Real scale = 2 * dot / vnorm2;
      for (std::size_t i = j; i < n; ++i) col[i] -= scale * v[i];
    };
    for (std::size_t jj = j; jj < m; ++jj) reflect(a[jj]);
    reflect(y);
  }

  // Back substitution on the triangular factor.
  std::vector<Real> coeffs(m, Real(0));
  for (std::size_t j = m; j-- > 0;) {
    Real s = y[j];
    for (std::size_t jj = j + 1; jj < m; ++jj) s -= a[jj][j] * coeffs[jj];
    coeffs[j] = s / a[j][j];
  }

  FitResult res;
  res.degree = degree;
  res.coefficients = std::move(coeffs);
  res.condition_diagnostic = 0.0;  // not tracked on this route
  res.max_relative_residual = fit_residual(samples, u, res.coefficients);
  return res;
}

VerificationReport verify_theorem(unsigned r,
                                  std::span<const std::uint64_t> x_grid,
                                  std::uint64_t prime_limit, double tolerance,
                                  const VerifyOptions& opt) {
  if (r < 1) throw std::invalid_argument("verify_theorem: r must be >= 1");
  if (x_grid.size() < 2)
    throw std::invalid_argument("verify_theorem: grid too small");
  const std::uint64_t x_min = x_grid.front(), x_max = x_grid.back();
  if (x_max / x_min < 1000)
    throw std::invalid_argument(
        "verify_theorem: grid must span at least 3 decades");

  const MultiplicativeSpec spec = tau_pow_spec(r);
  const std::uint64_t k = std::uint64_t{1} << r;
  const unsigned degree = static_cast<unsigned>(k - 1);

  VerificationReport rep;
  rep.r = r;
  rep.k = k;
  rep.grid.assign(x_grid.begin(), x_grid.end());
  rep.tolerance = tolerance;
  rep.prime_limit = prime_limit;
  rep.precision_digits = opt.precision_digits;
  rep.segment_size = opt.segment_size;
  rep.threads = opt.threads;

  SegmentedOptions seg_opt;
  seg_opt.segment_size = opt.segment_size;
  seg_opt.threads = opt.threads;
  rep.sums = segmented_sums(spec, x_grid, seg_opt);

  PrecisionGuard guard(opt.precision_digits);
  std::vector<SamplePoint> samples(x_grid.size());
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    samples[i].x = x_grid[i];
    samples[i].value = Real(rep.sums[i]) / x_grid[i];
  }
  const FitResult fit =
      fit_log_polynomial(samples, degree, opt.precision_digits);
  rep.fitted_leading = fit.coefficients[degree];
  rep.max_relative_residual = fit.max_relative_residual;

  const EulerProductResult c =
      leading_constant(spec, static_cast<std::int64_t>(k), prime_limit,
                       opt.precision_digits);
  rep.predicted_constant = c.value;
  rep.predicted_tail = c.tail_estimate;

  rep.relative_deviation =
      abs((rep.fitted_leading - c.value) / c.value).convert_to<double>();
  const Real lx = log(Real(x_max));
  rep.raw_ratio_at_max =
      (Real(rep.sums.back()) /
       (c.value * Real(x_max) * pow(lx, static_cast<int>(degree))))
          .convert_to<double>();
  rep.pass = rep.relative_deviation <= tolerance;
  return rep;
}

}  // namespace divmom
