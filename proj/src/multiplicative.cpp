#include "divmom/multiplicative.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "divmom/checked.hpp"
#include "divmom/primes.hpp"

namespace divmom {

namespace {

constexpr unsigned kMemoAlpha = 64;

// Eagerly tabulated prime-power values for a p-independent spec. Entries
// that overflow int64 are marked and only reported if actually requested.
struct AlphaMemo {
  std::int64_t value[kMemoAlpha + 1];
  bool ok[kMemoAlpha + 1];
};

}  // namespace

MultiplicativeSpec tau_pow_spec(unsigned r) {
  if (r == 0)
    throw std::invalid_argument("tau_pow_spec: r must be >= 1");
  if (r > 62)
    throw std::invalid_argument(
        "tau_pow_spec: r = " + std::to_string(r) +
        " exceeds the exponent budget (2^r must fit in int64, so r <= 62)");
  MultiplicativeSpec s;
  s.name = (r == 1) ? "tau" : "tau^" + std::to_string(r);
  s.prime_value = std::int64_t{1} << r;
  s.rule = [r](std::uint64_t, unsigned alpha) {
    return checked_pow(static_cast<std::int64_t>(alpha) + 1, r);
  };
  s.p_independent = true;
  s.growth_bound = static_cast<double>(r);
  return s;
}

MultiplicativeSpec one_spec() {
  MultiplicativeSpec s;
  s.name = "one";
  s.prime_value = 1;
  s.rule = [](std::uint64_t, unsigned) -> std::int64_t { return 1; };
  s.p_independent = true;
  s.growth_bound = 0.0;
  return s;
}

MultiplicativeSpec unit_spec() {
  MultiplicativeSpec s;
  s.name = "unit";
  s.prime_value = 0;
  s.rule = [](std::uint64_t, unsigned) -> std::int64_t { return 0; };
  s.p_independent = true;
  s.growth_bound = 0.0;
  return s;
}

MultiplicativeSpec mobius_invert(const MultiplicativeSpec& spec) {
  MultiplicativeSpec out;
  out.name = spec.name + "*mu";
  out.prime_value = checked_sub(spec.prime_value, 1);
  out.p_independent = spec.p_independent;
  // |f(p^a) - f(p^{a-1})| <= 2 (a+1)^B <= (a+1)^{B+1} for a >= 1.
  out.growth_bound = spec.growth_bound + 1.0;

  const MultiplicativeSpec base = spec;  // keep the source rule alive
  if (spec.p_independent) {
    auto memo = std::make_shared<AlphaMemo>();
    for (unsigned a = 0; a <= kMemoAlpha; ++a) {
      try {
        memo->value[a] =
            checked_sub(base.prime_power(2, a),
                        a == 0 ? 0 : base.prime_power(2, a - 1));
        memo->ok[a] = true;
      } catch (const std::overflow_error&) {
        memo->value[a] = 0;
        memo->ok[a] = false;
      }
    }
    memo->value[0] = 1;  // convention f(1) = 1
    memo->ok[0] = true;
    out.rule = [memo, base](std::uint64_t p, unsigned alpha) -> std::int64_t {
      if (alpha <= kMemoAlpha) {
        if (!memo->ok[alpha])
          throw std::overflow_error(
              "mobius_invert: value at alpha = " + std::to_string(alpha) +
              " does not fit in int64");
        return memo->value[alpha];
      }
      return checked_sub(base.prime_power(p, alpha),
                         base.prime_power(p, alpha - 1));
    };
  } else {
    out.rule = [base](std::uint64_t p, unsigned alpha) {
      return checked_sub(base.prime_power(p, alpha),
                         base.prime_power(p, alpha - 1));
    };
  }
  return out;
}

MultiplicativeSpec abs_spec(const MultiplicativeSpec& spec) {
  MultiplicativeSpec out;
  out.name = "|" + spec.name + "|";
  out.prime_value = spec.prime_value < 0 ? -spec.prime_value : spec.prime_value;
  out.p_independent = spec.p_independent;
  out.growth_bound = spec.growth_bound;
  const PrimePowerRule base = spec.rule;
  out.rule = [base](std::uint64_t p, unsigned alpha) {
    std::int64_t v = base(p, alpha);
    return v < 0 ? checked_sub(0, v) : v;
  };
  return out;
}

DepthFamily depth_family(const MultiplicativeSpec& spec, unsigned k) {
  if (spec.prime_value != static_cast<std::int64_t>(k))
    throw std::invalid_argument(
        "depth_family: k = " + std::to_string(k) + " must equal f(p) = " +
        std::to_string(spec.prime_value) +
        " (otherwise f_k(p) does not vanish)");
  DepthFamily fam;
  fam.base = spec;
  fam.depth = k;
  fam.members.reserve(k + 1);
  fam.members.push_back(spec);
  for (unsigned j = 1; j <= k; ++j) {
    MultiplicativeSpec m = mobius_invert(fam.members.back());
    m.name = spec.name + ".j" + std::to_string(j);
    fam.members.push_back(std::move(m));
  }
  return fam;
}

SpfTable build_spf_table(std::uint64_t limit) {
  if (limit >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("build_spf_table: limit must be < 2^32");
  SpfTable t;
  t.spf.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (t.spf[i] == 0)
      for (std::uint64_t m = i; m <= limit; m += i)
        if (t.spf[m] == 0) t.spf[m] = static_cast<std::uint32_t>(i);
  }
  return t;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization f;
  f.value = n;
  auto push = [&f](std::uint64_t p, unsigned e) {
    f.factors.push_back({p, e});
  };
  unsigned e2 = 0;
  while ((n & 1u) == 0) {
    n >>= 1;
    ++e2;
  }
  if (e2) push(2, e2);
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d) continue;
    unsigned e = 0;
    do {
      n /= d;
      ++e;
    } while (n % d == 0);
    push(d, e);
  }
  if (n > 1) push(n, 1);
  return f;
}

Factorization factorize(std::uint64_t n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  if (n > table.limit())
    throw std::invalid_argument("factorize: n = " + std::to_string(n) +
                                " exceeds spf table limit " +
                                std::to_string(table.limit()));
  Factorization f;
  f.value = n;
  while (n > 1) {
    std::uint64_t p = table.spf[n];
    unsigned e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    f.factors.push_back({p, e});
  }
  // spf order is already increasing: each extracted prime exceeds the last.
  return f;
}

std::int64_t evaluate(const MultiplicativeSpec& spec, const Factorization& f) {
  std::int64_t v = 1;
  for (const auto& pp : f.factors)
    v = checked_mul(v, spec.prime_power(pp.prime, pp.exponent));
  return v;
}

void validate_spec(const MultiplicativeSpec& spec, std::uint64_t max_p,
                   unsigned max_alpha) {
  std::vector<std::uint64_t> sample_primes =
      spec.p_independent ? std::vector<std::uint64_t>{2}
                         : primes_up_to(max_p);
  for (std::uint64_t p : sample_primes) {
    if (spec.prime_power(p, 0) != 1)
      throw std::invalid_argument(spec.name + ": f(p^0) != 1 at p = " +
                                  std::to_string(p));
    if (spec.prime_power(p, 1) != spec.prime_value)
      throw std::invalid_argument(spec.name + ": f(p) != prime_value at p = " +
                                  std::to_string(p));
    for (unsigned a = 0; a <= max_alpha; ++a) {
      std::int64_t v;
      try {
        v = spec.prime_power(p, a);
      } catch (const std::overflow_error&) {
        break;  // beyond the representable range; nothing left to check
      }
      double bound =
          std::pow(static_cast<double>(a) + 1.0, spec.growth_bound) *
          (1.0 + 1e-9);
      if (std::abs(static_cast<double>(v)) > bound)
        throw std::invalid_argument(
            spec.name + ": |f(" + std::to_string(p) + "^" + std::to_string(a) +
            ")| = " + std::to_string(v) + " exceeds (alpha+1)^" +
            std::to_string(spec.growth_bound));
    }
  }
}

}  // namespace divmom
