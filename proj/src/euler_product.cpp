#include "divmom/euler_product.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "divmom/primes.hpp"

namespace divmom {

namespace {

// log10 of the tail sum_{alpha > A} (alpha+1)^B p^{-alpha}. Consecutive
// terms shrink by at least rho = e^{B/(A+2)} / p, so for rho < 1 the tail
// is below (A+2)^B p^{-(A+1)} / (1 - rho).
double tail_log10(double growth_bound, std::uint64_t p, unsigned cutoff) {
  const double a2 = static_cast<double>(cutoff) + 2.0;
  const double lp = std::log10(static_cast<double>(p));
  const double rho = std::exp(growth_bound / a2) / static_cast<double>(p);
  if (rho >= 1.0) return 1e308;  // cutoff far too small, keep raising
  return growth_bound * std::log10(a2) - (cutoff + 1.0) * lp -
         std::log10(1.0 - rho);
}

double tail_coefficient(const MultiplicativeSpec& spec, std::int64_t k) {
  // p^{-2} coefficient of log local factor: f(p^2) - k^2 + k(k-1)/2,
  // maximized over sampled primes when the rule depends on p.
  double c = 0.0;
  const double base = -static_cast<double>(k) * static_cast<double>(k) +
                      static_cast<double>(k) * (static_cast<double>(k) - 1.0) / 2.0;
  const std::vector<std::uint64_t> sample =
      spec.p_independent ? std::vector<std::uint64_t>{2} : primes_up_to(1000);
  for (std::uint64_t p : sample) {
    const double v =
        std::abs(static_cast<double>(spec.prime_power(p, 2)) + base);
    if (v > c) c = v;
  }
  return c;
}

}  // namespace

unsigned required_alpha_cutoff(double growth_bound, std::uint64_t p,
                               unsigned precision_digits,
                               unsigned floor_hint) {
  const double target = -(static_cast<double>(precision_digits) + 5.0);
  unsigned a = std::max(floor_hint, 8u);
  while (tail_log10(growth_bound, p, a) > target) {
    ++a;
    if (a > 1u << 20)
      throw std::invalid_argument(
          "required_alpha_cutoff: no feasible cutoff (growth_bound too "
          "large for the requested precision)");
  }
  return a;
}

Rational local_factor_exact(const MultiplicativeSpec& spec, std::int64_t k,
                            std::uint64_t p, unsigned alpha_cutoff) {
  if (k < 0)
    throw std::invalid_argument("local_factor_exact: k must be >= 0");
  // Horner over the integers: num = sum_a f(p^a) p^{A-a}.
  BigInt num = 1;  // f(p^0)
  for (unsigned a = 1; a <= alpha_cutoff; ++a) {
    num *= p;
    num += spec.prime_power(p, a);
  }
  const BigInt pk = pow(BigInt(p), static_cast<unsigned>(k));
  const BigInt pm1k = pow(BigInt(p) - 1, static_cast<unsigned>(k));
  BigInt den = pow(BigInt(p), alpha_cutoff);
  return Rational(num * pm1k, den * pk);
}

Real local_factor(const MultiplicativeSpec& spec, std::int64_t k,
                  std::uint64_t p, unsigned precision_digits,
                  unsigned alpha_cutoff) {
  const double tl = tail_log10(spec.growth_bound, p, alpha_cutoff);
  if (tl > -(static_cast<double>(precision_digits) + 5.0))
    throw std::invalid_argument(
        "local_factor: alpha_cutoff " + std::to_string(alpha_cutoff) +
        " leaves a tail of ~10^" + std::to_string(tl) +
        " at p = " + std::to_string(p) + ", need 10^-" +
        std::to_string(precision_digits + 5));
  PrecisionGuard guard(precision_digits);
  return Real(local_factor_exact(spec, k, p, alpha_cutoff));
}

EulerProductResult truncated_euler_product(const MultiplicativeSpec& spec,
                                           std::int64_t euler_k,
                                           std::uint64_t prime_limit,
                                           unsigned precision_digits,
                                           unsigned alpha_cutoff_start) {
  PrecisionGuard guard(precision_digits);
  EulerProductResult res;
  res.prime_limit = prime_limit;
  res.precision_digits = precision_digits;
  res.k = euler_k;
  res.value = 1;
  unsigned max_cutoff = 0;
  for (std::uint64_t p : primes_up_to(prime_limit)) {
    const unsigned cutoff = required_alpha_cutoff(
        spec.growth_bound, p, precision_digits, alpha_cutoff_start);
    if (cutoff > max_cutoff) max_cutoff = cutoff;
    const Rational local = local_factor_exact(spec, euler_k, p, cutoff);
    if (local <= 0)
      throw std::runtime_error("euler product: nonpositive local factor at p = " +
                               std::to_string(p) + " for " + spec.name);
    res.value *= Real(local);
  }
  res.alpha_cutoff = max_cutoff;
  return res;
}

EulerProductResult euler_constant_E(const MultiplicativeSpec& spec,
                                    std::int64_t k, std::uint64_t prime_limit,
                                    unsigned precision_digits,
                                    unsigned alpha_cutoff_start) {
  if (prime_limit < 100)
    throw std::invalid_argument("euler_constant_E: prime_limit must be >= 100");
  if (spec.prime_value != k)
    throw std::invalid_argument(
        "euler_constant_E: k = " + std::to_string(k) + " but f(p) = " +
        std::to_string(spec.prime_value) +
        " (local factors would not be 1 + O(p^-2); the product diverges)");
  EulerProductResult res = truncated_euler_product(
      spec, k, prime_limit, precision_digits, alpha_cutoff_start);
  const double P = static_cast<double>(prime_limit);
  res.tail_estimate = tail_coefficient(spec, k) / (P * std::log(P));
  return res;
}

EulerProductResult leading_constant(const MultiplicativeSpec& spec,
                                    std::int64_t k, std::uint64_t prime_limit,
                                    unsigned precision_digits,
                                    unsigned alpha_cutoff_start) {
  if (k < 1)
    throw std::invalid_argument("leading_constant: k must be >= 1");
  EulerProductResult res = euler_constant_E(spec, k, prime_limit,
                                            precision_digits,
                                            alpha_cutoff_start);
  PrecisionGuard guard(precision_digits);
  res.value /= Real(factorial_exact(static_cast<unsigned>(k - 1)));
  return res;
}

}  // namespace divmom
