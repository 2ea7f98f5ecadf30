#pragma once

#include <cstdint>

#include "divmom/multiplicative.hpp"
#include "divmom/numeric.hpp"

namespace divmom {

struct EulerProductResult {
  Real value;
  std::uint64_t prime_limit = 0;   // largest prime included
  double tail_estimate = 0.0;      // heuristic bound on |log(true/truncated)|
  unsigned precision_digits = 0;   // working decimal precision
  unsigned alpha_cutoff = 0;       // largest exponent summed at any prime
  std::int64_t k = 0;
};

// Smallest cutoff A >= max(8, floor_hint) making the local-series tail
// sum_{alpha > A} (alpha+1)^B p^{-alpha} provably below
// 10^{-(precision_digits + 5)}.
unsigned required_alpha_cutoff(double growth_bound, std::uint64_t p,
                               unsigned precision_digits,
                               unsigned floor_hint = 8);

// (1 - 1/p)^k * sum_{alpha = 0}^{A} f(p^alpha) / p^alpha as an exact
// rational: the truncated series is an integer over p^A, so the only
// rounding in the Real path is the final conversion. That keeps factors
// that are rationally 1 - epsilon (epsilon below the cutoff target) exactly
// 1 at working precision, and the tau product exactly 1 at any truncation.
Rational local_factor_exact(const MultiplicativeSpec& spec, std::int64_t k,
                            std::uint64_t p, unsigned alpha_cutoff);

// The same factor rounded once to precision_digits. Throws if alpha_cutoff
// is too small for the requested precision (the computed tail bound is
// included in the message).
Real local_factor(const MultiplicativeSpec& spec, std::int64_t k,
                  std::uint64_t p, unsigned precision_digits,
                  unsigned alpha_cutoff);

// Truncated product over p <= prime_limit of local_factor(spec, euler_k, p).
// No convergence precondition: this is the raw machinery, used directly by
// the telescoping diagnostics where the product is intentionally divergent.
// alpha_cutoff_start is the floor from which cutoffs are raised per prime.
EulerProductResult truncated_euler_product(const MultiplicativeSpec& spec,
                                           std::int64_t euler_k,
                                           std::uint64_t prime_limit,
                                           unsigned precision_digits,
                                           unsigned alpha_cutoff_start = 64);

// E = prod_p (1 - 1/p)^k sum_alpha f(p^alpha)/p^alpha, truncated at
// prime_limit. Requires f(p) = k so the local factors are 1 + O(p^{-2})
// and the full product converges. tail_estimate is c_f / (P log P) with
// c_f = |f(p^2) - k^2 + k(k-1)/2| (the p^{-2} coefficient of the local
// log-factor), cross-validated by a doubling check in the tests.
EulerProductResult euler_constant_E(const MultiplicativeSpec& spec,
                                    std::int64_t k, std::uint64_t prime_limit,
                                    unsigned precision_digits,
                                    unsigned alpha_cutoff_start = 64);

// C_f = E / (k-1)!, the leading coefficient of sum_{n<=x} f(n) over
// x (log x)^{k-1}.
EulerProductResult leading_constant(const MultiplicativeSpec& spec,
                                    std::int64_t k, std::uint64_t prime_limit,
                                    unsigned precision_digits,
                                    unsigned alpha_cutoff_start = 64);

}  // namespace divmom
