#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "divmom/numeric.hpp"

namespace divmom {

// Polynomial in u = log x with exact rational coefficients, c[j] on u^j.
struct RationalPolynomial {
  std::vector<Rational> coefficients;  // c_0 .. c_r

  unsigned degree() const {
    return coefficients.empty()
               ? 0
               : static_cast<unsigned>(coefficients.size() - 1);
  }
};

// Upper coefficients C_k .. C_{k+r} of the log-weighted transform. The
// coefficients below degree k are not produced: they involve the remainder
// integrals of the partial sum, which have no closed form here, so callers
// must treat degrees < k as unknown.
struct TransformResult {
  RationalPolynomial upper;  // upper.coefficients[m] = C_{k+m}
  unsigned k = 0;
};

BigInt binomial(unsigned n, unsigned i);

// Given sum_{n<=x} f(n) = sum_j c_j (log x)^j + (decaying error), the sum
// sum_{n<=x} f(n) (log(x/n))^k expands with
//   C_{k+m} = c_m * (1 + m * sum_{i=1}^{k} (-1)^i binom(k,i) / (m+i)),
// all exact rational arithmetic.
TransformResult lemma1_upper_coeffs(unsigned k,
                                    const RationalPolynomial& input);

// One step of the leading-coefficient recursion
//   A_{j+1} = A_j / (j+1),   B_{j+1} = gamma * A_j + B_j / j.
// The A track stays exact rational; the B track is real-valued because
// gamma is irrational. Requires j >= 1. The B result is computed at
// gamma_value's precision.
std::pair<Rational, Real> weighted_step_coeffs(unsigned j, const Rational& a_j,
                                               const Real& b_j,
                                               const Real& gamma_value);

}  // namespace divmom
