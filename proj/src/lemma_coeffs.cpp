#include "divmom/lemma_coeffs.hpp"

#include <stdexcept>
#include <string>

namespace divmom {

BigInt binomial(unsigned n, unsigned i) {
  if (i > n)
    throw std::invalid_argument("binomial: i = " + std::to_string(i) +
                                " > n = " + std::to_string(n));
  if (i > n - i) i = n - i;
  BigInt r = 1;
  for (unsigned j = 1; j <= i; ++j) {
    r *= n - i + j;
    r /= j;  // exact: r is binom(n-i+j, j) after this step
  }
  return r;
}

TransformResult lemma1_upper_coeffs(unsigned k,
                                    const RationalPolynomial& input) {
  if (k < 1) throw std::invalid_argument("lemma1_upper_coeffs: k must be >= 1");
  if (input.coefficients.empty())
    throw std::invalid_argument("lemma1_upper_coeffs: empty input polynomial");
  TransformResult out;
  out.k = k;
  out.upper.coefficients.reserve(input.coefficients.size());
  for (std::size_t m = 0; m < input.coefficients.size(); ++m) {
    Rational s = 0;
    for (unsigned i = 1; i <= k; ++i) {
      Rational term(binomial(k, i), static_cast<unsigned long>(m + i));
      if (i & 1u)
        s -= term;
      else
        s += term;
    }
    out.upper.coefficients.push_back(input.coefficients[m] *
                                     (1 + Rational(m) * s));
  }
  return out;
}

std::pair<Rational, Real> weighted_step_coeffs(unsigned j, const Rational& a_j,
                                               const Real& b_j,
                                               const Real& gamma_value) {
  if (j < 1)
    throw std::invalid_argument(
        "weighted_step_coeffs: j must be >= 1 (the B step divides by j)");
  PrecisionGuard guard(gamma_value.precision());
  Rational a_next = a_j / (j + 1);
  Real b_next = gamma_value * Real(a_j) + b_j / j;
  return {std::move(a_next), std::move(b_next)};
}

}  // namespace divmom
