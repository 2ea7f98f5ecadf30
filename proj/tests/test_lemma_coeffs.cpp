#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "divmom/lemma_coeffs.hpp"

using namespace divmom;

TEST_CASE("binomial against the Pascal recurrence") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(20, 10) == 184756);
  CHECK_THROWS_AS(binomial(3, 4), std::invalid_argument);

  std::vector<std::vector<BigInt>> pascal(33);
  for (unsigned n = 0; n <= 32; ++n) {
    pascal[n].assign(n + 1, 1);
    for (unsigned i = 1; i < n; ++i)
      pascal[n][i] = pascal[n - 1][i - 1] + pascal[n - 1][i];
    for (unsigned i = 0; i <= n; ++i) CHECK(binomial(n, i) == pascal[n][i]);
  }
}

TEST_CASE("transform keeps C_k = c_0 for every weight") {
  RationalPolynomial in;
  in.coefficients = {Rational(355, 113), Rational(-7, 2), Rational(1, 3)};
  for (unsigned k = 1; k <= 10; ++k) {
    auto out = lemma1_upper_coeffs(k, in);
    REQUIRE(out.upper.coefficients.size() == 3);
    CHECK(out.k == k);
    CHECK(out.upper.coefficients[0] == in.coefficients[0]);
  }
}

TEST_CASE("weight-1 transform divides by the target degree") {
  RationalPolynomial in;
  in.coefficients = {Rational(0), Rational(1), Rational(5, 7), Rational(-3)};
  auto out = lemma1_upper_coeffs(1, in);
  // C_{1+m} = c_m / (m+1)
  for (std::size_t m = 0; m < in.coefficients.size(); ++m)
    CHECK(out.upper.coefficients[m] ==
          in.coefficients[m] / Rational(static_cast<unsigned long>(m + 1)));
}

TEST_CASE("weight-2 transform on a linear input") {
  RationalPolynomial in;
  in.coefficients = {Rational(9, 4), Rational(6)};
  auto out = lemma1_upper_coeffs(2, in);
  CHECK(out.upper.coefficients[0] == Rational(9, 4));  // C_2 = c_0
  CHECK(out.upper.coefficients[1] == Rational(2));     // C_3 = c_1 / 3
}

TEST_CASE("degenerate constant input maps to a single coefficient") {
  RationalPolynomial in;
  in.coefficients = {Rational(42)};
  auto out = lemma1_upper_coeffs(3, in);
  REQUIRE(out.upper.coefficients.size() == 1);
  CHECK(out.upper.coefficients[0] == 42);
}

TEST_CASE("transform inputs are validated") {
  RationalPolynomial in;
  in.coefficients = {Rational(1)};
  CHECK_THROWS_AS(lemma1_upper_coeffs(0, in), std::invalid_argument);
  RationalPolynomial empty;
  CHECK_THROWS_AS(lemma1_upper_coeffs(1, empty), std::invalid_argument);
}

TEST_CASE("transform is bit-reproducible") {
  RationalPolynomial in;
  in.coefficients = {Rational(1, 3), Rational(22, 7), Rational(-355, 113)};
  auto a = lemma1_upper_coeffs(4, in);
  auto b = lemma1_upper_coeffs(4, in);
  for (std::size_t i = 0; i < a.upper.coefficients.size(); ++i)
    CHECK(a.upper.coefficients[i] == b.upper.coefficients[i]);
}

TEST_CASE("weighted step: direct substitution at j=2") {
  Real gamma = euler_gamma(50);
  auto [a3, b3] = weighted_step_coeffs(2, Rational(1, 2), Real(0), gamma);
  CHECK(a3 == Rational(1, 6));
  PrecisionGuard g(50);
  CHECK(abs(b3 - gamma / 2).convert_to<double>() < 1e-45);
}

TEST_CASE("weighted step: zero A keeps only the B/j track") {
  Real gamma = euler_gamma(30);
  auto [a, b] = weighted_step_coeffs(3, Rational(0), Real(9), gamma);
  CHECK(a == 0);
  CHECK(abs(b - 3).convert_to<double>() < 1e-25);
}

TEST_CASE("weighted step rejects j=0") {
  CHECK_THROWS_AS(weighted_step_coeffs(0, Rational(1), Real(0), Real(1)),
                  std::invalid_argument);
}

TEST_CASE("iterated steps give A_k = E / k! exactly") {
  Real gamma = euler_gamma(30);
  const Rational e_value(6, 7);
  for (unsigned k = 2; k <= 10; ++k) {
    Rational a = e_value;  // A_1 = E
    Real b = Real(1) / 5;  // F, irrelevant to the A track
    for (unsigned j = 1; j < k; ++j) {
      auto [a_next, b_next] = weighted_step_coeffs(j, a, b, gamma);
      a = a_next;
      b = b_next;
    }
    Rational fact = 1;
    for (unsigned i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
    CHECK(a == e_value / fact);
  }
}
