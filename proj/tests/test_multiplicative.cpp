#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "divmom/multiplicative.hpp"
#include "divmom/sieve.hpp"
#include "oracles.hpp"

using namespace divmom;

TEST_CASE("tau_pow_spec prime power values") {
  auto tau = tau_pow_spec(1);
  CHECK(tau.prime_value == 2);
  CHECK(tau.prime_power(5, 1) == 2);
  CHECK(tau.prime_power(5, 2) == 3);

  auto tau2 = tau_pow_spec(2);
  CHECK(tau2.prime_value == 4);  // k = 2^r
  CHECK(tau2.growth_bound == doctest::Approx(2.0));

  auto tau3 = tau_pow_spec(3);
  CHECK(tau3.prime_power(7, 2) == 27);  // (alpha+1)^r

  CHECK(tau.prime_power(2, 0) == 1);
  CHECK(tau_pow_spec(62).prime_value == (std::int64_t{1} << 62));
}

TEST_CASE("tau_pow_spec rejects out-of-range r") {
  CHECK_THROWS_AS(tau_pow_spec(0), std::invalid_argument);
  CHECK_THROWS_AS(tau_pow_spec(63), std::invalid_argument);
  CHECK_THROWS_WITH_AS(tau_pow_spec(80), doctest::Contains("r <= 62"),
                       std::invalid_argument);
}

TEST_CASE("factorize by trial division") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).value == 1);

  auto f72 = factorize(72);
  REQUIRE(f72.factors.size() == 2);
  CHECK(f72.factors[0].prime == 2);
  CHECK(f72.factors[0].exponent == 3);
  CHECK(f72.factors[1].prime == 3);
  CHECK(f72.factors[1].exponent == 2);

  auto f97 = factorize(97);
  REQUIRE(f97.factors.size() == 1);
  CHECK(f97.factors[0].prime == 97);
  CHECK(f97.factors[0].exponent == 1);

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize with spf table agrees with trial division") {
  auto table = build_spf_table(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    auto a = factorize(n);
    auto b = factorize(n, table);
    REQUIRE(a.factors.size() == b.factors.size());
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      CHECK(a.factors[i].prime == b.factors[i].prime);
      CHECK(a.factors[i].exponent == b.factors[i].exponent);
      if (i > 0) CHECK(a.factors[i].prime > a.factors[i - 1].prime);
      for (unsigned e = 0; e < a.factors[i].exponent; ++e)
        prod *= a.factors[i].prime;
    }
    CHECK(prod == n);
  }
  CHECK_THROWS_AS(factorize(5001, table), std::invalid_argument);
}

TEST_CASE("evaluate on factorizations") {
  auto tau2 = tau_pow_spec(2);
  CHECK(evaluate(tau2, factorize(12)) == 36);  // tau(12) = 6, squared
  CHECK(oracles::divisor_count(12) == 6);

  CHECK(evaluate(tau2, factorize(1)) == 1);
  CHECK(evaluate(tau_pow_spec(1), factorize(100)) == 9);
  CHECK(oracles::divisor_count(100) == 9);
}

TEST_CASE("evaluate equals brute-force divisor count power") {
  auto tau = tau_pow_spec(1);
  auto tau3 = tau_pow_spec(3);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const std::int64_t d = oracles::divisor_count(n);
    CHECK(evaluate(tau, factorize(n)) == d);
    CHECK(evaluate(tau3, factorize(n)) == d * d * d);
  }
}

TEST_CASE("mobius_invert steps") {
  auto tau = tau_pow_spec(1);
  auto once = mobius_invert(tau);
  CHECK(once.prime_value == 1);
  for (unsigned a = 1; a <= 20; ++a) CHECK(once.prime_power(3, a) == 1);

  auto tau2_m = mobius_invert(tau_pow_spec(2));
  CHECK(tau2_m.prime_power(5, 1) == 3);  // k - 1 with k = 4
  CHECK(tau2_m.prime_power(5, 2) == 5);  // 9 - 4

  auto twice = mobius_invert(once);
  CHECK(twice.prime_value == 0);
  for (unsigned a = 1; a <= 20; ++a) CHECK(twice.prime_power(2, a) == 0);
}

TEST_CASE("mobius_invert beyond the memo range matches the recurrence") {
  auto m = mobius_invert(tau_pow_spec(2));
  auto base = tau_pow_spec(2);
  for (unsigned a : {65u, 66u, 100u})
    CHECK(m.prime_power(2, a) ==
          base.prime_power(2, a) - base.prime_power(2, a - 1));
}

TEST_CASE("depth_family for tau") {
  auto fam = depth_family(tau_pow_spec(1), 2);
  REQUIRE(fam.members.size() == 3);
  CHECK(fam.members[0].prime_value == 2);
  CHECK(fam.members[1].prime_value == 1);
  CHECK(fam.members[2].prime_value == 0);
}

TEST_CASE("depth_family for tau^2 reaches the squarefull level") {
  auto fam = depth_family(tau_pow_spec(2), 4);
  REQUIRE(fam.members.size() == 5);
  const auto& f4 = fam.members[4];
  CHECK(f4.prime_value == 0);
  CHECK(f4.prime_power(7, 1) == 0);
  CHECK(f4.prime_power(7, 2) == -1);
  // Fourth difference of a quadratic: zero from alpha = 3 on.
  for (unsigned a = 3; a <= 30; ++a) CHECK(f4.prime_power(7, a) == 0);
}

TEST_CASE("depth_family rejects mismatched depth") {
  CHECK_THROWS_AS(depth_family(tau_pow_spec(2), 3), std::invalid_argument);
}

TEST_CASE("depth_family difference recurrence holds memberwise") {
  auto fam = depth_family(tau_pow_spec(2), 4);
  for (unsigned j = 1; j <= 4; ++j)
    for (unsigned a = 1; a <= 32; ++a)
      CHECK(fam.members[j].prime_power(2, a) ==
            fam.members[j - 1].prime_power(2, a) -
                fam.members[j - 1].prime_power(2, a - 1));
}

TEST_CASE("abs_spec") {
  auto fam = depth_family(tau_pow_spec(2), 4);
  auto a4 = abs_spec(fam.members[4]);
  CHECK(a4.prime_power(3, 2) == 1);  // |-1|
  auto tau = tau_pow_spec(1);
  auto at = abs_spec(tau);
  for (unsigned a = 1; a <= 10; ++a)
    CHECK(at.prime_power(2, a) == tau.prime_power(2, a));
  auto aa = abs_spec(abs_spec(fam.members[4]));
  for (unsigned a = 1; a <= 10; ++a)
    CHECK(aa.prime_power(2, a) == a4.prime_power(2, a));
}

TEST_CASE("validate_spec accepts the shipped specs and rejects liars") {
  validate_spec(tau_pow_spec(1));
  validate_spec(tau_pow_spec(3));
  validate_spec(one_spec());
  validate_spec(unit_spec());
  for (const auto& m : depth_family(tau_pow_spec(2), 4).members)
    validate_spec(m);

  MultiplicativeSpec bad;
  bad.name = "bad_prime_value";
  bad.prime_value = 3;
  bad.rule = [](std::uint64_t, unsigned) -> std::int64_t { return 2; };
  bad.growth_bound = 2.0;
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);

  MultiplicativeSpec grower;
  grower.name = "bad_growth";
  grower.prime_value = 2;
  grower.rule = [](std::uint64_t, unsigned alpha) -> std::int64_t {
    return alpha == 1 ? 2 : checked_pow(3, alpha);
  };
  grower.growth_bound = 1.0;
  CHECK_THROWS_AS(validate_spec(grower), std::invalid_argument);
}

TEST_CASE("multiplicativity across coprime pairs from the sieve table") {
  auto fam = depth_family(tau_pow_spec(2), 4);
  for (const auto& spec : fam.members) {
    auto table = sieve_values(spec, 10000);
    for (std::uint64_t m = 2; m <= 100; ++m)
      for (std::uint64_t n = m + 1; m * n <= 10000; ++n) {
        if (std::gcd(m, n) != 1) continue;
        CHECK(table.values[m * n] ==
              checked_mul(table.values[m], table.values[n]));
      }
  }
}

TEST_CASE("mobius round-trip: divisor sums of f_j rebuild f_{j-1}") {
  auto fam = depth_family(tau_pow_spec(2), 4);
  std::vector<std::vector<std::int64_t>> tables;
  for (const auto& spec : fam.members)
    tables.push_back(sieve_values(spec, 10000).values);
  for (unsigned j = 1; j <= 4; ++j) {
    auto rebuilt = oracles::divisor_sums(tables[j]);
    for (std::uint64_t n = 1; n <= 10000; ++n)
      CHECK(rebuilt[n] == tables[j - 1][n]);
  }
}
