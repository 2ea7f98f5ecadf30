#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "divmom/primes.hpp"
#include "divmom/segmented.hpp"
#include "divmom/sieve.hpp"
#include "divmom/squarefull.hpp"
#include "oracles.hpp"

using namespace divmom;

TEST_CASE("primes_up_to and is_prime") {
  auto p = primes_up_to(30);
  CHECK(p == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1).empty());
  for (std::uint64_t n = 0; n <= 1000; ++n) {
    bool slow = n >= 2;
    for (std::uint64_t d = 2; d < n; ++d)
      if (n % d == 0) slow = false;
    CHECK(is_prime(n) == slow);
  }
}

TEST_CASE("isqrt") {
  for (std::uint64_t n = 0; n <= 3000; ++n) {
    auto r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt(999999999999999999ull) == 999999999);
}

TEST_CASE("sieve table for tau up to 10") {
  auto t = sieve_values(tau_pow_spec(1), 10);
  CHECK(t.values ==
        std::vector<std::int64_t>{0, 1, 2, 2, 3, 2, 4, 2, 4, 3, 4});
}

TEST_CASE("sieve table sum for tau^2 up to 10 is 83") {
  auto t = sieve_values(tau_pow_spec(2), 10);
  std::int64_t sum = 0;
  for (auto v : t.values) sum += v;
  CHECK(sum == 83);
}

TEST_CASE("sieve of x_max = 1") {
  auto t = sieve_values(tau_pow_spec(2), 1);
  REQUIRE(t.values.size() == 2);
  CHECK(t.values[1] == 1);
}

TEST_CASE("sieve memory budget error reports required vs available") {
  SieveOptions opt;
  opt.memory_budget_bytes = 1000;
  CHECK_THROWS_WITH_AS(sieve_values(tau_pow_spec(1), 1000000, opt),
                       doctest::Contains("budget"), std::length_error);
}

TEST_CASE("sieve agrees with evaluate over factorizations up to 1e5") {
  auto fam = depth_family(tau_pow_spec(2), 4);
  auto spf = build_spf_table(100000);
  for (const auto& spec : {fam.members[0], fam.members[1], fam.members[4]}) {
    auto t = sieve_values(spec, 100000);
    for (std::uint64_t n = 1; n <= 100000; ++n)
      CHECK(t.values[n] == evaluate(spec, factorize(n, spf)));
  }
}

TEST_CASE("sieve handles the all-ones and unit specs") {
  auto ones = sieve_values(one_spec(), 1000);
  auto unit = sieve_values(unit_spec(), 1000);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    CHECK(ones.values[n] == 1);
    CHECK(unit.values[n] == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("segmented sum matches brute force for small x") {
  CHECK(segmented_sum(tau_pow_spec(2), 10) == 83);
  CHECK(segmented_sum(tau_pow_spec(2), 1) == 1);
  CHECK(segmented_sum(tau_pow_spec(1), 1) == 1);
  for (unsigned r = 1; r <= 3; ++r) {
    auto expected = oracles::tau_power_sum(2000, r);
    CHECK(segmented_sum(tau_pow_spec(r), 2000) == expected);
  }
}

TEST_CASE("segmented sum is invariant under segment size and threads") {
  const std::uint64_t x = 300000;
  SegmentedOptions a;
  a.segment_size = 1 << 10;
  SegmentedOptions b;
  b.segment_size = 1 << 17;
  SegmentedOptions c;
  c.segment_size = 1 << 12;
  c.threads = 4;
  auto ra = segmented_sum(tau_pow_spec(2), x, a);
  auto rb = segmented_sum(tau_pow_spec(2), x, b);
  auto rc = segmented_sum(tau_pow_spec(2), x, c);
  CHECK(ra == rb);
  CHECK(ra == rc);

  auto table = sieve_values(tau_pow_spec(2), x);
  BigInt direct = 0;
  for (std::uint64_t n = 1; n <= x; ++n) direct += table.values[n];
  CHECK(ra == direct);
}

TEST_CASE("segmented sum rejects bad segment sizes and checkpoints") {
  SegmentedOptions opt;
  opt.segment_size = 512;  // below 2^10
  CHECK_THROWS_AS(segmented_sum(tau_pow_spec(1), 100, opt),
                  std::invalid_argument);
  std::vector<std::uint64_t> bad{10, 10};
  CHECK_THROWS_AS(segmented_sums(tau_pow_spec(1), bad, {}),
                  std::invalid_argument);
  std::vector<std::uint64_t> empty;
  CHECK_THROWS_AS(segmented_sums(tau_pow_spec(1), empty, {}),
                  std::invalid_argument);
}

TEST_CASE("segmented checkpoints equal independent runs") {
  std::vector<std::uint64_t> xs{1, 7, 1024, 4097, 50000, 123456};
  auto many = segmented_sums(tau_pow_spec(2), xs, {});
  for (std::size_t i = 0; i < xs.size(); ++i)
    CHECK(many[i] == segmented_sum(tau_pow_spec(2), xs[i]));
}

TEST_CASE("segmented sum detects value overflow instead of wrapping") {
  MultiplicativeSpec huge;
  huge.name = "huge";
  huge.prime_value = std::int64_t{1} << 40;
  huge.rule = [](std::uint64_t, unsigned alpha) {
    return checked_pow(std::int64_t{1} << 40, alpha);
  };
  huge.p_independent = true;
  huge.growth_bound = 60.0;
  CHECK_THROWS_AS(segmented_sum(huge, 100000), std::overflow_error);
}

TEST_CASE("hyperbola identity: segmented tau sum equals floor-divisor sum") {
  for (std::uint64_t x : {1ull, 10ull, 100ull, 1000ull, 10000ull, 100000ull})
    CHECK(segmented_sum(tau_pow_spec(1), x) == tau_sum_by_divisors(x));
}

TEST_CASE("tau depth family termination on squarefull support") {
  auto fam = depth_family(tau_pow_spec(2), 4);
  auto t = sieve_values(fam.members[4], 100000);
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    if (!is_squarefull(n)) CHECK(t.values[n] == 0);
    if (t.values[n] != 0) CHECK(is_squarefull(n));
  }
}
