#include "divmom/sieve.hpp"

#include <stdexcept>

#include "divmom/checked.hpp"

namespace divmom {

SieveTable sieve_values(const MultiplicativeSpec& spec, std::uint64_t x_max,
                        const SieveOptions& opt) {
  if (x_max < 1) throw std::invalid_argument("sieve_values: x_max must be >= 1");
  if (x_max >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("sieve_values: x_max must be < 2^32");
  const std::uint64_t required = (x_max + 1) * 13;  // 8 + 4 + 1 bytes per entry
  if (required > opt.memory_budget_bytes)
    throw std::length_error(
        "sieve_values: x_max = " + std::to_string(x_max) + " needs ~" +
        std::to_string(required) + " bytes, budget is " +
        std::to_string(opt.memory_budget_bytes));

  SieveTable t;
  t.spec_name = spec.name;
  t.x_max = x_max;
  t.values.assign(x_max + 1, 0);
  auto& f = t.values;
  f[0] = 0;
  if (x_max >= 1) f[1] = 1;

  // spf_pow[n] = p^e where p is the smallest prime factor of n and p^e || n;
  // spf_exp[n] = e. Zero spf_pow marks "not yet reached", i.e. prime.
  std::vector<std::uint32_t> spf_pow(x_max + 1, 0);
  std::vector<std::uint8_t> spf_exp(x_max + 1, 0);
  std::vector<std::uint32_t> primes;
  const std::int64_t k = spec.prime_value;

  for (std::uint64_t i = 2; i <= x_max; ++i) {
    if (spf_pow[i] == 0) {
      primes.push_back(static_cast<std::uint32_t>(i));
      spf_pow[i] = static_cast<std::uint32_t>(i);
      spf_exp[i] = 1;
      f[i] = k;
    }
    for (std::uint32_t p : primes) {
      if (p > x_max / i) break;
      const std::uint64_t m = p * i;
      if (i % p == 0) {
        // p is already the smallest prime factor of i: bump its exponent.
        spf_exp[m] = static_cast<std::uint8_t>(spf_exp[i] + 1);
        const std::uint64_t pw = static_cast<std::uint64_t>(spf_pow[i]) * p;
        spf_pow[m] = static_cast<std::uint32_t>(pw);
        f[m] = (pw == m)
                   ? spec.prime_power(p, spf_exp[m])
                   : checked_mul(f[m / pw], spec.prime_power(p, spf_exp[m]));
        break;
      }
      spf_pow[m] = p;
      spf_exp[m] = 1;
      f[m] = checked_mul(f[i], k);
    }
  }
  return t;
}

}  // namespace divmom
