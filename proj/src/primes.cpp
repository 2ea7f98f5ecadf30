#include "divmom/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace divmom {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t m = i * i; m <= limit; m += i) composite[m] = true;
  }
  out.reserve(limit > 16 ? static_cast<std::size_t>(
                               1.3 * static_cast<double>(limit) /
                               std::log(static_cast<double>(limit)))
                         : 8);
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace divmom
