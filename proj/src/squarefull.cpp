#include "divmom/squarefull.hpp"

#include <set>
#include <stdexcept>

#include "divmom/primes.hpp"

namespace divmom {

namespace {

bool is_squarefree(std::uint64_t n) {
  if (n % 4 == 0) return false;
  while (n % 2 == 0) n /= 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

bool is_squarefull(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("is_squarefull: n must be >= 1");
  if (n % 2 == 0) {
    if (n % 4 != 0) return false;  // exponent of 2 is exactly 1
    do {
      n /= 2;
    } while (n % 2 == 0);
  }
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d) continue;
    n /= d;
    if (n % d != 0) return false;  // exponent of d is exactly 1
    do {
      n /= d;
    } while (n % d == 0);
  }
  return n == 1;  // a leftover factor would be a prime with exponent 1
}

std::uint64_t squarefull_count(std::uint64_t t) {
  if (t == 0) throw std::invalid_argument("squarefull_count: t must be >= 1");
  std::set<std::uint64_t> seen;
  for (std::uint64_t b = 1;; ++b) {
    if (b * b > t / b) break;  // b^3 > t
    const std::uint64_t b3 = b * b * b;
    if (!is_squarefree(b)) continue;
    const std::uint64_t a_max = isqrt(t / b3);
    for (std::uint64_t a = 1; a <= a_max; ++a) seen.insert(a * a * b3);
  }
  return seen.size();
}

std::uint64_t squarefull_count_scan(std::uint64_t t) {
  if (t == 0) throw std::invalid_argument("squarefull_count_scan: t must be >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= t; ++n)
    if (is_squarefull(n)) ++count;
  return count;
}

}  // namespace divmom
