#pragma once

#include <cstdint>

namespace divmom {

// Every prime factor of n appears with exponent >= 2 (vacuously true for 1).
bool is_squarefull(std::uint64_t n);

// #{s <= t : s squarefull}, by enumerating a^2 b^3 with b squarefree.
// The representation is unique for squarefree b, but the values are
// deduplicated through a set anyway; the count is O(sqrt(t)) so the set
// stays small.
std::uint64_t squarefull_count(std::uint64_t t);

// Same count by scanning 1..t with is_squarefull; the slow oracle.
std::uint64_t squarefull_count_scan(std::uint64_t t);

}  // namespace divmom
