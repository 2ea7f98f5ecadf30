#pragma once

#include <cstdint>
#include <vector>

namespace divmom {

// Primes up to limit (inclusive), plain Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Deterministic primality by trial division. Inputs here are bounded by
// sieve limits, so no probabilistic test is ever used.
bool is_prime(std::uint64_t n);

// floor(sqrt(n)) without floating-point edge cases.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace divmom
