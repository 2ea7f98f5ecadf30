#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "divmom/multiplicative.hpp"
#include "divmom/numeric.hpp"

namespace divmom {

struct SegmentedOptions {
  std::uint64_t segment_size = std::uint64_t{1} << 20;  // entries per segment
  unsigned threads = 1;                                 // 0 = hardware count
};

// S(x) = sum_{n <= x} f(n), exact. Memory stays proportional to
// threads * segment_size plus the primes below sqrt(x); per-segment partial
// sums are signed 128-bit with overflow checks on every value, and the
// total is accumulated in arbitrary precision. Segments are independent
// and may run on several threads; integer addition is exact, so the result
// is identical for any segment size or thread count.
BigInt segmented_sum(const MultiplicativeSpec& spec, std::uint64_t x,
                     const SegmentedOptions& opt = {});

// S(x) for every checkpoint in xs (strictly increasing, all >= 1) from a
// single pass up to xs.back().
std::vector<BigInt> segmented_sums(const MultiplicativeSpec& spec,
                                   std::span<const std::uint64_t> xs,
                                   const SegmentedOptions& opt = {});

// Independent cross-check for f = tau: sum_{d <= x} floor(x/d), no sieving.
BigInt tau_sum_by_divisors(std::uint64_t x);

}  // namespace divmom
