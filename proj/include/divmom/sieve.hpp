#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divmom/multiplicative.hpp"

namespace divmom {

// Dense table of f(1..x_max), exact signed integers.
struct SieveTable {
  std::string spec_name;
  std::uint64_t x_max = 0;
  std::vector<std::int64_t> values;  // values[n]; index 0 unused

  std::int64_t at(std::uint64_t n) const { return values.at(n); }
};

struct SieveOptions {
  // Transient working set is ~13 bytes per entry (values + spf bookkeeping).
  std::uint64_t memory_budget_bytes = std::uint64_t{4} << 30;
};

// Materializes f(1..x_max) with a linear smallest-prime-factor sieve:
// O(x_max) multiplications, each composite touched exactly once. The
// prime-power rule is only consulted for prime powers p^alpha with
// alpha >= 2 (rare); everything else is a single multiply by f(p) = k.
SieveTable sieve_values(const MultiplicativeSpec& spec, std::uint64_t x_max,
                        const SieveOptions& opt = {});

}  // namespace divmom
