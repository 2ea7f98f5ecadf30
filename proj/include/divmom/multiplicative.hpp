#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace divmom {

// Value of f on the prime power p^alpha, alpha >= 1. alpha == 0 is handled
// by MultiplicativeSpec::prime_power and is always 1.
using PrimePowerRule =
    std::function<std::int64_t(std::uint64_t p, unsigned alpha)>;

// A multiplicative function described by its prime-power values. f(p) must
// equal the same integer prime_value at every prime, and |f(p^alpha)| must
// stay below (alpha+1)^growth_bound; both are sampled by validate_spec.
// Instances are immutable after construction and safe to share across
// threads.
struct MultiplicativeSpec {
  std::string name;
  std::int64_t prime_value = 0;
  PrimePowerRule rule;
  bool p_independent = true;   // f(p^alpha) depends only on alpha
  double growth_bound = 1.0;   // B with |f(p^alpha)| <= (alpha+1)^B

  std::int64_t prime_power(std::uint64_t p, unsigned alpha) const {
    return alpha == 0 ? 1 : rule(p, alpha);
  }
};

// tau(n)^r: f(p^alpha) = (alpha+1)^r, f(p) = 2^r.
MultiplicativeSpec tau_pow_spec(unsigned r);

// Constant-1 function (tau Mobius-inverted once).
MultiplicativeSpec one_spec();

// Unit of Dirichlet convolution: 1 at n = 1, 0 elsewhere.
MultiplicativeSpec unit_spec();

// f' with f'(p^alpha) = f(p^alpha) - f(p^{alpha-1}); the Dirichlet
// convolution of f with the Mobius function. Prime-power values of
// p-independent inputs are memoized up to alpha = 64 (alpha never exceeds
// log2 of a 64-bit sieve bound); larger alpha falls back to the recurrence.
MultiplicativeSpec mobius_invert(const MultiplicativeSpec& spec);

// |f|, multiplicative because f is.
MultiplicativeSpec abs_spec(const MultiplicativeSpec& spec);

// The chain f_0 = f, f_j = f_{j-1} * mu, down to f_k with f_k(p) = 0
// (so f_k is supported on squarefull numbers).
struct DepthFamily {
  MultiplicativeSpec base;
  unsigned depth = 0;                     // k
  std::vector<MultiplicativeSpec> members;  // f_0 .. f_k
};
DepthFamily depth_family(const MultiplicativeSpec& spec, unsigned k);

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
};

// n as a product of prime powers; primes strictly increasing.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;
};

// Smallest-prime-factor table for fast factorization of n <= limit().
struct SpfTable {
  std::vector<std::uint32_t> spf;  // spf[n], n <= limit
  std::uint64_t limit() const { return spf.empty() ? 0 : spf.size() - 1; }
};
SpfTable build_spf_table(std::uint64_t limit);

Factorization factorize(std::uint64_t n);
Factorization factorize(std::uint64_t n, const SpfTable& table);

// Product of rule values over the factorization; 1 for n = 1.
std::int64_t evaluate(const MultiplicativeSpec& spec, const Factorization& f);

// Samples the spec invariants (f(p)=prime_value, growth bound) over
// p <= max_p, alpha <= max_alpha; throws std::invalid_argument on violation.
// Values that overflow int64 end the alpha scan for that prime: only
// representable values are checked.
void validate_spec(const MultiplicativeSpec& spec, std::uint64_t max_p = 1000,
                   unsigned max_alpha = 64);

}  // namespace divmom
