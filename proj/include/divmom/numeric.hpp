#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>

namespace divmom {

using Real = boost::multiprecision::mpfr_float;  // runtime decimal precision
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Scoped thread-local working precision (decimal digits) for Real
// temporaries created inside the guarded region.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Euler-Mascheroni constant gamma = lim (H(t) - log t). Up to 60 digits the
// value comes from a fixed literal of the classical decimal expansion
// (verified against mpfr_const_euler and harmonic-sum convergence in the
// test suite); beyond 60 digits it is computed by MPFR directly.
Real euler_gamma(unsigned digits10);

Real pi_value(unsigned digits10);

BigInt bigint_from_i128(__int128 v);

BigInt factorial_exact(unsigned n);

}  // namespace divmom
