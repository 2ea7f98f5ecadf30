#include "divmom/numeric.hpp"

#include <mpfr.h>

namespace divmom {

namespace {
// First 60 decimal digits of gamma (A001620).
constexpr const char* kGamma60 =
    "0.577215664901532860606512090082402431042159335939923598805767";
}  // namespace

Real euler_gamma(unsigned digits10) {
  PrecisionGuard guard(digits10);
  if (digits10 <= 60) return Real(kGamma60);
  Real g;
  mpfr_const_euler(g.backend().data(), MPFR_RNDN);
  return g;
}

Real pi_value(unsigned digits10) {
  PrecisionGuard guard(digits10);
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

BigInt bigint_from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag =
      neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return neg ? BigInt(-out) : out;
}

BigInt factorial_exact(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace divmom
