#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace divmom {

// Signed 64-bit arithmetic that refuses to wrap. Function values live in
// int64; anything that does not fit is reported, never silently truncated.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("int64 overflow: " + std::to_string(a) + " + " +
                              std::to_string(b));
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("int64 overflow: " + std::to_string(a) + " - " +
                              std::to_string(b));
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("int64 overflow: " + std::to_string(a) + " * " +
                              std::to_string(b));
  return r;
}

inline std::int64_t checked_pow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  while (exp) {
    if (exp & 1u) r = checked_mul(r, base);
    exp >>= 1;
    if (exp) base = checked_mul(base, base);
  }
  return r;
}

}  // namespace divmom
