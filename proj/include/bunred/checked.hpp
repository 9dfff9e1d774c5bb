#pragma once

#include <cstdint>
#include <string>

#include "bunred/error.hpp"

namespace bunred::checked {

// Overflow would silently corrupt a certificate, so every product and sum on
// the arithmetic path goes through these.

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, "integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t c) { return mul(mul(a, b), c); }

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace bunred::checked
