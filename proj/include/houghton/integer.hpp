#pragma once

#include <cstdint>

#include "houghton/error.hpp"

namespace houghton {

// Coordinates and shifts. Arithmetic on them goes through the checked
// helpers below; an overflow raises ErrorCode::Overflow instead of wrapping.
using Int = std::int64_t;

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer subtraction overflow");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

}  // namespace houghton
