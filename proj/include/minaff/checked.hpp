#pragma once

#include <cstdint>
#include <string>

#include "minaff/error.hpp"

namespace minaff::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "64-bit overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return out;
}

}  // namespace minaff::checked
