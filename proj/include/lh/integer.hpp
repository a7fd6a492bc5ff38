#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lh {

using Int = std::int64_t;

// Raised for malformed or out-of-range user data (CLI exit code 65).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OverflowError : public std::overflow_error {
 public:
  OverflowError() : std::overflow_error("integer overflow in exact arithmetic") {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

// a += b * c
inline void checked_fma(Int& a, Int b, Int c) { a = checked_add(a, checked_mul(b, c)); }

inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return (r < 0) ? r + (m < 0 ? -m : m) : r;
}

}  // namespace lh
