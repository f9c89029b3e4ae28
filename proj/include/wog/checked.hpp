#pragma once

#include <cstdint>
#include <vector>

#include "wog/error.hpp"

namespace wog {

using IntVec = std::vector<std::int64_t>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw CapExceeded("integer overflow in exponent arithmetic");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw CapExceeded("integer overflow in exponent arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapExceeded("integer overflow in exponent arithmetic");
  return r;
}

inline IntVec add(const IntVec &a, const IntVec &b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = checked_add(a[i], b[i]);
  return r;
}

inline IntVec sub(const IntVec &a, const IntVec &b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline IntVec negate(const IntVec &a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = -a[i];
  return r;
}

inline bool is_zero(const IntVec &a) {
  for (auto x : a)
    if (x != 0)
      return false;
  return true;
}

} // namespace wog
