#pragma once

#include <cstdint>
#include <numeric>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "invsemi/error.hpp"

namespace invsemi {

/// Semigroup elements, degrees and exponents.
using Integer = std::int64_t;

/// Unbounded counts (denumerants).
using BigInteger = boost::multiprecision::cpp_int;

inline Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

inline Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (Integer v : values) g = std::gcd(g, v);
  return g;
}

/// Non-negative remainder.
inline Integer mod(Integer a, Integer m) {
  Integer r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace invsemi
