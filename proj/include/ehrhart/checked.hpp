#pragma once

#include <concepts>
#include <cstdint>
#include <limits>

#include "ehrhart/errors.hpp"

namespace ehrhart {

// Overflow-checked integer arithmetic. Every operation either returns the
// exact result or throws OverflowError.

template <std::signed_integral T>
constexpr T checked_add(T a, T b) {
  T r{};
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

template <std::signed_integral T>
constexpr T checked_sub(T a, T b) {
  T r{};
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

template <std::signed_integral T>
constexpr T checked_mul(T a, T b) {
  T r{};
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

template <std::signed_integral T>
constexpr T checked_neg(T a) {
  if (a == std::numeric_limits<T>::min()) throw OverflowError("integer overflow in negation");
  return -a;
}

template <std::signed_integral T>
constexpr T checked_abs(T a) {
  return a < 0 ? checked_neg(a) : a;
}

// a*b + c*d without intermediate overflow as long as the result fits.
inline std::int64_t checked_fma2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  __int128 r = static_cast<__int128>(a) * b + static_cast<__int128>(c) * d;
  if (r > std::numeric_limits<std::int64_t>::max() || r < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("integer overflow in multiply-add");
  return static_cast<std::int64_t>(r);
}

template <std::signed_integral T>
constexpr T floor_div(T a, T b) {
  if (b == 0) throw InvalidArgument("division by zero");
  if (b == -1) return checked_neg(a);
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <std::signed_integral T>
constexpr T ceil_div(T a, T b) {
  if (b == 0) throw InvalidArgument("division by zero");
  if (b == -1) return checked_neg(a);
  T q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

// Representative of a modulo m in [0, m), m > 0.
template <std::signed_integral T>
constexpr T mod_floor(T a, T m) {
  T r = a % m;
  return r < 0 ? r + m : r;
}

template <std::signed_integral T>
constexpr T gcd_abs(T a, T b) {
  a = checked_abs(a);
  b = checked_abs(b);
  while (b != 0) {
    T t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Binomial coefficient with overflow checking; 0 when k < 0 or k > n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i.
    __int128 t = static_cast<__int128>(r) * (n - k + i) / i;
    if (t > std::numeric_limits<std::int64_t>::max()) throw OverflowError("binomial overflow");
    r = static_cast<std::int64_t>(t);
  }
  return r;
}

}  // namespace ehrhart
