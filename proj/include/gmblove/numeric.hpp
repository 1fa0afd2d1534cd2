/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Scalar helpers shared by double and extended-precision code paths.

#include <array>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace gmblove {

/// Fixed-precision MPFR real; each tier is a distinct type, so no global
/// precision state is shared between threads.
template <unsigned Digits>
using MpReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>,
                                             boost::multiprecision::et_off>;

/// Decimal precisions available for extended-precision evaluation.
inline constexpr std::array<int, 6> kPrecisionTiers = {20, 34, 50, 75, 100, 150};

/// Smallest tier >= digits; throws ErrorCode::Domain above the largest tier.
int precision_tier(int digits);

template <class T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

template <class T>
T epsilon_of() {
  return std::numeric_limits<T>::epsilon();
}

template <class T>
T pi_of() {
  return boost::math::constants::pi<T>();
}

/// x^n for integer n >= 0 by repeated squaring.
template <class T>
T ipow(T x, int n) {
  T result(1);
  while (n > 0) {
    if (n & 1) result *= x;
    x *= x;
    n >>= 1;
  }
  return result;
}

}  // namespace gmblove
