/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Real roots of low-degree polynomials by radicals. Coefficients are given
// from the highest power down; roots come back sorted ascending. Only real
// roots are returned (a double root is reported twice).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gmblove/error.hpp"
#include "gmblove/numeric.hpp"

namespace gmblove {

template <class T>
std::vector<T> solve_linear(const T& a, const T& b) {
  if (a == T(0)) fail(ErrorCode::Domain, "leading coefficient is zero");
  return {-b / a};
}

/// a x^2 + b x + c = 0, cancellation-free form.
template <class T>
std::vector<T> solve_quadratic(const T& a, const T& b, const T& c) {
  using std::sqrt;
  if (a == T(0)) fail(ErrorCode::Domain, "leading coefficient is zero");
  T disc = b * b - T(4) * a * c;
  if (disc < T(0)) {
    // tolerate a rounding-level negative discriminant (double root)
    const T scale = b * b + abs_value(T(4) * a * c);
    if (-disc > T(64) * epsilon_of<T>() * scale) return {};
    disc = T(0);
  }
  const T root = sqrt(disc);
  const T q = b >= T(0) ? T(-0.5) * (b + root) : T(-0.5) * (b - root);
  std::vector<T> roots;
  if (q == T(0)) {
    roots = {T(0), T(0)};
  } else {
    roots = {q / a, c / q};
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// a x^3 + b x^2 + c x + d = 0. Three real roots by the trigonometric
/// method, otherwise the single real root from Cardano's formula.
template <class T>
std::vector<T> solve_cubic(const T& a, const T& b, const T& c, const T& d) {
  using std::acos;
  using std::cbrt;
  using std::cos;
  using std::sqrt;
  if (a == T(0)) fail(ErrorCode::Domain, "leading coefficient is zero");
  const T A = b / a;
  const T B = c / a;
  const T C = d / a;
  // x = y - A/3:  y^3 + P y + R = 0
  const T shift = A / T(3);
  const T P = B - A * A / T(3);
  const T R = T(2) * A * A * A / T(27) - A * B / T(3) + C;
  const T half_r = R / T(2);
  const T third_p = P / T(3);
  const T disc = half_r * half_r + third_p * third_p * third_p;

  std::vector<T> roots;
  if (P == T(0) && R == T(0)) {
    roots = {-shift, -shift, -shift};
  } else if (disc > T(0)) {
    const T sq = sqrt(disc);
    const T u = cbrt(-half_r + sq);
    const T v = cbrt(-half_r - sq);
    roots = {u + v - shift};
  } else {
    const T m = T(2) * sqrt(-third_p);
    T arg = (T(3) * R / (T(2) * P)) * sqrt(T(-3) / P);
    arg = std::clamp(arg, T(-1), T(1));
    const T theta = acos(arg) / T(3);
    const T two_pi_3 = T(2) * pi_of<T>() / T(3);
    for (int k = 0; k < 3; ++k) roots.push_back(m * cos(theta - two_pi_3 * T(k)) - shift);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// a x^4 + b x^3 + c x^2 + d x + e = 0 by Ferrari's resolvent cubic.
template <class T>
std::vector<T> solve_quartic(const T& a, const T& b, const T& c, const T& d, const T& e) {
  using std::sqrt;
  if (a == T(0)) fail(ErrorCode::Domain, "leading coefficient is zero");
  const T A = b / a;
  const T B = c / a;
  const T C = d / a;
  const T D = e / a;
  // x = y - A/4:  y^4 + p y^2 + q y + r = 0
  const T shift = A / T(4);
  const T A2 = A * A;
  const T p = B - T(3) * A2 / T(8);
  const T q = C - A * B / T(2) + A2 * A / T(8);
  const T r = D - A * C / T(4) + A2 * B / T(16) - T(3) * A2 * A2 / T(256);

  std::vector<T> roots;
  const T scale = abs_value(p) * abs_value(p) + abs_value(r) + T(1e-300);
  if (abs_value(q) * abs_value(q) <= T(64) * epsilon_of<T>() * epsilon_of<T>() * scale * scale) {
    // biquadratic: w = y^2
    for (const T& w : solve_quadratic(T(1), p, r)) {
      if (w < T(0)) continue;
      const T y = sqrt(w);
      roots.push_back(-y - shift);
      roots.push_back(y - shift);
    }
  } else {
    // (y^2 + p/2 + m)^2 = 2m y^2 - q y + (m^2 + m p + p^2/4 - r) is a perfect
    // square when 8 m^3 + 8 p m^2 + (2 p^2 - 8 r) m - q^2 = 0; take m > 0.
    const auto resolvent = solve_cubic(T(8), T(8) * p, T(2) * p * p - T(8) * r, -q * q);
    const T m = resolvent.back();
    if (!(m > T(0))) fail(ErrorCode::Domain, "quartic resolvent has no positive root");
    const T s = sqrt(T(2) * m);
    const T k = q / (T(2) * s);
    for (const T& y : solve_quadratic(T(1), -s, p / T(2) + m + k)) roots.push_back(y - shift);
    for (const T& y : solve_quadratic(T(1), s, p / T(2) + m - k)) roots.push_back(y - shift);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace gmblove
