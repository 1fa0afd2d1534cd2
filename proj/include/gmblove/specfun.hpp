/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "gmblove/error.hpp"

namespace gmblove {

using Complex = std::complex<double>;

inline constexpr double euler_gamma = std::numbers::egamma;

/// Complex digamma psi(z) = Gamma'(z)/Gamma(z). Throws ErrorCode::Pole at
/// z = 0, -1, -2, ...
Complex digamma(Complex z);

/// Riemann zeta at an integer argument p >= 2.
double zeta_int(int p);

/// Sum of n^{-s} over n > n_last, with a bound on the Euler-Maclaurin
/// remainder. Requires s >= 2 and n_last >= 0.
struct ZetaTail {
  double value;
  double error_bound;
};
ZetaTail zeta_tail(int s, long n_last);

/// Hyperbolic cotangent, saturating to +-1 for |Re z| > 20 and switching to
/// the Laurent series near the origin. Throws ErrorCode::Pole at z = i k pi.
Complex coth(Complex z);

/// Table of incomplete Bell polynomials B_{m,k}(x_1, ..., x_{m-k+1}) for all
/// 0 <= k <= m <= order, built with the standard recurrence
///   B_{m,k} = sum_{i=1}^{m-k+1} C(m-1, i-1) x_i B_{m-i,k-1}.
/// `x` holds x_1 ... x_order; it may be longer than order.
template <class T>
class BellTable {
 public:
  BellTable(int order, std::span<const T> x) : order_(order) {
    if (order < 0) fail(ErrorCode::InvalidArgument, "Bell table order must be >= 0");
    if (static_cast<int>(x.size()) < order)
      fail(ErrorCode::InvalidArgument, "Bell table needs at least `order` seeds");
    const int width = order + 1;
    values_.assign(static_cast<std::size_t>(width * width), T(0));
    // binom[m][i] = C(m, i), exact in T for the orders used here
    std::vector<T> binom(static_cast<std::size_t>(width * width), T(0));
    for (int m = 0; m <= order; ++m) {
      binom[idx(m, 0)] = T(1);
      for (int i = 1; i <= m; ++i)
        binom[idx(m, i)] = binom[idx(m - 1, i - 1)] + (i <= m - 1 ? binom[idx(m - 1, i)] : T(0));
    }
    at(0, 0) = T(1);
    for (int m = 1; m <= order; ++m) {
      for (int k = 1; k <= m; ++k) {
        T sum(0);
        for (int i = 1; i <= m - k + 1; ++i) {
          const T& prev = at(m - i, k - 1);
          if (prev == T(0)) continue;
          sum += binom[idx(m - 1, i - 1)] * x[static_cast<std::size_t>(i - 1)] * prev;
        }
        at(m, k) = sum;
      }
    }
  }

  int order() const noexcept { return order_; }

  const T& operator()(int m, int k) const {
    if (m < 0 || m > order_ || k < 0 || k > m)
      fail(ErrorCode::InvalidArgument, "Bell table index out of range");
    return values_[idx(m, k)];
  }

 private:
  std::size_t idx(int m, int k) const noexcept {
    return static_cast<std::size_t>(m * (order_ + 1) + k);
  }
  T& at(int m, int k) noexcept { return values_[idx(m, k)]; }

  int order_;
  std::vector<T> values_;
};

/// B_{n,k}(x_1, ..., x_{n-k+1}). `x` must have exactly n - k + 1 entries.
template <class T>
T bell_incomplete(int n, int k, std::span<const T> x) {
  if (n < 0 || k < 0 || k > n)
    fail(ErrorCode::InvalidArgument, "bell_incomplete requires 0 <= k <= n");
  if (static_cast<int>(x.size()) != n - k + 1)
    fail(ErrorCode::InvalidArgument,
         "bell_incomplete: expected " + std::to_string(n - k + 1) + " arguments, got " +
             std::to_string(x.size()));
  if (k == 0) return n == 0 ? T(1) : T(0);
  // entries B_{n,k} depends on only ever touch x_1 .. x_{n-k+1}
  std::vector<T> padded(x.begin(), x.end());
  padded.resize(static_cast<std::size_t>(n), T(0));
  return BellTable<T>(n, padded)(n, k);
}

}  // namespace gmblove
