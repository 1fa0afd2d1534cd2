/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Independent reference computations used only by the tests. Each oracle takes
// a different route from the production code it checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "gmblove/love.hpp"
#include "gmblove/random_models.hpp"
#include "gmblove/rheology.hpp"

namespace oracle {

using Complex = std::complex<double>;

// ---- generators -------------------------------------------------------------

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::log(lo) + gmblove::uniform01(rng) * (std::log(hi) - std::log(lo)));
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(gmblove::uniform01(rng) * (hi - lo + 1));
}

/// GMB with N elements, rigidities and viscosities log-uniform over six decades.
inline gmblove::GmbModel random_model(std::mt19937_64& rng, int n) {
  std::vector<gmblove::MaxwellElement> elements;
  for (int i = 0; i < n; ++i) elements.push_back({log_uniform(rng, 1e9, 1e12), log_uniform(rng, 1e19, 1e22)});
  return gmblove::GmbModel(std::move(elements));
}

inline gmblove::LoveProblem problem_for(const gmblove::GmbModel& gmb, int degree) {
  return gmblove::LoveProblem(gmblove::earth_like_sphere(gmb.total_rigidity()), degree, 1.0, gmb);
}

/// Single element with lambda^2 mu' = `strength` and relaxation time `tau`.
inline gmblove::LoveProblem single_element(double strength, double tau, int degree = 2) {
  const auto sphere = gmblove::earth_like_sphere(1e11);
  const double lambda2 = gmblove::lambda_squared(sphere, degree);
  const double mu = strength * sphere.mu_e / lambda2;
  return gmblove::LoveProblem(sphere, degree, 1.0, gmblove::GmbModel({{mu, mu * tau}}));
}

// ---- special functions ------------------------------------------------------

/// psi(z) = -gamma + sum_{k>=0} (1/(k+1) - 1/(k+z)), summed to K terms; the
/// tail psi(K+z) - psi(K+1) uses the leading asymptotic terms of log-differences.
inline Complex digamma_series(Complex z, long terms = 200000) {
  using C = std::complex<long double>;
  const C zz(z.real(), z.imag());
  C sum = 0;
  for (long k = terms - 1; k >= 0; --k) {
    const long double kk = static_cast<long double>(k);
    sum += 1.0L / (kk + 1.0L) - 1.0L / (kk + zz);
  }
  const long double big = static_cast<long double>(terms);
  const auto tail_at = [](C x) { return std::log(x) - 1.0L / (2.0L * x) - 1.0L / (12.0L * x * x); };
  sum += tail_at(big + zz) - tail_at(C(big + 1.0L));
  const C result = -0.57721566490153286060651209L + sum;
  return {static_cast<double>(result.real()), static_cast<double>(result.imag())};
}

/// zeta(p) = sum_{n<=N} n^-p plus the midpoint of the integral tail bounds.
inline double zeta_series(int p, long terms = 1000000) {
  long double sum = 0.0L;
  for (long n = terms; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -static_cast<long double>(p));
  const long double pm1 = p - 1;
  const long double upper = 1.0L / (pm1 * std::pow(static_cast<long double>(terms), pm1));
  const long double lower = 1.0L / (pm1 * std::pow(static_cast<long double>(terms + 1), pm1));
  return static_cast<double>(sum + 0.5L * (upper + lower));
}

template <class T>
T factorial(int n) {
  T f(1);
  for (int i = 2; i <= n; ++i) f *= T(i);
  return f;
}

/// B_{n,k}(x_1..x_{n-k+1}) by enumerating every (j_1..j_{n-k+1}) with
/// sum j_i = k and sum i j_i = n.
template <class T>
T bell_enumerated(int n, int k, const std::vector<T>& x) {
  const int m = n - k + 1;
  if (m <= 0) return T(n == 0 && k == 0 ? 1 : 0);
  std::vector<int> j(static_cast<std::size_t>(m), 0);
  T total(0);
  const std::function<void(int, int, int)> walk = [&](int idx, int left_k, int left_n) {
    if (idx == m) {
      if (left_k != 0 || left_n != 0) return;
      // n! / prod_i (j_i! (i!)^{j_i}) * prod_i x_i^{j_i}
      T term = factorial<T>(n);
      for (int i = 1; i <= m; ++i) {
        const int ji = j[static_cast<std::size_t>(i - 1)];
        term /= factorial<T>(ji);
        for (int r = 0; r < ji; ++r) term *= x[static_cast<std::size_t>(i - 1)] / factorial<T>(i);
      }
      total += term;
      return;
    }
    const int i = idx + 1;
    for (int c = 0; c * i <= left_n && c <= left_k; ++c) {
      j[static_cast<std::size_t>(idx)] = c;
      walk(idx + 1, left_k - c, left_n - c * i);
    }
    j[static_cast<std::size_t>(idx)] = 0;
  };
  walk(0, k, n);
  return total;
}

// ---- calculus ---------------------------------------------------------------

/// k-th derivative of f at x by a central difference, refined by one
/// Richardson step (h, h/2).
inline Complex central_difference(const std::function<Complex(Complex)>& f, Complex x, int k, double h) {
  const auto stencil = [&](double step) {
    // sum_{i=0}^{k} (-1)^i C(k,i) f(x + (k/2 - i) step) / step^k
    Complex sum = 0;
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
      const double offset = (0.5 * k - i) * step;
      sum += ((i % 2) ? -binom : binom) * f(x + offset);
      binom = binom * (k - i) / (i + 1);
    }
    return sum / std::pow(step, k);
  };
  const Complex coarse = stencil(h);
  const Complex fine = stencil(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

/// Step sweep over h = scale * 0.3 * 2^{-j/2}; returns the estimate whose
/// neighbour in the sweep agrees best (balances truncation against rounding).
inline Complex swept_difference(const std::function<Complex(Complex)>& f, Complex x, int k, double scale) {
  std::vector<Complex> est;
  for (int j = 0; j < 24; ++j) est.push_back(central_difference(f, x, k, scale * 0.3 * std::pow(2.0, -0.5 * j)));
  std::size_t best = 0;
  double best_gap = HUGE_VAL;
  for (std::size_t j = 0; j + 1 < est.size(); ++j) {
    const double gap = std::abs(est[j] - est[j + 1]);
    if (gap < best_gap) {
      best_gap = gap;
      best = j;
    }
  }
  return est[best];
}

/// Sign changes of f on a dense grid over (a, b); returns midpoints of the
/// straddling cells.
inline std::vector<double> sign_changes(const std::function<double(double)>& f, double a, double b, int cells) {
  std::vector<double> out;
  double x0 = a;
  double f0 = f(x0);
  for (int i = 1; i <= cells; ++i) {
    const double x1 = a + (b - a) * i / cells;
    const double f1 = f(x1);
    if (std::isfinite(f0) && std::isfinite(f1) && ((f0 < 0) != (f1 < 0)) && f0 != 0) out.push_back(0.5 * (x0 + x1));
    x0 = x1;
    f0 = f1;
  }
  return out;
}

/// n-th derivative of F(s) = L_e + sum_n L_n / (s - s_n), termwise.
inline long double partial_fraction_derivative(const gmblove::RelaxationSolution& sol, long double s, int n) {
  if (n == 0) {
    long double v = sol.elastic_amp;
    for (const auto& m : sol.modes) v += m.amp / (s - m.s);
    return v;
  }
  long double fact = 1.0L;
  for (int i = 2; i <= n; ++i) fact *= i;
  long double v = 0.0L;
  for (const auto& m : sol.modes) v += m.amp / std::pow(s - static_cast<long double>(m.s), n + 1);
  return ((n % 2) ? -fact : fact) * v;
}

}  // namespace oracle
