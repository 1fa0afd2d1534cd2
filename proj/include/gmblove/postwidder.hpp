/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Post-Widder inversion of the normalized Love number with exact derivatives.
//
// F(s) = 1 / (1 + g(s)), g(s) = lambda^2 mu(s) / mu_e. The n-th derivative of
// F comes from the Faa di Bruno formula
//
//   F^(n)(s) = sum_{k=0}^{n} F^(k)(g) B_{n,k}(g', g'', ..., g^(n-k+1)),
//   F^(k)(g) = (-1)^k k! / (1 + g)^(k+1),
//
// and the n-th approximant of the time-domain response is
//
//   f_n(t) = ((-1)^n / n!) (n/t)^(n+1) F^(n)(n/t).
//
// f_n converges like O(1/n), so the sequence is accelerated with Wynn's rho
// algorithm in extended precision. Only the regular part of L(t) is produced;
// the impulsive L_e delta(t) term is never sampled.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "gmblove/error.hpp"
#include "gmblove/love.hpp"
#include "gmblove/numeric.hpp"
#include "gmblove/specfun.hpp"

namespace gmblove {

enum class Acceleration { None, Rho };

/// Highest derivative order the Post-Widder path accepts.
inline constexpr int kMaxDerivativeOrder = 40;

struct PwConfig {
  int n_max = 24;
  /// 0 selects the default max(34, ceil(2.5 n_max)).
  int precision_digits = 0;
  Acceleration acceleration = Acceleration::Rho;
  double target_tol = 1e-6;

  bool operator==(const PwConfig&) const = default;
};

int default_precision_digits(int n_max);
/// precision_digits with the default applied.
int resolved_precision_digits(const PwConfig& config);
void validate(const PwConfig& config);

template <class T>
struct DerivativeStack {
  T g_value;
  std::vector<T> g_derivs;  // g^(1) ... g^(n)
};

/// g(s) and g^(m)(s) = lambda^2 (-1)^(m+1) m! sum_k (mu'_k / tau_k) / (s + 1/tau_k)^(m+1).
template <class T>
DerivativeStack<T> g_derivatives(const LoveProblem& problem, const T& s, int n) {
  if (!(s > T(0))) fail(ErrorCode::Domain, "g_derivatives requires s > 0");
  if (n < 0) fail(ErrorCode::InvalidArgument, "derivative order must be >= 0");
  const auto ratios = problem.rigidity_ratios();
  const auto rates = problem.rates();
  const T lambda2(problem.lambda2());

  DerivativeStack<T> out{T(0), std::vector<T>(static_cast<std::size_t>(n), T(0))};
  // powers[k] = 1 / (s + rate_k)^(m+1), updated in place
  std::vector<T> inv_shift(rates.size());
  std::vector<T> powers(rates.size());
  for (std::size_t k = 0; k < rates.size(); ++k) {
    const T rate(rates[k]);
    inv_shift[k] = T(1) / (s + rate);
    powers[k] = inv_shift[k];
    out.g_value += T(ratios[k]) * s * inv_shift[k];
  }
  out.g_value *= lambda2;

  T factorial(1);
  for (int m = 1; m <= n; ++m) {
    factorial *= T(m);
    T sum(0);
    for (std::size_t k = 0; k < rates.size(); ++k) {
      powers[k] *= inv_shift[k];
      sum += T(ratios[k]) * T(rates[k]) * powers[k];
    }
    const T value = lambda2 * factorial * sum;
    out.g_derivs[static_cast<std::size_t>(m - 1)] = (m % 2 == 1) ? value : T(-value);
  }
  return out;
}

/// F^(k)(g) = (-1)^k k! / (1 + g)^(k+1) for k = 0..n.
template <class T>
std::vector<T> reciprocal_outer_derivatives(const T& g, int n) {
  std::vector<T> out(static_cast<std::size_t>(n + 1));
  const T inv = T(1) / (T(1) + g);
  T value = inv;
  for (int k = 0; k <= n; ++k) {
    out[static_cast<std::size_t>(k)] = value;
    value *= T(-(k + 1)) * inv;
  }
  return out;
}

/// sum_{k=0}^{n} outer[k] * bell(n, k); `bell` is any callable (n, k) -> T.
template <class T, class Bell>
T faa_di_bruno(std::span<const T> outer, int n, Bell&& bell) {
  if (static_cast<int>(outer.size()) < n + 1)
    fail(ErrorCode::InvalidArgument, "faa_di_bruno needs outer derivatives up to order n");
  T sum(0);
  for (int k = (n == 0 ? 0 : 1); k <= n; ++k) sum += outer[static_cast<std::size_t>(k)] * bell(n, k);
  return sum;
}

/// F^(n)(s) for the normalized Love number, by Faa di Bruno with
/// recurrence-built incomplete Bell polynomials.
template <class T>
T f_derivative(const LoveProblem& problem, const T& s, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "derivative order must be >= 0");
  if (n > kMaxDerivativeOrder)
    fail(ErrorCode::Domain, "derivative order " + std::to_string(n) + " exceeds the maximum of " +
                                std::to_string(kMaxDerivativeOrder));
  const auto stack = g_derivatives(problem, s, n);
  const auto outer = reciprocal_outer_derivatives(stack.g_value, n);
  if (n == 0) return outer[0];
  const BellTable<T> table(n, std::span<const T>(stack.g_derivs));
  return faa_di_bruno<T>(outer, n, [&](int m, int k) -> const T& { return table(m, k); });
}

/// ((-1)^n / n!) (n/t)^(n+1) F^(n)(n/t) for any transform whose n-th
/// derivative is supplied by `nth_derivative(s, n)`.
template <class T, class Derivative>
T post_widder_term(Derivative&& nth_derivative, const T& t, int n) {
  if (!(t > T(0))) fail(ErrorCode::Domain, "Post-Widder inversion requires t > 0");
  if (n < 1) fail(ErrorCode::InvalidArgument, "Post-Widder index must be >= 1");
  const T s = T(n) / t;
  T factorial(1);
  for (int i = 2; i <= n; ++i) factorial *= T(i);
  const T scale = ipow(s, n + 1) / factorial;
  const T deriv = nth_derivative(s, n);
  return (n % 2 == 0) ? T(scale * deriv) : T(-(scale * deriv));
}

/// n-th Post-Widder approximant of the regular impulse response at time t.
template <class T>
T pw_term(const LoveProblem& problem, const T& t, int n) {
  return post_widder_term<T>([&](const T& s, int order) { return f_derivative(problem, s, order); }, t, n);
}

template <class T>
struct Extrapolated {
  T value;
  T error_estimate;
};

/// Wynn's rho algorithm for a sequence S_i sampled at abscissae x_i
/// (x_i -> infinity). Returns the newest entry of the highest even column and
/// its distance to the newest entry of the previous even column.
template <class T>
Extrapolated<T> wynn_rho(std::span<const T> seq, std::span<const T> x) {
  if (seq.empty() || seq.size() != x.size())
    fail(ErrorCode::InvalidArgument, "wynn_rho needs matching, non-empty sequence and abscissae");
  const std::size_t n = seq.size();
  if (n == 1) return {seq[0], abs_value(seq[0])};

  std::vector<T> prev(n + 1, T(0));  // column k-2
  std::vector<T> cur(seq.begin(), seq.end());  // column k-1
  T best = cur.back();
  T previous_best = seq[n - 2];
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<T> next(n - k);
    for (std::size_t i = 0; i + k < n; ++i) {
      const T diff = cur[i + 1] - cur[i];
      if (diff == T(0)) {
        // the sequence has stopped moving at this level
        return {best, abs_value(T(best - previous_best))};
      }
      next[i] = prev[i + 1] + (x[i + k] - x[i]) / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) {
      previous_best = best;
      best = cur.back();
    }
  }
  return {best, abs_value(T(best - previous_best))};
}

struct PwResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int precision_digits = 0;  // tier actually used
};

/// Post-Widder approximants f_1 ... f_{n_max} at time t, in working precision.
std::vector<double> pw_sequence(const LoveProblem& problem, double t, const PwConfig& config);

/// Accelerated Post-Widder estimate of the regular impulse response at t > 0.
/// `converged` is false when the error estimate exceeds
/// target_tol * max(|value|, 1e-6 * sum_n L_n).
PwResult pw_invert(const LoveProblem& problem, double t, const PwConfig& config = {});

}  // namespace gmblove
