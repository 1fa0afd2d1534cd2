/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gmblove/postwidder.hpp"

#include <algorithm>
#include <cmath>

namespace gmblove {

namespace {

template <class T>
std::vector<T> sequence_in(const LoveProblem& problem, double t, int n_max) {
  const T time(t);
  std::vector<T> seq;
  seq.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) seq.push_back(pw_term(problem, time, n));
  return seq;
}

template <class T>
PwResult invert_in(const LoveProblem& problem, double t, const PwConfig& config, int tier) {
  const auto seq = sequence_in<T>(problem, t, config.n_max);
  PwResult out;
  out.precision_digits = tier;
  if (config.acceleration == Acceleration::Rho) {
    std::vector<T> x;
    x.reserve(seq.size());
    for (int n = 1; n <= config.n_max; ++n) x.push_back(T(n));
    const auto acc = wynn_rho<T>(seq, x);
    out.value = static_cast<double>(acc.value);
    out.error_estimate = static_cast<double>(acc.error_estimate);
  } else {
    // O(1/n) convergence: the remaining error is about n times the last step
    out.value = static_cast<double>(seq.back());
    out.error_estimate =
        seq.size() > 1 ? static_cast<double>(abs_value(T(seq.back() - seq[seq.size() - 2]))) * config.n_max
                       : std::abs(out.value);
  }
  const double floor = 1e-6 * std::abs(problem.initial_regular_value());
  out.converged = std::isfinite(out.value) && out.error_estimate <= config.target_tol * std::max(std::abs(out.value), floor);
  return out;
}

template <class Fn>
auto dispatch_tier(int tier, Fn&& fn) {
  switch (tier) {
    case 20: return fn.template operator()<MpReal<20>>();
    case 34: return fn.template operator()<MpReal<34>>();
    case 50: return fn.template operator()<MpReal<50>>();
    case 75: return fn.template operator()<MpReal<75>>();
    case 100: return fn.template operator()<MpReal<100>>();
    default: return fn.template operator()<MpReal<150>>();
  }
}

void require_positive_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    fail(ErrorCode::Domain, "Post-Widder inversion requires a finite time t > 0");
}

}  // namespace

int default_precision_digits(int n_max) {
  return std::max(34, static_cast<int>(std::ceil(2.5 * n_max)));
}

int resolved_precision_digits(const PwConfig& config) {
  return config.precision_digits == 0 ? default_precision_digits(config.n_max) : config.precision_digits;
}

void validate(const PwConfig& config) {
  if (config.n_max < 1 || config.n_max > kMaxDerivativeOrder)
    fail(ErrorCode::Domain, "n_max must lie in [1, " + std::to_string(kMaxDerivativeOrder) + "]");
  const int digits = resolved_precision_digits(config);
  if (digits < 15) fail(ErrorCode::Domain, "precision_digits must be >= 15");
  precision_tier(digits);
  if (!(config.target_tol > 0.0)) fail(ErrorCode::Domain, "target_tol must be > 0");
}

std::vector<double> pw_sequence(const LoveProblem& problem, double t, const PwConfig& config) {
  validate(config);
  require_positive_time(t);
  const int tier = precision_tier(resolved_precision_digits(config));
  return dispatch_tier(tier, [&]<class T>() {
    const auto seq = sequence_in<T>(problem, t, config.n_max);
    std::vector<double> out;
    out.reserve(seq.size());
    for (const auto& v : seq) out.push_back(static_cast<double>(v));
    return out;
  });
}

PwResult pw_invert(const LoveProblem& problem, double t, const PwConfig& config) {
  validate(config);
  require_positive_time(t);
  const int tier = precision_tier(resolved_precision_digits(config));
  return dispatch_tier(tier, [&]<class T>() { return invert_in<T>(problem, t, config, tier); });
}

}  // namespace gmblove
