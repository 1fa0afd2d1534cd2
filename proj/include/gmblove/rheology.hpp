/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>
#include <vector>

#include "gmblove/specfun.hpp"

namespace gmblove {

/// Spring (rigidity mu, Pa) in series with a dashpot (viscosity eta, Pa s).
struct MaxwellElement {
  double mu;
  double eta;

  double tau() const noexcept { return eta / mu; }
  bool operator==(const MaxwellElement&) const = default;
};

/// Generalized Maxwell body: N >= 1 Maxwell elements in parallel. Immutable.
class GmbModel {
 public:
  explicit GmbModel(std::vector<MaxwellElement> elements);

  std::span<const MaxwellElement> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  double total_rigidity() const noexcept;
  double tau_min() const noexcept;
  double tau_max() const noexcept;

  /// True when no two relaxation times agree within the merge tolerance.
  bool has_distinct_taus() const noexcept;

  bool operator==(const GmbModel&) const = default;

 private:
  std::vector<MaxwellElement> elements_;
};

/// Relative tolerance under which two relaxation times are treated as equal.
inline constexpr double kTauMergeTolerance = 1e-12;

/// Elements with equal tau collapse into one element carrying the summed
/// rigidity. Order of first appearance is kept.
GmbModel merge_duplicate_taus(const GmbModel& model);

/// mu(s) = sum_n mu_n s / (s + 1/tau_n)
Complex complex_modulus(const GmbModel& model, Complex s);

/// k-th derivative of complex_modulus; k = 0 returns the modulus itself.
Complex modulus_derivative(const GmbModel& model, Complex s, int k);

/// Poles -1/tau_n in ascending order. Requires distinct taus.
std::vector<double> modulus_poles(const GmbModel& model);

/// The N real zeros of mu(s) in ascending order; the last one is s = 0.
/// Zeros and poles strictly interlace: pole_0 < zero_0 < pole_1 < ... < zero_{N-1} = 0.
std::vector<double> modulus_zeros(const GmbModel& model);

/// J(s) = 1 / (2 s mu(s))
Complex creep_compliance(const GmbModel& model, Complex s);
/// G(s) = 2 mu(s) / s
Complex relaxation_modulus(const GmbModel& model, Complex s);

}  // namespace gmblove
