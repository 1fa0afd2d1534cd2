/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gmblove/rheology.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gmblove/roots.hpp"

namespace gmblove {

namespace {

std::string describe(Complex s) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << s.real() << ", " << s.imag() << ")";
  return os.str();
}

void check_not_pole(const GmbModel& model, Complex s) {
  for (const auto& e : model.elements()) {
    const double rate = 1.0 / e.tau();
    if (std::abs(s + rate) <= 1e-14 * rate)
      fail(ErrorCode::Pole, "complex modulus pole at s = " + describe(s));
  }
}

}  // namespace

GmbModel::GmbModel(std::vector<MaxwellElement> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) fail(ErrorCode::Domain, "a GMB needs at least one Maxwell element");
  for (const auto& e : elements_) {
    if (!(e.mu > 0.0) || !std::isfinite(e.mu))
      fail(ErrorCode::Domain, "Maxwell element rigidity must be finite and > 0");
    if (!(e.eta > 0.0) || !std::isfinite(e.eta))
      fail(ErrorCode::Domain, "Maxwell element viscosity must be finite and > 0");
    if (!(e.tau() > 0.0) || !std::isfinite(e.tau()))
      fail(ErrorCode::Domain, "Maxwell relaxation time eta/mu is not representable");
  }
}

double GmbModel::total_rigidity() const noexcept {
  double sum = 0.0;
  for (const auto& e : elements_) sum += e.mu;
  return sum;
}

double GmbModel::tau_min() const noexcept {
  double t = elements_.front().tau();
  for (const auto& e : elements_) t = std::min(t, e.tau());
  return t;
}

double GmbModel::tau_max() const noexcept {
  double t = elements_.front().tau();
  for (const auto& e : elements_) t = std::max(t, e.tau());
  return t;
}

bool GmbModel::has_distinct_taus() const noexcept {
  std::vector<double> taus;
  taus.reserve(elements_.size());
  for (const auto& e : elements_) taus.push_back(e.tau());
  std::sort(taus.begin(), taus.end());
  for (std::size_t i = 1; i < taus.size(); ++i)
    if (taus[i] - taus[i - 1] <= kTauMergeTolerance * taus[i]) return false;
  return true;
}

GmbModel merge_duplicate_taus(const GmbModel& model) {
  struct Group {
    double tau;
    double mu;
  };
  std::vector<Group> groups;
  for (const auto& e : model.elements()) {
    const double tau = e.tau();
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return std::abs(g.tau - tau) <= kTauMergeTolerance * std::max(g.tau, tau);
    });
    if (it == groups.end())
      groups.push_back({tau, e.mu});
    else
      it->mu += e.mu;
  }
  if (groups.size() == model.size()) return model;
  std::vector<MaxwellElement> merged;
  merged.reserve(groups.size());
  for (const auto& g : groups) merged.push_back({g.mu, g.mu * g.tau});
  return GmbModel(std::move(merged));
}

Complex complex_modulus(const GmbModel& model, Complex s) {
  check_not_pole(model, s);
  Complex sum = 0.0;
  for (const auto& e : model.elements()) sum += e.mu * s / (s + 1.0 / e.tau());
  return sum;
}

Complex modulus_derivative(const GmbModel& model, Complex s, int k) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "derivative order must be >= 0");
  if (k == 0) return complex_modulus(model, s);
  check_not_pole(model, s);
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  Complex sum = 0.0;
  for (const auto& e : model.elements()) {
    const double rate = 1.0 / e.tau();
    sum += (e.mu * rate) / std::pow(s + rate, k + 1);
  }
  return (k % 2 == 1 ? 1.0 : -1.0) * factorial * sum;
}

std::vector<double> modulus_poles(const GmbModel& model) {
  if (!model.has_distinct_taus())
    fail(ErrorCode::Domain, "modulus_poles requires distinct relaxation times (merge first)");
  std::vector<double> poles;
  poles.reserve(model.size());
  for (const auto& e : model.elements()) poles.push_back(-1.0 / e.tau());
  std::sort(poles.begin(), poles.end());
  return poles;
}

std::vector<double> modulus_zeros(const GmbModel& model) {
  const auto poles = modulus_poles(model);
  const auto mu_real = [&](double s) {
    double sum = 0.0;
    for (const auto& e : model.elements()) sum += e.mu * s / (s + 1.0 / e.tau());
    return sum;
  };
  std::vector<double> zeros;
  zeros.reserve(poles.size());
  // mu(s) rises from -inf to +inf between consecutive poles
  for (std::size_t i = 0; i + 1 < poles.size(); ++i)
    zeros.push_back(bracketed_root(mu_real, poles[i], poles[i + 1]));
  zeros.push_back(0.0);
  return zeros;
}

Complex creep_compliance(const GmbModel& model, Complex s) {
  if (s == 0.0) fail(ErrorCode::Pole, "creep compliance is singular at s = 0");
  const Complex mu = complex_modulus(model, s);
  if (mu == 0.0) fail(ErrorCode::Pole, "creep compliance is singular at a zero of mu(s): s = " + describe(s));
  return 1.0 / (2.0 * s * mu);
}

Complex relaxation_modulus(const GmbModel& model, Complex s) {
  if (s == 0.0) fail(ErrorCode::Pole, "relaxation modulus is singular at s = 0");
  return 2.0 * complex_modulus(model, s) / s;
}

}  // namespace gmblove
