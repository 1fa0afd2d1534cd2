/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmblove/radicals.hpp"
#include "gmblove/rheology.hpp"
#include "gmblove/specfun.hpp"

namespace gmblove {

inline constexpr double kNewtonG = 6.67e-11;

/// Homogeneous incompressible self-gravitating sphere (SI units).
struct SphereModel {
  double rho;
  double radius;
  double mu_e;
  double newton_g = kNewtonG;

  /// g = (4/3) pi G rho a
  double surface_gravity() const noexcept;

  /// Sphere whose density reproduces the given surface gravity.
  static SphereModel from_surface_gravity(double g, double radius, double mu_e,
                                          double newton_g = kNewtonG);

  bool operator==(const SphereModel&) const = default;
};

void validate(const SphereModel& sphere);

/// lambda^2 = ((2 l^2 + 4 l + 3) / l) * mu_e / (rho g a)
double lambda_squared(const SphereModel& sphere, int degree);

/// Degree-1 loading needs reference-frame care; returns a note for l = 1.
std::optional<std::string> degree_note(int degree);

/// Love-number problem at one harmonic degree. Duplicate relaxation times in
/// the rheology are merged on construction.
class LoveProblem {
 public:
  LoveProblem(SphereModel sphere, int degree, double fluid_limit, GmbModel gmb);

  const SphereModel& sphere() const noexcept { return sphere_; }
  int degree() const noexcept { return degree_; }
  double fluid_limit() const noexcept { return fluid_limit_; }
  const GmbModel& gmb() const noexcept { return gmb_; }

  double lambda2() const noexcept { return lambda2_; }
  /// mu'_n = mu_n / mu_e, in element order
  std::span<const double> rigidity_ratios() const noexcept { return ratios_; }
  /// 1 / tau_n, in element order
  std::span<const double> rates() const noexcept { return rates_; }

  /// g(inf) = lambda^2 sum_n mu'_n
  double high_frequency_g() const noexcept;
  /// L_e = 1 / (1 + lambda^2 sum_n mu'_n)
  double elastic_amplitude() const noexcept { return 1.0 / (1.0 + high_frequency_g()); }
  /// sum_n L_n, the t -> 0+ value of the regular impulse response
  double initial_regular_value() const noexcept;

 private:
  SphereModel sphere_;
  int degree_;
  double fluid_limit_;
  GmbModel gmb_;
  double lambda2_;
  std::vector<double> ratios_;
  std::vector<double> rates_;
};

/// Normalized Love number F(s) = 1 / (1 + lambda^2 mu(s) / mu_e).
Complex love_laplace(const LoveProblem& problem, Complex s);
/// Physical Love number L_f * F(s).
Complex love_number(const LoveProblem& problem, Complex s);

/// Real polynomial, coefficients in ascending powers of s.
struct Polynomial {
  std::vector<double> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  Complex operator()(Complex s) const;
  double operator()(double s) const;
  Polynomial derivative() const;
};

struct PqPolynomials {
  Polynomial p;  // prod_n (s + 1/tau_n)
  Polynomial q;  // p + lambda^2 sum_n mu'_n s prod_{n' != n} (s + 1/tau_n')
};

/// Built by convolving monomial factors in descending-tau order.
PqPolynomials pq_polynomials(const LoveProblem& problem);

/// One relaxation mode: inverse time s_n < 0 and amplitude L_n.
struct Mode {
  double s;
  double amp;
  bool operator==(const Mode&) const = default;
};

/// L(t) = L_e delta(t) + sum_n L_n exp(s_n t). Modes sorted by ascending s.
struct RelaxationSolution {
  double elastic_amp = 0.0;
  std::vector<Mode> modes;
  bool normalized = true;

  /// Multiply every amplitude by the fluid limit.
  RelaxationSolution scaled(double fluid_limit) const;
};

/// Roots of Q found by bracketing each one between consecutive poles of mu(s)
/// (the rightmost one in (-1/tau_max, 0)); residues L_n = P(s_n)/Q'(s_n).
RelaxationSolution relaxation_spectrum(const LoveProblem& problem);

/// Real roots of a polynomial of degree 1..4 by radicals (quadratic formula,
/// trigonometric cubic, Ferrari quartic), ascending. Degree >= 5 throws
/// ErrorCode::Unsupported.
std::vector<double> closed_form_roots(const Polynomial& poly);

struct RootCrossCheck {
  std::vector<double> bracketed;
  std::optional<std::vector<double>> closed_form;  // N <= 4 only
  double max_rel_deviation = 0.0;
  std::optional<std::string> warning;
};

/// Bracketed roots of Q next to the radical solution when N <= 4. Deviation
/// above `tolerance` produces a warning; the bracketed roots are authoritative.
RootCrossCheck cross_check_roots(const LoveProblem& problem, double tolerance = 1e-10);

struct ImpulseValue {
  double regular;          // sum_n L_n exp(s_n t)
  double delta_amplitude;  // L_e, weight of delta(t)
};

ImpulseValue impulse_response(const RelaxationSolution& sol, double t);

/// Response to a unit step load: L_e + sum_n L_n (1 - exp(s_n t)) / (-s_n).
double heaviside_load_response(const RelaxationSolution& sol, double t);

/// |L_e + sum_n L_n / (-s_n) - 1| for a normalized solution.
double sum_rule_residual(const RelaxationSolution& sol);

}  // namespace gmblove
