/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gmblove/love.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "gmblove/numeric.hpp"
#include "gmblove/radicals.hpp"
#include "gmblove/roots.hpp"

namespace gmblove {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) fail(ErrorCode::Domain, "time must be finite and >= 0");
}

// descending tau == ascending rate
std::vector<std::size_t> descending_tau_order(const LoveProblem& problem) {
  std::vector<std::size_t> order(problem.rates().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return problem.rates()[a] < problem.rates()[b]; });
  return order;
}

template <class T>
std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Ascending coefficients of P and Q in working type T.
template <class T>
std::pair<std::vector<T>, std::vector<T>> pq_coefficients(const LoveProblem& problem) {
  const auto order = descending_tau_order(problem);
  const auto rates = problem.rates();
  const auto ratios = problem.rigidity_ratios();

  std::vector<T> p{T(1)};
  for (std::size_t idx : order) p = multiply<T>(p, {T(rates[idx]), T(1)});

  std::vector<T> q = p;
  for (std::size_t n : order) {
    std::vector<T> term{T(0), T(1)};  // s
    for (std::size_t m : order)
      if (m != n) term = multiply<T>(term, {T(rates[m]), T(1)});
    const T weight = T(problem.lambda2()) * T(ratios[n]);
    for (std::size_t k = 0; k < term.size(); ++k) q[k] += weight * term[k];
  }
  return {std::move(p), std::move(q)};
}

template <class T>
std::vector<T> radical_roots(const std::vector<T>& c) {
  switch (c.size()) {
    case 2: return solve_linear(c[1], c[0]);
    case 3: return solve_quadratic(c[2], c[1], c[0]);
    case 4: return solve_cubic(c[3], c[2], c[1], c[0]);
    case 5: return solve_quartic(c[4], c[3], c[2], c[1], c[0]);
    default: break;
  }
  fail(ErrorCode::Unsupported, "no solution by radicals for degree " + std::to_string(c.size() - 1) +
                                   " (only degrees 1 to 4)");
}

// Working type for the radical cross-check. Relaxation times spread over many
// decades make the shifted (depressed) forms cancel badly in double.
using RadicalReal = MpReal<100>;

// 1 + g(s) on the real axis and its derivative, evaluated in long double
struct RealLove {
  const LoveProblem& problem;

  long double h(long double s) const {
    long double sum = 0.0L;
    const auto ratios = problem.rigidity_ratios();
    const auto rates = problem.rates();
    for (std::size_t n = 0; n < rates.size(); ++n) sum += ratios[n] * s / (s + rates[n]);
    return 1.0L + static_cast<long double>(problem.lambda2()) * sum;
  }

  long double dh(long double s) const {
    long double sum = 0.0L;
    const auto ratios = problem.rigidity_ratios();
    const auto rates = problem.rates();
    for (std::size_t n = 0; n < rates.size(); ++n) {
      const long double shifted = s + rates[n];
      sum += ratios[n] * rates[n] / (shifted * shifted);
    }
    return static_cast<long double>(problem.lambda2()) * sum;
  }
};

}  // namespace

double SphereModel::surface_gravity() const noexcept {
  return 4.0 / 3.0 * std::numbers::pi * newton_g * rho * radius;
}

SphereModel SphereModel::from_surface_gravity(double g, double radius, double mu_e, double newton_g) {
  if (!(g > 0.0) || !(radius > 0.0) || !(newton_g > 0.0))
    fail(ErrorCode::Domain, "surface gravity, radius and G must be > 0");
  const double rho = 3.0 * g / (4.0 * std::numbers::pi * newton_g * radius);
  SphereModel sphere{rho, radius, mu_e, newton_g};
  validate(sphere);
  return sphere;
}

void validate(const SphereModel& sphere) {
  const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(sphere.rho)) fail(ErrorCode::Domain, "sphere density must be finite and > 0");
  if (!positive(sphere.radius)) fail(ErrorCode::Domain, "sphere radius must be finite and > 0");
  if (!positive(sphere.mu_e)) fail(ErrorCode::Domain, "elastic rigidity mu_e must be finite and > 0");
  if (!positive(sphere.newton_g)) fail(ErrorCode::Domain, "gravitational constant must be finite and > 0");
}

double lambda_squared(const SphereModel& sphere, int degree) {
  validate(sphere);
  if (degree < 1) fail(ErrorCode::Domain, "harmonic degree must be >= 1");
  const double l = degree;
  const double geometric = (2.0 * l * l + 4.0 * l + 3.0) / l;
  return geometric * sphere.mu_e / (sphere.rho * sphere.surface_gravity() * sphere.radius);
}

std::optional<std::string> degree_note(int degree) {
  if (degree == 1)
    return std::string(
        "degree 1: the response depends on the choice of reference frame; values are "
        "numerically well defined but their physical reading is up to the caller");
  return std::nullopt;
}

LoveProblem::LoveProblem(SphereModel sphere, int degree, double fluid_limit, GmbModel gmb)
    : sphere_(sphere),
      degree_(degree),
      fluid_limit_(fluid_limit),
      gmb_(merge_duplicate_taus(gmb)),
      lambda2_(lambda_squared(sphere, degree)) {
  if (!std::isfinite(fluid_limit)) fail(ErrorCode::Domain, "fluid limit must be finite");
  if (!(lambda2_ > 0.0) || !std::isfinite(lambda2_)) fail(ErrorCode::Domain, "lambda^2 must be finite and > 0");
  for (const auto& e : gmb_.elements()) {
    ratios_.push_back(e.mu / sphere_.mu_e);
    rates_.push_back(1.0 / e.tau());
  }
}

double LoveProblem::high_frequency_g() const noexcept {
  return lambda2_ * std::accumulate(ratios_.begin(), ratios_.end(), 0.0);
}

double LoveProblem::initial_regular_value() const noexcept {
  // F(s) - L_e ~ (lambda^2 sum mu'_n / tau_n) / ((1 + g_inf)^2 s) as s -> inf
  double weighted = 0.0;
  for (std::size_t n = 0; n < rates_.size(); ++n) weighted += ratios_[n] * rates_[n];
  const double denom = 1.0 + high_frequency_g();
  return lambda2_ * weighted / (denom * denom);
}

Complex love_laplace(const LoveProblem& problem, Complex s) {
  const Complex mu = complex_modulus(problem.gmb(), s);
  const Complex denom = 1.0 + problem.lambda2() * mu / problem.sphere().mu_e;
  if (std::abs(denom) == 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "Love number pole at s = (" << s.real() << ", " << s.imag() << ")";
    fail(ErrorCode::Pole, os.str());
  }
  return 1.0 / denom;
}

Complex love_number(const LoveProblem& problem, Complex s) {
  return problem.fluid_limit() * love_laplace(problem, s);
}

Complex Polynomial::operator()(Complex s) const {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
  return acc;
}

double Polynomial::operator()(double s) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs.size() <= 1) return {{0.0}};
  std::vector<double> d(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs[k];
  return {std::move(d)};
}

PqPolynomials pq_polynomials(const LoveProblem& problem) {
  auto [p, q] = pq_coefficients<double>(problem);
  return {Polynomial{std::move(p)}, Polynomial{std::move(q)}};
}

RelaxationSolution relaxation_spectrum(const LoveProblem& problem) {
  const auto poles = modulus_poles(problem.gmb());
  const RealLove love{problem};
  const auto f = [&](double s) { return static_cast<double>(love.h(s)); };

  // 1 + g(s) rises from -inf to +inf between consecutive poles and from -inf
  // to 1 on (pole_max, 0); it stays above 1 left of the first pole.
  std::vector<double> roots;
  roots.reserve(poles.size());
  for (std::size_t i = 0; i + 1 < poles.size(); ++i) roots.push_back(bracketed_root(f, poles[i], poles[i + 1]));
  roots.push_back(bracketed_root(f, poles.back(), 0.0));
  if (roots.size() != problem.gmb().size())
    fail(ErrorCode::Bracket, "root count does not match the number of Maxwell elements");

  RelaxationSolution sol;
  sol.elastic_amp = problem.elastic_amplitude();
  sol.normalized = true;
  for (double s : roots) {
    if (!(s < 0.0)) fail(ErrorCode::Bracket, "relaxation root is not strictly negative");
    // P(s_n) / Q'(s_n) = 1 / h'(s_n) since Q = P h and h(s_n) = 0
    sol.modes.push_back({s, static_cast<double>(1.0L / love.dh(s))});
  }
  for (std::size_t i = 1; i < sol.modes.size(); ++i)
    if (!(sol.modes[i - 1].s < sol.modes[i].s))
      fail(ErrorCode::Bracket, "relaxation roots are not distinct");
  return sol;
}

RelaxationSolution RelaxationSolution::scaled(double fluid_limit) const {
  RelaxationSolution out = *this;
  out.elastic_amp *= fluid_limit;
  for (auto& m : out.modes) m.amp *= fluid_limit;
  out.normalized = false;
  return out;
}

std::vector<double> closed_form_roots(const Polynomial& poly) { return radical_roots(poly.coeffs); }

RootCrossCheck cross_check_roots(const LoveProblem& problem, double tolerance) {
  RootCrossCheck out;
  for (const auto& m : relaxation_spectrum(problem).modes) out.bracketed.push_back(m.s);
  if (problem.gmb().size() > 4) return out;

  std::vector<double> closed;
  for (const auto& r : radical_roots(pq_coefficients<RadicalReal>(problem).second))
    closed.push_back(static_cast<double>(r));
  if (closed.size() != out.bracketed.size()) {
    out.warning = "closed-form solver returned " + std::to_string(closed.size()) + " real roots, expected " +
                  std::to_string(out.bracketed.size()) + "; using bracketed roots";
    out.max_rel_deviation = std::numeric_limits<double>::infinity();
    out.closed_form = std::move(closed);
    return out;
  }
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const double dev = std::abs(closed[i] - out.bracketed[i]) / std::abs(out.bracketed[i]);
    out.max_rel_deviation = std::max(out.max_rel_deviation, dev);
  }
  if (out.max_rel_deviation > tolerance) {
    std::ostringstream os;
    os << "closed-form and bracketed roots differ by " << out.max_rel_deviation
       << " (relative); using bracketed roots";
    out.warning = os.str();
  }
  out.closed_form = std::move(closed);
  return out;
}

ImpulseValue impulse_response(const RelaxationSolution& sol, double t) {
  require_time(t);
  double regular = 0.0;
  for (const auto& m : sol.modes) regular += m.amp * std::exp(m.s * t);
  return {regular, sol.elastic_amp};
}

double heaviside_load_response(const RelaxationSolution& sol, double t) {
  require_time(t);
  double value = sol.elastic_amp;
  for (const auto& m : sol.modes) value += m.amp * (-std::expm1(m.s * t)) / (-m.s);
  return value;
}

double sum_rule_residual(const RelaxationSolution& sol) {
  double value = sol.elastic_amp;
  for (const auto& m : sol.modes) value += m.amp / (-m.s);
  return std::abs(value - 1.0);
}

}  // namespace gmblove
