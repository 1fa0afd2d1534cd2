/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gmblove/love.hpp"
#include "gmblove/numeric.hpp"
#include "gmblove/radicals.hpp"
#include "gmblove/random_models.hpp"
#include "oracles.hpp"

using gmblove::Complex;
using gmblove::ErrorCode;
using gmblove::GmbModel;
using gmblove::LoveProblem;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const gmblove::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

/// h(s) = 1 + g(s) and h'(s) from the definition, in long double.
std::pair<long double, long double> h_and_slope(const LoveProblem& pr, long double s) {
  long double h = 1.0L;
  long double dh = 0.0L;
  for (std::size_t i = 0; i < pr.rates().size(); ++i) {
    const long double a = pr.rates()[i];
    const long double w = static_cast<long double>(pr.lambda2()) * pr.rigidity_ratios()[i];
    h += w * s / (s + a);
    dh += w * a / ((s + a) * (s + a));
  }
  return {h, dh};
}

}  // namespace

TEST_CASE("lambda squared") {
  // g = 9.81, a = 6371 km, G = 6.67e-11, mu_e = 200 GPa
  const auto sphere = gmblove::SphereModel::from_surface_gravity(9.81, 6.371e6, 200e9);
  CHECK(sphere.rho == doctest::Approx(5.51e3).epsilon(2e-3));
  CHECK(sphere.surface_gravity() == doctest::Approx(9.81).epsilon(1e-14));
  const double ratio = sphere.mu_e / (sphere.rho * 9.81 * sphere.radius);
  CHECK(ratio > 0.57);
  CHECK(ratio < 0.61);
  CHECK(gmblove::lambda_squared(sphere, 2) == doctest::Approx(9.5 * ratio).epsilon(1e-14));

  // a sphere with mu_e / (rho g a) = 0.60 exactly gives 9.5 * 0.60 = 5.7
  const double mu_06 = 0.60 * sphere.rho * 9.81 * sphere.radius;
  const gmblove::SphereModel s06{sphere.rho, sphere.radius, mu_06};
  CHECK(gmblove::lambda_squared(s06, 2) == doctest::Approx(5.7).epsilon(1e-12));

  const gmblove::SphereModel doubled{sphere.rho, sphere.radius, 2.0 * sphere.mu_e};
  CHECK(gmblove::lambda_squared(doubled, 3) == doctest::Approx(2.0 * gmblove::lambda_squared(sphere, 3)).epsilon(1e-15));
  CHECK(code_of([&] { gmblove::lambda_squared(sphere, 0); }) == ErrorCode::Domain);
  CHECK(gmblove::degree_note(1).has_value());
  CHECK_FALSE(gmblove::degree_note(2).has_value());
}

TEST_CASE("normalized Love number in the Laplace domain") {
  const auto pr = oracle::single_element(1.0, 1.0);
  CHECK(std::abs(gmblove::love_laplace(pr, 1.0) - 2.0 / 3.0) < 1e-15);
  CHECK(gmblove::love_laplace(pr, 0.0) == Complex(1.0));
  std::mt19937_64 rng(1);
  const auto random = oracle::problem_for(oracle::random_model(rng, 4), 2);
  CHECK(gmblove::love_laplace(random, 0.0) == Complex(1.0));
  const Complex far = gmblove::love_laplace(random, 1e8 / random.gmb().tau_min());
  CHECK(std::abs(far - random.elastic_amplitude()) <= 1e-6 * random.elastic_amplitude());
  const double pole = gmblove::modulus_poles(random.gmb())[1];
  CHECK(code_of([&] { gmblove::love_laplace(random, pole); }) == ErrorCode::Pole);
  CHECK(std::abs(gmblove::love_laplace(random, pole * (1.0 - 1e-9))) < 1e-6);
  const LoveProblem scaled(random.sphere(), 2, -0.75, random.gmb());
  CHECK(std::abs(gmblove::love_number(scaled, 1e-9) - -0.75 * gmblove::love_laplace(random, 1e-9)) < 1e-15);
}

TEST_CASE("P and Q polynomials") {
  const double tau = 3.0;
  const auto pr = oracle::single_element(0.5, tau);
  const auto [p, q] = gmblove::pq_polynomials(pr);
  REQUIRE(p.degree() == 1);
  REQUIRE(q.degree() == 1);
  CHECK(p.coeffs[0] == doctest::Approx(1.0 / tau));
  CHECK(p.coeffs[1] == 1.0);
  CHECK(q.coeffs[0] == doctest::Approx(1.0 / tau));
  CHECK(q.coeffs[1] == doctest::Approx(1.5));

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto random = oracle::problem_for(oracle::random_model(rng, 1 + trial % 6), 2);
    const auto pq = gmblove::pq_polynomials(random);
    double prod = 1.0;
    for (double r : random.rates()) prod *= r;
    CHECK(pq.p.coeffs[0] == doctest::Approx(prod).epsilon(1e-14));
    CHECK(pq.q.coeffs[0] == doctest::Approx(prod).epsilon(1e-14));
    CHECK(pq.q.coeffs.back() == doctest::Approx(1.0 / random.elastic_amplitude()).epsilon(1e-14));
    for (int i = 0; i < 10; ++i) {
      const Complex s = std::polar(oracle::log_uniform(rng, 1e-2, 1e2) / random.gmb().tau_max(),
                                   std::numbers::pi * (gmblove::uniform01(rng) - 0.5));
      const Complex ratio = pq.p(s) / pq.q(s);
      const Complex f = gmblove::love_laplace(random, s);
      CHECK(std::abs(ratio - f) <= 1e-12 * std::abs(f));
    }
  }
}

TEST_CASE("single-element spectrum") {
  const auto unit = gmblove::relaxation_spectrum(oracle::single_element(1.0, 1.0));
  REQUIRE(unit.modes.size() == 1);
  CHECK(unit.modes[0].s == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(unit.elastic_amp == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(unit.modes[0].amp == doctest::Approx(0.25).epsilon(1e-14));

  for (double strength : {0.01, 3.0, 250.0}) {
    const double tau = 7.5e9;
    const auto sol = gmblove::relaxation_spectrum(oracle::single_element(strength, tau));
    CHECK(sol.modes[0].s == doctest::Approx(-1.0 / (tau * (1.0 + strength))).epsilon(1e-13));
    CHECK(sol.elastic_amp == doctest::Approx(1.0 / (1.0 + strength)).epsilon(1e-15));
    CHECK(sol.modes[0].amp ==
          doctest::Approx(strength / (tau * (1.0 + strength) * (1.0 + strength))).epsilon(1e-12));
  }
}

TEST_CASE("stability and sum rules on random problems") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = oracle::uniform_int(rng, 1, 10);
    const int degree = std::array{2, 10, 100}[static_cast<std::size_t>(trial % 3)];
    const auto pr = gmblove::random_problem(static_cast<std::size_t>(n), degree, 1000u + static_cast<unsigned>(trial));
    CAPTURE(trial);
    const auto sol = gmblove::relaxation_spectrum(pr);
    REQUIRE(sol.modes.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < sol.modes.size(); ++i) {
      const auto [h, dh] = h_and_slope(pr, sol.modes[i].s);
      CHECK(sol.modes[i].s < 0.0);
      if (i > 0) CHECK(sol.modes[i - 1].s < sol.modes[i].s);
      CHECK(std::abs(h) / std::abs(dh * sol.modes[i].s) <= 1e-10);
      CHECK(sol.modes[i].amp > 0.0);
    }
    CHECK(gmblove::sum_rule_residual(sol) <= 1e-10);
    double g_inf = 0.0;
    for (double r : pr.rigidity_ratios()) g_inf += r;
    CHECK(std::abs(sol.elastic_amp - 1.0 / (1.0 + pr.lambda2() * g_inf)) <= 1e-12 * sol.elastic_amp);
  }
}

TEST_CASE("each root sits between its pole and the zero of the modulus") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pr = oracle::problem_for(oracle::random_model(rng, oracle::uniform_int(rng, 1, 10)), 2);
    const auto poles = gmblove::modulus_poles(pr.gmb());
    const auto zeros = gmblove::modulus_zeros(pr.gmb());
    const auto sol = gmblove::relaxation_spectrum(pr);
    for (std::size_t i = 0; i < poles.size(); ++i) {
      CHECK(poles[i] < sol.modes[i].s);
      CHECK(sol.modes[i].s < zeros[i]);
    }
  }
}

TEST_CASE("radical solvers") {
  const auto quad = gmblove::solve_quadratic(1.0, -3.0, 2.0);
  CHECK(quad == std::vector<double>{1.0, 2.0});
  CHECK(gmblove::solve_quadratic(1.0, 0.0, 1.0).empty());
  // (x + 1)(x + 2)(x + 3)(x + 4)
  const auto quart = gmblove::solve_quartic(1.0, 10.0, 35.0, 50.0, 24.0);
  REQUIRE(quart.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(quart[static_cast<std::size_t>(i)] == doctest::Approx(-4.0 + i).epsilon(1e-12));
  // (x - 1)(x + 1)(x - 2)(x + 2): biquadratic
  const auto bi = gmblove::solve_quartic(1.0, 0.0, -5.0, 0.0, 4.0);
  REQUIRE(bi.size() == 4);
  CHECK(bi[0] == doctest::Approx(-2.0));
  CHECK(bi[3] == doctest::Approx(2.0));
  const auto cub = gmblove::solve_cubic(2.0, -12.0, 22.0, -12.0);
  REQUIRE(cub.size() == 3);
  CHECK(cub[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(gmblove::solve_cubic(1.0, 0.0, 0.0, -8.0) == std::vector<double>{2.0});

  using Mp = gmblove::MpReal<50>;
  const auto mp = gmblove::solve_quartic(Mp(1), Mp(10), Mp(35), Mp(50), Mp(24));
  CHECK(gmblove::abs_value(Mp(mp[1] + 3)) < Mp(1e-45));

  const gmblove::Polynomial poly{{24.0, 50.0, 35.0, 10.0, 1.0}};
  CHECK(gmblove::closed_form_roots(poly).size() == 4);
  CHECK(code_of([] { gmblove::closed_form_roots(gmblove::Polynomial{{1, 1, 1, 1, 1, 1}}); }) == ErrorCode::Unsupported);
}

TEST_CASE("radical and bracketed roots agree for N <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto pr = gmblove::random_problem(static_cast<std::size_t>(n), 2, 5000u + static_cast<unsigned>(100 * n + trial));
      const auto check = gmblove::cross_check_roots(pr);
      REQUIRE(check.closed_form.has_value());
      CAPTURE(n);
      CAPTURE(trial);
      CHECK(check.closed_form->size() == static_cast<std::size_t>(n));
      CHECK(check.max_rel_deviation <= 1e-10);
      CHECK_FALSE(check.warning.has_value());
    }
  }
  const auto five = gmblove::cross_check_roots(gmblove::random_problem(5, 2, 1));
  CHECK_FALSE(five.closed_form.has_value());
  CHECK(five.bracketed.size() == 5);
}

TEST_CASE("partial fractions reproduce the Laplace-domain Love number") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pr = oracle::problem_for(oracle::random_model(rng, oracle::uniform_int(rng, 1, 8)), 2);
    const auto sol = gmblove::relaxation_spectrum(pr);
    for (int i = 0; i < 20; ++i) {
      const double s = std::pow(10.0, -3.0 + 6.0 * i / 19.0) / pr.gmb().tau_max();
      const double rebuilt = static_cast<double>(oracle::partial_fraction_derivative(sol, s, 0));
      const double direct = gmblove::love_laplace(pr, s).real();
      CHECK(std::abs(rebuilt - direct) <= 1e-12 * direct);
    }
  }
}

TEST_CASE("time-domain responses") {
  const auto unit = gmblove::relaxation_spectrum(oracle::single_element(1.0, 1.0));
  CHECK(gmblove::impulse_response(unit, 2.0).regular == doctest::Approx(0.25 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(gmblove::impulse_response(unit, 2.0).delta_amplitude == doctest::Approx(0.5));
  CHECK(gmblove::heaviside_load_response(unit, 0.0) == doctest::Approx(0.5));
  CHECK(code_of([&] { gmblove::impulse_response(unit, -1.0); }) == ErrorCode::Domain);
  CHECK(code_of([&] { gmblove::heaviside_load_response(unit, -1.0); }) == ErrorCode::Domain);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pr = oracle::problem_for(oracle::random_model(rng, oracle::uniform_int(rng, 1, 8)), 2);
    const auto sol = gmblove::relaxation_spectrum(pr);
    double initial = 0.0;
    for (const auto& m : sol.modes) initial += m.amp;
    CHECK(gmblove::impulse_response(sol, 0.0).regular == doctest::Approx(initial).epsilon(1e-15));
    CHECK(initial == doctest::Approx(pr.initial_regular_value()).epsilon(1e-12));
    const double late = 1e4 / -sol.modes.back().s;
    CHECK(gmblove::impulse_response(sol, late).regular <= 1e-300);
    CHECK(gmblove::heaviside_load_response(sol, late) == doctest::Approx(1.0).epsilon(1e-10));
    double prev = gmblove::heaviside_load_response(sol, 0.0);
    for (int i = 0; i <= 60; ++i) {
      const double t = std::pow(10.0, -2.0 + 8.0 * i / 60.0) * pr.gmb().tau_min();
      const double v = gmblove::heaviside_load_response(sol, t);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("physical scaling and merging") {
  const auto sol = gmblove::relaxation_spectrum(oracle::single_element(1.0, 1.0));
  const auto scaled = sol.scaled(-2.0);
  CHECK_FALSE(scaled.normalized);
  CHECK(scaled.elastic_amp == -1.0);
  CHECK(scaled.modes[0].amp == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(scaled.modes[0].s == sol.modes[0].s);

  const auto sphere = gmblove::earth_like_sphere(3e10);
  const LoveProblem dup(sphere, 2, 1.0, GmbModel({{1e10, 1e20}, {2e10, 2e20}}));
  CHECK(dup.gmb().size() == 1);
  CHECK(gmblove::relaxation_spectrum(dup).modes.size() == 1);
}
