/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gmblove/random_models.hpp"

#include <cmath>

namespace gmblove {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

GmbModel random_gmb(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) fail(ErrorCode::Domain, "a GMB needs at least one Maxwell element");
  std::vector<MaxwellElement> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mu = std::pow(10.0, 8.0 + 6.0 * uniform01(rng));
    const double eta = std::pow(10.0, 18.0 + 6.0 * uniform01(rng));
    elements.push_back({mu, eta});
  }
  return GmbModel(std::move(elements));
}

SphereModel earth_like_sphere(double mu_e) {
  return SphereModel::from_surface_gravity(9.81, 6.371e6, mu_e);
}

LoveProblem random_problem(std::size_t n, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GmbModel gmb = random_gmb(n, rng);
  const SphereModel sphere = earth_like_sphere(gmb.total_rigidity());
  return LoveProblem(sphere, degree, 1.0, std::move(gmb));
}

}  // namespace gmblove
