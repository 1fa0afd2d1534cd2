/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <random>

#include "gmblove/love.hpp"
#include "gmblove/rheology.hpp"

namespace gmblove {

/// Uniform draw in [0, 1) from the top 53 bits; reproducible across platforms.
double uniform01(std::mt19937_64& rng);

/// Rigidities log-uniform in [1e8, 1e14] Pa, viscosities log-uniform in
/// [1e18, 1e24] Pa s.
GmbModel random_gmb(std::size_t n, std::mt19937_64& rng);

/// Earth-sized sphere (g = 9.81 m/s^2, a = 6371 km) with the given rigidity.
SphereModel earth_like_sphere(double mu_e);

/// Random N-element problem on an Earth-sized sphere whose elastic rigidity is
/// the instantaneous rigidity of the GMB; fluid limit 1.
LoveProblem random_problem(std::size_t n, int degree, std::uint64_t seed);

}  // namespace gmblove
