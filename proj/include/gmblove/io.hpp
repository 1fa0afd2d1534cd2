/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// JSON forms of the model types:
//   GmbModel     {"elements": [{"mu_pa": f, "eta_pas": f}, ...]}
//   PowerLawGmb  {"p": i, "q": i, "mu_star_pa": f, "eta_star_pas": f, "n_elements": i | "infinite"}
//   LoveProblem  {"sphere": {"rho": f, "radius": f, "mu_e": f[, "newton_g": f]},
//                 "degree": i, "fluid_limit": f, "gmb": GmbModel}
//   PwConfig     {"n_max": i, "precision_digits": i, "acceleration": "none" | "rho", "target_tol": f}
// Malformed documents raise ErrorCode::Parse; well-formed documents with
// invalid values raise ErrorCode::Domain.

#include <string>
#include <string_view>

#include "gmblove/love.hpp"
#include "gmblove/postwidder.hpp"
#include "gmblove/powerlaw.hpp"
#include "gmblove/rheology.hpp"

namespace gmblove {

GmbModel parse_gmb_model(std::string_view json);
std::string dump_gmb_model(const GmbModel& model);

PowerLawGmb parse_powerlaw(std::string_view json);
std::string dump_powerlaw(const PowerLawGmb& body);

LoveProblem parse_love_problem(std::string_view json);
std::string dump_love_problem(const LoveProblem& problem);

PwConfig parse_pw_config(std::string_view json);
std::string dump_pw_config(const PwConfig& config);

std::string dump_relaxation_solution(const RelaxationSolution& sol);

}  // namespace gmblove
