/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "gmblove/io.hpp"
#include "gmblove/random_models.hpp"
#include "oracles.hpp"

using gmblove::ErrorCode;

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

}  // namespace

TEST_CASE("GMB model round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto model = oracle::random_model(rng, oracle::uniform_int(rng, 1, 12));
    const auto back = gmblove::parse_gmb_model(gmblove::dump_gmb_model(model));
    REQUIRE(back.size() == model.size());
    for (std::size_t i = 0; i < model.size(); ++i) {
      CHECK(back.elements()[i].mu == model.elements()[i].mu);
      CHECK(back.elements()[i].eta == model.elements()[i].eta);
    }
  }
  const auto parsed = gmblove::parse_gmb_model(R"({"elements": [{"mu_pa": 3e10, "eta_pas": 1e21}]})");
  CHECK(parsed.elements()[0].tau() == doctest::Approx(1e21 / 3e10));
}

TEST_CASE("power-law body round trip") {
  const auto finite = gmblove::parse_powerlaw(
      R"({"p": 2, "q": 0, "mu_star_pa": 1e10, "eta_star_pas": 1e20, "n_elements": 50})");
  CHECK(gmblove::parse_powerlaw(gmblove::dump_powerlaw(finite)) == finite);
  const auto infinite = gmblove::parse_powerlaw(
      R"({"p": 1, "q": 2, "mu_star_pa": 1e10, "eta_star_pas": 1e20, "n_elements": "infinite"})");
  CHECK(gmblove::parse_powerlaw(gmblove::dump_powerlaw(infinite)) == infinite);
  CHECK(code_of([] {
          gmblove::parse_powerlaw(R"({"p": 1, "q": 2, "mu_star_pa": 1e10, "eta_star_pas": 1e20, "n_elements": "lots"})");
        }) == ErrorCode::Parse);
}

TEST_CASE("Love problem round trip") {
  const auto pr = gmblove::random_problem(5, 3, 9);
  const auto back = gmblove::parse_love_problem(gmblove::dump_love_problem(pr));
  CHECK(back.degree() == 3);
  CHECK(back.fluid_limit() == pr.fluid_limit());
  CHECK(back.lambda2() == pr.lambda2());
  CHECK(back.gmb().size() == pr.gmb().size());
  CHECK(back.sphere().newton_g == pr.sphere().newton_g);
}

TEST_CASE("post-Widder config round trip") {
  const gmblove::PwConfig config{16, 75, gmblove::Acceleration::None, 1e-8};
  CHECK(gmblove::parse_pw_config(gmblove::dump_pw_config(config)) == config);
  CHECK(code_of([] { gmblove::parse_pw_config(R"({"n_max": 16, "precision_digits": 50, "acceleration": "aitken", "target_tol": 1e-6})"); }) ==
        ErrorCode::Parse);
}

TEST_CASE("spectrum dump carries every mode") {
  const auto sol = gmblove::relaxation_spectrum(oracle::single_element(1.0, 1.0));
  const auto text = gmblove::dump_relaxation_solution(sol);
  const auto doc = nlohmann::json::parse(text);
  REQUIRE(doc.at("modes").size() == 1);
  CHECK(doc.at("modes")[0].at("amp").get<double>() == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("parse errors and domain errors are distinguished") {
  CHECK(code_of([] { gmblove::parse_gmb_model("{not json"); }) == ErrorCode::Parse);
  CHECK(code_of([] { gmblove::parse_gmb_model("[]"); }) == ErrorCode::Parse);
  CHECK(code_of([] { gmblove::parse_pw_config("[1, 2]"); }) == ErrorCode::Parse);
  CHECK(code_of([] { gmblove::parse_gmb_model(R"({"elements": 3})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { gmblove::parse_gmb_model(R"({"elements": [{"mu_pa": "big", "eta_pas": 1}]})"); }) ==
        ErrorCode::Parse);
  CHECK(code_of([] { gmblove::parse_gmb_model(R"({"elements": [{"mu_pa": 1e10}]})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { gmblove::parse_gmb_model(R"({"elements": [{"mu_pa": -1e10, "eta_pas": 1e20}]})"); }) ==
        ErrorCode::Domain);
  CHECK(code_of([] { gmblove::parse_gmb_model(R"({"elements": []})"); }) == ErrorCode::Domain);
  CHECK(code_of([] {
          gmblove::parse_love_problem(R"({"sphere": {"rho": 5500, "radius": 6.371e6, "mu_e": 1e11},
            "degree": 2.5, "fluid_limit": 1, "gmb": {"elements": [{"mu_pa": 1e10, "eta_pas": 1e20}]}})");
        }) == ErrorCode::Parse);
  CHECK(code_of([] {
          gmblove::parse_love_problem(R"({"sphere": {"rho": 5500, "radius": 6.371e6, "mu_e": 1e11},
            "degree": 0, "fluid_limit": 1, "gmb": {"elements": [{"mu_pa": 1e10, "eta_pas": 1e20}]}})");
        }) == ErrorCode::Domain);
}
