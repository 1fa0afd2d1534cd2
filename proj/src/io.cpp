/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gmblove/io.hpp"

#include "json.hpp"

namespace gmblove {

using nlohmann::json;

namespace {

template <class Fn>
auto parsing(std::string_view what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string(what) + ": " + e.what());
  }
}

json parse_document(std::string_view text) {
  json doc = json::parse(text.begin(), text.end());
  if (!doc.is_object()) fail(ErrorCode::Parse, "expected a JSON object at the top level");
  return doc;
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) fail(ErrorCode::Parse, "expected a JSON object holding \"" + std::string(key) + "\"");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCode::Parse, "missing field \"" + std::string(key) + "\"");
  return *it;
}

double number(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number()) fail(ErrorCode::Parse, "field \"" + std::string(key) + "\" must be a number");
  return v.get<double>();
}

long integer(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) fail(ErrorCode::Parse, "field \"" + std::string(key) + "\" must be an integer");
  return v.get<long>();
}

GmbModel gmb_from(const json& doc) {
  const json& elements = field(doc, "elements");
  if (!elements.is_array()) fail(ErrorCode::Parse, "\"elements\" must be an array");
  std::vector<MaxwellElement> out;
  for (const auto& e : elements) out.push_back({number(e, "mu_pa"), number(e, "eta_pas")});
  return GmbModel(std::move(out));
}

json gmb_to(const GmbModel& model) {
  json elements = json::array();
  for (const auto& e : model.elements()) elements.push_back({{"mu_pa", e.mu}, {"eta_pas", e.eta}});
  return {{"elements", elements}};
}

}  // namespace

GmbModel parse_gmb_model(std::string_view text) {
  return parsing("GMB model", [&] { return gmb_from(parse_document(text)); });
}

std::string dump_gmb_model(const GmbModel& model) { return gmb_to(model).dump(2); }

PowerLawGmb parse_powerlaw(std::string_view text) {
  return parsing("power-law GMB", [&] {
    const json doc = parse_document(text);
    PowerLawGmb body;
    body.p = static_cast<int>(integer(doc, "p"));
    body.q = static_cast<int>(integer(doc, "q"));
    body.mu_star = number(doc, "mu_star_pa");
    body.eta_star = number(doc, "eta_star_pas");
    const json& n = field(doc, "n_elements");
    if (n.is_string()) {
      if (n.get<std::string>() != "infinite")
        fail(ErrorCode::Parse, "\"n_elements\" must be an integer or \"infinite\"");
    } else if (n.is_number_integer()) {
      body.n_elements = n.get<long>();
    } else {
      fail(ErrorCode::Parse, "\"n_elements\" must be an integer or \"infinite\"");
    }
    validate(body);
    return body;
  });
}

std::string dump_powerlaw(const PowerLawGmb& body) {
  json doc{{"p", body.p}, {"q", body.q}, {"mu_star_pa", body.mu_star}, {"eta_star_pas", body.eta_star}};
  if (body.n_elements)
    doc["n_elements"] = *body.n_elements;
  else
    doc["n_elements"] = "infinite";
  return doc.dump(2);
}

LoveProblem parse_love_problem(std::string_view text) {
  return parsing("Love problem", [&] {
    const json doc = parse_document(text);
    const json& s = field(doc, "sphere");
    SphereModel sphere{number(s, "rho"), number(s, "radius"), number(s, "mu_e")};
    if (s.contains("newton_g")) sphere.newton_g = number(s, "newton_g");
    validate(sphere);
    const long degree = integer(doc, "degree");
    return LoveProblem(sphere, static_cast<int>(degree), number(doc, "fluid_limit"), gmb_from(field(doc, "gmb")));
  });
}

std::string dump_love_problem(const LoveProblem& problem) {
  const auto& s = problem.sphere();
  json doc{{"sphere", {{"rho", s.rho}, {"radius", s.radius}, {"mu_e", s.mu_e}, {"newton_g", s.newton_g}}},
           {"degree", problem.degree()},
           {"fluid_limit", problem.fluid_limit()},
           {"gmb", gmb_to(problem.gmb())}};
  return doc.dump(2);
}

PwConfig parse_pw_config(std::string_view text) {
  return parsing("Post-Widder configuration", [&] {
    const json doc = parse_document(text);
    PwConfig config;
    if (doc.contains("n_max")) config.n_max = static_cast<int>(integer(doc, "n_max"));
    if (doc.contains("precision_digits")) config.precision_digits = static_cast<int>(integer(doc, "precision_digits"));
    if (doc.contains("acceleration")) {
      const json& a = doc.at("acceleration");
      if (a == "rho")
        config.acceleration = Acceleration::Rho;
      else if (a == "none")
        config.acceleration = Acceleration::None;
      else
        fail(ErrorCode::Parse, "\"acceleration\" must be \"none\" or \"rho\"");
    }
    if (doc.contains("target_tol")) config.target_tol = number(doc, "target_tol");
    validate(config);
    return config;
  });
}

std::string dump_pw_config(const PwConfig& config) {
  json doc{{"n_max", config.n_max},
           {"precision_digits", resolved_precision_digits(config)},
           {"acceleration", config.acceleration == Acceleration::Rho ? "rho" : "none"},
           {"target_tol", config.target_tol}};
  return doc.dump(2);
}

std::string dump_relaxation_solution(const RelaxationSolution& sol) {
  json modes = json::array();
  for (const auto& m : sol.modes) modes.push_back({{"s", m.s}, {"amp", m.amp}});
  json doc{{"elastic_amp", sol.elastic_amp}, {"normalized", sol.normalized}, {"modes", modes}};
  return doc.dump(2);
}

}  // namespace gmblove
