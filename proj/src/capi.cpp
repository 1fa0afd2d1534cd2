/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "gmblove/gmblove.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "gmblove/error.hpp"
#include "gmblove/io.hpp"
#include "gmblove/love.hpp"
#include "gmblove/postwidder.hpp"
#include "gmblove/powerlaw.hpp"
#include "gmblove/random_models.hpp"
#include "gmblove/rheology.hpp"

struct gmbl_model {
  gmblove::GmbModel value;
};

struct gmbl_powerlaw {
  gmblove::PowerLawGmb value;
};

struct gmbl_problem {
  gmblove::LoveProblem value;
};

struct gmbl_spectrum {
  gmblove::RelaxationSolution value;
};

namespace {

using gmblove::Complex;
using gmblove::ErrorCode;

thread_local std::string t_last_error;

gmbl_status to_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return GMBL_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return GMBL_ERR_PARSE;
    case ErrorCode::Domain: return GMBL_ERR_DOMAIN;
    case ErrorCode::Pole: return GMBL_ERR_POLE;
    case ErrorCode::Unsupported: return GMBL_ERR_UNSUPPORTED;
    case ErrorCode::Convergence: return GMBL_ERR_CONVERGENCE;
    case ErrorCode::Bracket: return GMBL_ERR_BRACKET;
  }
  return GMBL_ERR_INTERNAL;
}

gmbl_status record(gmbl_status status, const char* message) noexcept {
  try {
    t_last_error = message;
  } catch (...) {
  }
  return status;
}

/// Run `fn`, translating exceptions into status codes.
template <class Fn>
gmbl_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return GMBL_OK;
  } catch (const gmblove::Error& e) {
    return record(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(GMBL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(GMBL_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(GMBL_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) gmblove::fail(ErrorCode::InvalidArgument, what);
}

Complex in(gmbl_complex z) { return {z.re, z.im}; }
gmbl_complex out(Complex z) { return {z.real(), z.imag()}; }

char* copy_string(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

void copy_array(const std::vector<double>& values, double* dst, std::size_t capacity,
                std::size_t* count) {
  require(count != nullptr, "count must not be NULL");
  *count = values.size();
  if (capacity < values.size()) {
    throw gmblove::Error(ErrorCode::InvalidArgument, "buffer too small");
  }
  require(dst != nullptr || values.empty(), "output buffer must not be NULL");
  std::copy(values.begin(), values.end(), dst);
}

/// Like guarded(), but reports a short buffer with its own status.
template <class Fn>
gmbl_status guarded_array(Fn&& fn) noexcept {
  const gmbl_status status = guarded(fn);
  if (status == GMBL_ERR_INVALID_ARGUMENT && t_last_error == "buffer too small") {
    return GMBL_ERR_BUFFER_TOO_SMALL;
  }
  return status;
}

gmblove::PwConfig to_cpp(const gmbl_pw_config& c) {
  gmblove::PwConfig config;
  config.n_max = c.n_max;
  config.precision_digits = c.precision_digits;
  switch (c.acceleration) {
    case GMBL_ACCEL_NONE: config.acceleration = gmblove::Acceleration::None; break;
    case GMBL_ACCEL_RHO: config.acceleration = gmblove::Acceleration::Rho; break;
    default: gmblove::fail(ErrorCode::InvalidArgument, "unknown acceleration");
  }
  config.target_tol = c.target_tol;
  gmblove::validate(config);
  return config;
}

gmbl_pw_config to_c(const gmblove::PwConfig& c) {
  return {c.n_max, c.precision_digits,
          c.acceleration == gmblove::Acceleration::Rho ? GMBL_ACCEL_RHO : GMBL_ACCEL_NONE,
          c.target_tol};
}

}  // namespace

extern "C" {

const char* gmbl_version(void) { return GMBLOVE_VERSION; }

const char* gmbl_status_name(gmbl_status status) {
  switch (status) {
    case GMBL_OK: return "ok";
    case GMBL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GMBL_ERR_PARSE: return "parse error";
    case GMBL_ERR_DOMAIN: return "domain error";
    case GMBL_ERR_POLE: return "pole";
    case GMBL_ERR_UNSUPPORTED: return "unsupported";
    case GMBL_ERR_CONVERGENCE: return "no convergence";
    case GMBL_ERR_BRACKET: return "bracketing failed";
    case GMBL_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case GMBL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gmbl_last_error(void) { return t_last_error.c_str(); }

void gmbl_string_free(char* str) { std::free(str); }

/* ---- generalized Maxwell body ---- */

gmbl_status gmbl_model_create(const double* mu_pa, const double* eta_pas, size_t n,
                              gmbl_model** result) {
  return guarded([&] {
    require(result != nullptr, "out must not be NULL");
    require(n == 0 || (mu_pa != nullptr && eta_pas != nullptr), "element arrays must not be NULL");
    std::vector<gmblove::MaxwellElement> elements(n);
    for (size_t i = 0; i < n; ++i) elements[i] = {mu_pa[i], eta_pas[i]};
    *result = new gmbl_model{gmblove::GmbModel(std::move(elements))};
  });
}

gmbl_status gmbl_model_from_json(const char* json, gmbl_model** result) {
  return guarded([&] {
    require(json != nullptr && result != nullptr, "arguments must not be NULL");
    *result = new gmbl_model{gmblove::parse_gmb_model(json)};
  });
}

gmbl_status gmbl_model_to_json(const gmbl_model* model, char** result) {
  return guarded([&] {
    require(model != nullptr && result != nullptr, "arguments must not be NULL");
    *result = copy_string(gmblove::dump_gmb_model(model->value));
  });
}

void gmbl_model_free(gmbl_model* model) { delete model; }

size_t gmbl_model_size(const gmbl_model* model) { return model ? model->value.size() : 0; }

gmbl_status gmbl_model_element(const gmbl_model* model, size_t index, double* mu_pa,
                               double* eta_pas) {
  return guarded([&] {
    require(model != nullptr && mu_pa != nullptr && eta_pas != nullptr,
            "arguments must not be NULL");
    require(index < model->value.size(), "element index out of range");
    const auto& e = model->value.elements()[index];
    *mu_pa = e.mu;
    *eta_pas = e.eta;
  });
}

gmbl_status gmbl_model_merge(const gmbl_model* model, gmbl_model** result) {
  return guarded([&] {
    require(model != nullptr && result != nullptr, "arguments must not be NULL");
    *result = new gmbl_model{gmblove::merge_duplicate_taus(model->value)};
  });
}

gmbl_status gmbl_modulus(const gmbl_model* model, gmbl_complex s, gmbl_complex* result) {
  return guarded([&] {
    require(model != nullptr && result != nullptr, "arguments must not be NULL");
    *result = out(gmblove::complex_modulus(model->value, in(s)));
  });
}

gmbl_status gmbl_modulus_derivative(const gmbl_model* model, gmbl_complex s, int k,
                                    gmbl_complex* result) {
  return guarded([&] {
    require(model != nullptr && result != nullptr, "arguments must not be NULL");
    *result = out(gmblove::modulus_derivative(model->value, in(s), k));
  });
}

gmbl_status gmbl_modulus_poles(const gmbl_model* model, double* result, size_t capacity,
                               size_t* count) {
  return guarded_array([&] {
    require(model != nullptr, "model must not be NULL");
    copy_array(gmblove::modulus_poles(model->value), result, capacity, count);
  });
}

gmbl_status gmbl_modulus_zeros(const gmbl_model* model, double* result, size_t capacity,
                               size_t* count) {
  return guarded_array([&] {
    require(model != nullptr, "model must not be NULL");
    copy_array(gmblove::modulus_zeros(model->value), result, capacity, count);
  });
}

gmbl_status gmbl_creep_compliance(const gmbl_model* model, gmbl_complex s, gmbl_complex* result) {
  return guarded([&] {
    require(model != nullptr && result != nullptr, "arguments must not be NULL");
    *result = out(gmblove::creep_compliance(model->value, in(s)));
  });
}

gmbl_status gmbl_relaxation_modulus(const gmbl_model* model, gmbl_complex s,
                                    gmbl_complex* result) {
  return guarded([&] {
    require(model != nullptr && result != nullptr, "arguments must not be NULL");
    *result = out(gmblove::relaxation_modulus(model->value, in(s)));
  });
}

/* ---- power-law bodies ---- */

int gmbl_powerlaw_in_region(int p, int q) { return gmblove::in_convergence_region(p, q) ? 1 : 0; }

int gmbl_powerlaw_closed_available(int p, int q) {
  return gmblove::closed_form_available(p, q) ? 1 : 0;
}

gmbl_status gmbl_powerlaw_closed(int p, int q, gmbl_complex z, gmbl_complex* result) {
  return guarded([&] {
    require(result != nullptr, "out must not be NULL");
    *result = out(gmblove::m_closed(in(z), p, q));
  });
}

gmbl_status gmbl_powerlaw_truncated(int p, int q, long n_terms, gmbl_complex z,
                                    gmbl_complex* result) {
  return guarded([&] {
    require(result != nullptr, "out must not be NULL");
    *result = out(gmblove::m_truncated(in(z), p, q, n_terms));
  });
}

gmbl_status gmbl_powerlaw_tail_bound(int p, int q, long n_terms, gmbl_complex z, double* result) {
  return guarded([&] {
    require(result != nullptr, "out must not be NULL");
    *result = gmblove::tail_bound(in(z), p, q, n_terms);
  });
}

gmbl_status gmbl_powerlaw_series(int p, int q, gmbl_complex z, double tolerance,
                                 gmbl_complex* value, double* error_bound, long* n_terms) {
  return guarded([&] {
    require(value != nullptr, "value must not be NULL");
    const auto series = gmblove::m_series(in(z), p, q, tolerance);
    *value = out(series.value);
    if (error_bound) *error_bound = series.error_bound;
    if (n_terms) *n_terms = series.n_terms;
  });
}

gmbl_status gmbl_powerlaw_reciprocity(int p, int q, gmbl_complex z, gmbl_complex* result) {
  return guarded([&] {
    require(result != nullptr, "out must not be NULL");
    *result = out(gmblove::apply_reciprocity(in(z), p, q));
  });
}

gmbl_status gmbl_powerlaw_pole(int p, int q, long n, double* result) {
  return guarded([&] {
    require(result != nullptr, "out must not be NULL");
    *result = gmblove::powerlaw_poles(p, q, n);
  });
}

gmbl_status gmbl_powerlaw_high_freq_limit(int p, double* result) {
  return guarded([&] {
    require(result != nullptr, "out must not be NULL");
    *result = gmblove::high_freq_limit(p);
  });
}

gmbl_status gmbl_powerlaw_from_json(const char* json, gmbl_powerlaw** result) {
  return guarded([&] {
    require(json != nullptr && result != nullptr, "arguments must not be NULL");
    *result = new gmbl_powerlaw{gmblove::parse_powerlaw(json)};
  });
}

gmbl_status gmbl_powerlaw_to_json(const gmbl_powerlaw* body, char** result) {
  return guarded([&] {
    require(body != nullptr && result != nullptr, "arguments must not be NULL");
    *result = copy_string(gmblove::dump_powerlaw(body->value));
  });
}

void gmbl_powerlaw_free(gmbl_powerlaw* body) { delete body; }

gmbl_status gmbl_powerlaw_params(const gmbl_powerlaw* body, int* p, int* q, double* mu_star_pa,
                                 double* eta_star_pas, long* n_elements) {
  return guarded([&] {
    require(body != nullptr, "body must not be NULL");
    const auto& b = body->value;
    if (p) *p = b.p;
    if (q) *q = b.q;
    if (mu_star_pa) *mu_star_pa = b.mu_star;
    if (eta_star_pas) *eta_star_pas = b.eta_star;
    if (n_elements) *n_elements = b.n_elements.value_or(-1);
  });
}

gmbl_status gmbl_powerlaw_modulus(const gmbl_powerlaw* body, gmbl_complex s,
                                  gmbl_complex* result) {
  return guarded([&] {
    require(body != nullptr && result != nullptr, "arguments must not be NULL");
    *result = out(gmblove::powerlaw_modulus(body->value, in(s)));
  });
}

/* ---- Love numbers ---- */

gmbl_status gmbl_problem_from_json(const char* json, gmbl_problem** result) {
  return guarded([&] {
    require(json != nullptr && result != nullptr, "arguments must not be NULL");
    *result = new gmbl_problem{gmblove::parse_love_problem(json)};
  });
}

gmbl_status gmbl_problem_to_json(const gmbl_problem* problem, char** result) {
  return guarded([&] {
    require(problem != nullptr && result != nullptr, "arguments must not be NULL");
    *result = copy_string(gmblove::dump_love_problem(problem->value));
  });
}

gmbl_status gmbl_problem_random(size_t n, int degree, uint64_t seed, gmbl_problem** result) {
  return guarded([&] {
    require(result != nullptr, "out must not be NULL");
    *result = new gmbl_problem{gmblove::random_problem(n, degree, seed)};
  });
}

gmbl_status gmbl_problem_with_fluid_limit(const gmbl_problem* problem, double fluid_limit,
                                          gmbl_problem** result) {
  return guarded([&] {
    require(problem != nullptr && result != nullptr, "arguments must not be NULL");
    const auto& p = problem->value;
    *result = new gmbl_problem{gmblove::LoveProblem(p.sphere(), p.degree(), fluid_limit, p.gmb())};
  });
}

void gmbl_problem_free(gmbl_problem* problem) { delete problem; }

gmbl_status gmbl_problem_get_info(const gmbl_problem* problem, gmbl_problem_info* result) {
  return guarded([&] {
    require(problem != nullptr && result != nullptr, "arguments must not be NULL");
    const auto& p = problem->value;
    *result = {p.degree(),          p.gmb().size(),
               p.lambda2(),         p.fluid_limit(),
               p.elastic_amplitude(), p.initial_regular_value(),
               p.gmb().tau_min(),   p.gmb().tau_max()};
  });
}

const char* gmbl_degree_note(int degree) {
  // Only degree 1 carries a note.
  static const std::string degree_one = gmblove::degree_note(1).value_or("");
  if (degree == 1 && !degree_one.empty()) return degree_one.c_str();
  return nullptr;
}

gmbl_status gmbl_lambda_squared(double rho, double radius, double mu_e, double newton_g,
                                int degree, double* result) {
  return guarded([&] {
    require(result != nullptr, "out must not be NULL");
    *result = gmblove::lambda_squared(gmblove::SphereModel{rho, radius, mu_e, newton_g}, degree);
  });
}

gmbl_status gmbl_love_laplace(const gmbl_problem* problem, gmbl_complex s, gmbl_complex* result) {
  return guarded([&] {
    require(problem != nullptr && result != nullptr, "arguments must not be NULL");
    *result = out(gmblove::love_laplace(problem->value, in(s)));
  });
}

gmbl_status gmbl_spectrum_solve(const gmbl_problem* problem, gmbl_spectrum** result) {
  return guarded([&] {
    require(problem != nullptr && result != nullptr, "arguments must not be NULL");
    *result = new gmbl_spectrum{gmblove::relaxation_spectrum(problem->value)};
  });
}

void gmbl_spectrum_free(gmbl_spectrum* spectrum) { delete spectrum; }

size_t gmbl_spectrum_size(const gmbl_spectrum* spectrum) {
  return spectrum ? spectrum->value.modes.size() : 0;
}

double gmbl_spectrum_elastic_amp(const gmbl_spectrum* spectrum) {
  return spectrum ? spectrum->value.elastic_amp : 0.0;
}

gmbl_status gmbl_spectrum_mode(const gmbl_spectrum* spectrum, size_t index, double* s,
                               double* amp) {
  return guarded([&] {
    require(spectrum != nullptr, "spectrum must not be NULL");
    require(index < spectrum->value.modes.size(), "mode index out of range");
    const auto& m = spectrum->value.modes[index];
    if (s) *s = m.s;
    if (amp) *amp = m.amp;
  });
}

double gmbl_spectrum_sum_rule_residual(const gmbl_spectrum* spectrum) {
  return spectrum ? gmblove::sum_rule_residual(spectrum->value) : 0.0;
}

gmbl_status gmbl_spectrum_to_json(const gmbl_spectrum* spectrum, char** result) {
  return guarded([&] {
    require(spectrum != nullptr && result != nullptr, "arguments must not be NULL");
    *result = copy_string(gmblove::dump_relaxation_solution(spectrum->value));
  });
}

gmbl_status gmbl_impulse_response(const gmbl_spectrum* spectrum, double t, double* regular,
                                  double* delta_amp) {
  return guarded([&] {
    require(spectrum != nullptr, "spectrum must not be NULL");
    const auto value = gmblove::impulse_response(spectrum->value, t);
    if (regular) *regular = value.regular;
    if (delta_amp) *delta_amp = value.delta_amplitude;
  });
}

gmbl_status gmbl_heaviside_response(const gmbl_spectrum* spectrum, double t, double* result) {
  return guarded([&] {
    require(spectrum != nullptr && result != nullptr, "arguments must not be NULL");
    *result = gmblove::heaviside_load_response(spectrum->value, t);
  });
}

gmbl_status gmbl_closed_form_roots(const gmbl_problem* problem, double* result, size_t capacity,
                                   size_t* count, double* max_rel_deviation) {
  return guarded_array([&] {
    require(problem != nullptr, "problem must not be NULL");
    const auto check = gmblove::cross_check_roots(problem->value);
    if (!check.closed_form) {
      gmblove::fail(ErrorCode::Unsupported,
                    "closed-form roots are available for at most 4 elements");
    }
    if (max_rel_deviation) *max_rel_deviation = check.max_rel_deviation;
    copy_array(*check.closed_form, result, capacity, count);
  });
}

/* ---- Post-Widder ---- */

void gmbl_pw_config_default(gmbl_pw_config* config) {
  if (config) *config = to_c(gmblove::PwConfig{});
}

gmbl_status gmbl_pw_config_from_json(const char* json, gmbl_pw_config* result) {
  return guarded([&] {
    require(json != nullptr && result != nullptr, "arguments must not be NULL");
    *result = to_c(gmblove::parse_pw_config(json));
  });
}

gmbl_status gmbl_pw_config_to_json(const gmbl_pw_config* config, char** result) {
  return guarded([&] {
    require(config != nullptr && result != nullptr, "arguments must not be NULL");
    *result = copy_string(gmblove::dump_pw_config(to_cpp(*config)));
  });
}

gmbl_status gmbl_pw_invert(const gmbl_problem* problem, double t, const gmbl_pw_config* config,
                           gmbl_pw_result* result) {
  return guarded([&] {
    require(problem != nullptr && result != nullptr, "arguments must not be NULL");
    const gmblove::PwConfig cfg = config ? to_cpp(*config) : gmblove::PwConfig{};
    const auto r = gmblove::pw_invert(problem->value, t, cfg);
    *result = {r.value, r.error_estimate, r.converged ? 1 : 0, r.precision_digits};
  });
}

}  // extern "C"
