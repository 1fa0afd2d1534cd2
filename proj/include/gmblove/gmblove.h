/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GMBLOVE_GMBLOVE_H
#define GMBLOVE_GMBLOVE_H

/*
 * C interface to gmblove: generalized Maxwell body rheologies, power-law
 * moduli, Love numbers of the homogeneous incompressible sphere, and their
 * time-domain inversion.
 *
 * Conventions
 *   - Every fallible call returns a gmbl_status; GMBL_OK is 0. On failure
 *     gmbl_last_error() describes the problem (per thread, valid until the
 *     next failing call on that thread). Output arguments are only written
 *     on success.
 *   - Handles are opaque and immutable once created; a handle may be shared
 *     between threads. Release each with its *_free function (NULL is a
 *     no-op).
 *   - Strings returned through char** are heap-allocated; release them with
 *     gmbl_string_free().
 *   - SI units throughout: rigidities in Pa, viscosities in Pa s, times in s.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GMBLOVE_BUILDING)
#define GMBL_API __declspec(dllexport)
#else
#define GMBL_API __declspec(dllimport)
#endif
#else
#define GMBL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gmbl_status {
  GMBL_OK = 0,
  GMBL_ERR_INVALID_ARGUMENT = 1,
  GMBL_ERR_PARSE = 2,
  GMBL_ERR_DOMAIN = 3,
  GMBL_ERR_POLE = 4,
  GMBL_ERR_UNSUPPORTED = 5,
  GMBL_ERR_CONVERGENCE = 6,
  GMBL_ERR_BRACKET = 7,
  GMBL_ERR_BUFFER_TOO_SMALL = 8,
  GMBL_ERR_INTERNAL = 9
} gmbl_status;

typedef struct gmbl_complex {
  double re;
  double im;
} gmbl_complex;

typedef struct gmbl_model gmbl_model;
typedef struct gmbl_powerlaw gmbl_powerlaw;
typedef struct gmbl_problem gmbl_problem;
typedef struct gmbl_spectrum gmbl_spectrum;

GMBL_API const char* gmbl_version(void);
GMBL_API const char* gmbl_status_name(gmbl_status status);
GMBL_API const char* gmbl_last_error(void);
GMBL_API void gmbl_string_free(char* str);

/* ---- generalized Maxwell body ------------------------------------------ */

GMBL_API gmbl_status gmbl_model_create(const double* mu_pa, const double* eta_pas, size_t n,
                                       gmbl_model** out);
GMBL_API gmbl_status gmbl_model_from_json(const char* json, gmbl_model** out);
GMBL_API gmbl_status gmbl_model_to_json(const gmbl_model* model, char** out);
GMBL_API void gmbl_model_free(gmbl_model* model);
GMBL_API size_t gmbl_model_size(const gmbl_model* model);
GMBL_API gmbl_status gmbl_model_element(const gmbl_model* model, size_t index, double* mu_pa,
                                        double* eta_pas);
/* Collapse elements with equal relaxation times (relative tolerance 1e-12). */
GMBL_API gmbl_status gmbl_model_merge(const gmbl_model* model, gmbl_model** out);

GMBL_API gmbl_status gmbl_modulus(const gmbl_model* model, gmbl_complex s, gmbl_complex* out);
GMBL_API gmbl_status gmbl_modulus_derivative(const gmbl_model* model, gmbl_complex s, int k,
                                             gmbl_complex* out);
/* Poles / zeros, ascending. `count` receives the number available; fails with
 * GMBL_ERR_BUFFER_TOO_SMALL when capacity < count. */
GMBL_API gmbl_status gmbl_modulus_poles(const gmbl_model* model, double* out, size_t capacity,
                                        size_t* count);
GMBL_API gmbl_status gmbl_modulus_zeros(const gmbl_model* model, double* out, size_t capacity,
                                        size_t* count);
GMBL_API gmbl_status gmbl_creep_compliance(const gmbl_model* model, gmbl_complex s,
                                           gmbl_complex* out);
GMBL_API gmbl_status gmbl_relaxation_modulus(const gmbl_model* model, gmbl_complex s,
                                             gmbl_complex* out);

/* ---- power-law bodies: M(z; p, q) = sum_n z / (n^p z + n^q) ------------- */

GMBL_API int gmbl_powerlaw_in_region(int p, int q);
GMBL_API int gmbl_powerlaw_closed_available(int p, int q);
GMBL_API gmbl_status gmbl_powerlaw_closed(int p, int q, gmbl_complex z, gmbl_complex* out);
GMBL_API gmbl_status gmbl_powerlaw_truncated(int p, int q, long n_terms, gmbl_complex z,
                                             gmbl_complex* out);
GMBL_API gmbl_status gmbl_powerlaw_tail_bound(int p, int q, long n_terms, gmbl_complex z,
                                              double* out);
/* Series with asymptotic tail correction; error_bound is rigorous. */
GMBL_API gmbl_status gmbl_powerlaw_series(int p, int q, gmbl_complex z, double tolerance,
                                          gmbl_complex* value, double* error_bound,
                                          long* n_terms);
GMBL_API gmbl_status gmbl_powerlaw_reciprocity(int p, int q, gmbl_complex z, gmbl_complex* out);
GMBL_API gmbl_status gmbl_powerlaw_pole(int p, int q, long n, double* out);
GMBL_API gmbl_status gmbl_powerlaw_high_freq_limit(int p, double* out);

GMBL_API gmbl_status gmbl_powerlaw_from_json(const char* json, gmbl_powerlaw** out);
GMBL_API gmbl_status gmbl_powerlaw_to_json(const gmbl_powerlaw* body, char** out);
GMBL_API void gmbl_powerlaw_free(gmbl_powerlaw* body);
/* n_elements receives -1 for an infinite body. */
GMBL_API gmbl_status gmbl_powerlaw_params(const gmbl_powerlaw* body, int* p, int* q,
                                          double* mu_star_pa, double* eta_star_pas,
                                          long* n_elements);
GMBL_API gmbl_status gmbl_powerlaw_modulus(const gmbl_powerlaw* body, gmbl_complex s,
                                           gmbl_complex* out);

/* ---- Love numbers of the homogeneous sphere ---------------------------- */

typedef struct gmbl_problem_info {
  int degree;
  size_t n_elements; /* after merging equal relaxation times */
  double lambda2;
  double fluid_limit;
  double elastic_amp;     /* 1 / (1 + lambda^2 sum mu'_n) */
  double initial_regular; /* sum_n L_n */
  double tau_min;
  double tau_max;
} gmbl_problem_info;

GMBL_API gmbl_status gmbl_problem_from_json(const char* json, gmbl_problem** out);
GMBL_API gmbl_status gmbl_problem_to_json(const gmbl_problem* problem, char** out);
/* Reproducible random N-element problem (fluid limit 1). */
GMBL_API gmbl_status gmbl_problem_random(size_t n, int degree, uint64_t seed, gmbl_problem** out);
GMBL_API gmbl_status gmbl_problem_with_fluid_limit(const gmbl_problem* problem, double fluid_limit,
                                                   gmbl_problem** out);
GMBL_API void gmbl_problem_free(gmbl_problem* problem);
GMBL_API gmbl_status gmbl_problem_get_info(const gmbl_problem* problem, gmbl_problem_info* out);
/* Static note about a harmonic degree, or NULL. */
GMBL_API const char* gmbl_degree_note(int degree);

GMBL_API gmbl_status gmbl_lambda_squared(double rho, double radius, double mu_e, double newton_g,
                                         int degree, double* out);
/* Normalized Love number F(s) = L(s) / L_f. */
GMBL_API gmbl_status gmbl_love_laplace(const gmbl_problem* problem, gmbl_complex s,
                                       gmbl_complex* out);

GMBL_API gmbl_status gmbl_spectrum_solve(const gmbl_problem* problem, gmbl_spectrum** out);
GMBL_API void gmbl_spectrum_free(gmbl_spectrum* spectrum);
GMBL_API size_t gmbl_spectrum_size(const gmbl_spectrum* spectrum);
GMBL_API double gmbl_spectrum_elastic_amp(const gmbl_spectrum* spectrum);
GMBL_API gmbl_status gmbl_spectrum_mode(const gmbl_spectrum* spectrum, size_t index, double* s,
                                        double* amp);
GMBL_API double gmbl_spectrum_sum_rule_residual(const gmbl_spectrum* spectrum);
GMBL_API gmbl_status gmbl_spectrum_to_json(const gmbl_spectrum* spectrum, char** out);
GMBL_API gmbl_status gmbl_impulse_response(const gmbl_spectrum* spectrum, double t,
                                           double* regular, double* delta_amp);
GMBL_API gmbl_status gmbl_heaviside_response(const gmbl_spectrum* spectrum, double t, double* out);
/* Roots of Q by radicals (N <= 4, else GMBL_ERR_UNSUPPORTED), ascending, and
 * their largest relative deviation from the bracketed roots. */
GMBL_API gmbl_status gmbl_closed_form_roots(const gmbl_problem* problem, double* out,
                                            size_t capacity, size_t* count,
                                            double* max_rel_deviation);

/* ---- Post-Widder inversion --------------------------------------------- */

typedef enum gmbl_acceleration { GMBL_ACCEL_NONE = 0, GMBL_ACCEL_RHO = 1 } gmbl_acceleration;

typedef struct gmbl_pw_config {
  int n_max;
  int precision_digits; /* 0 selects max(34, ceil(2.5 n_max)) */
  gmbl_acceleration acceleration;
  double target_tol;
} gmbl_pw_config;

typedef struct gmbl_pw_result {
  double value;
  double error_estimate;
  int converged;
  int precision_digits;
} gmbl_pw_result;

GMBL_API void gmbl_pw_config_default(gmbl_pw_config* config);
GMBL_API gmbl_status gmbl_pw_config_from_json(const char* json, gmbl_pw_config* out);
GMBL_API gmbl_status gmbl_pw_config_to_json(const gmbl_pw_config* config, char** out);
/* Regular part of the normalized impulse response at t > 0. A result that
 * misses target_tol is still returned with converged = 0. */
GMBL_API gmbl_status gmbl_pw_invert(const gmbl_problem* problem, double t,
                                    const gmbl_pw_config* config, gmbl_pw_result* out);

#ifdef __cplusplus
}
#endif

#endif /* GMBLOVE_GMBLOVE_H */
