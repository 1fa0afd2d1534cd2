/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <vector>

#include "gmblove/rheology.hpp"
#include "gmblove/specfun.hpp"

namespace gmblove {

/// Power-law GMB: mu_n = mu_star / n^p, eta_n = eta_star / n^q, n = 1..N.
/// An empty `n_elements` means N = infinity.
struct PowerLawGmb {
  int p = 0;
  int q = 2;
  double mu_star = 1.0;
  double eta_star = 1.0;
  std::optional<long> n_elements;

  double tau_star() const noexcept { return eta_star / mu_star; }
  bool infinite() const noexcept { return !n_elements.has_value(); }
  bool operator==(const PowerLawGmb&) const = default;
};

/// Region where the infinite series converges uniformly: p >= 2 or q >= 2.
bool in_convergence_region(int p, int q) noexcept;

/// Throws ErrorCode::Domain on non-positive parameters and on an infinite
/// body outside the convergence region.
void validate(const PowerLawGmb& body);

/// Finite body as an explicit GmbModel (equal taus are not merged).
GmbModel to_gmb_model(const PowerLawGmb& body);

/// mu(s) = mu_star * m(s tau_star; p, q), closed form when infinite.
Complex powerlaw_modulus(const PowerLawGmb& body, Complex s);

/// m(z; p, q) = sum_{n=1}^{n_terms} z / (n^p z + n^q)
Complex m_truncated(Complex z, int p, int q, long n_terms);

/// Upper bound on |M(z) - m_truncated(z, n_terms)| for Re z >= 0, from
/// |z| / |n^p z + n^q| <= min(n^-p |z| / |z + N^{q-p}|, |z| n^-q) and the integral test.
double tail_bound(Complex z, int p, int q, long n_terms);

/// Infinite series evaluated as a partial sum plus an asymptotic expansion of
/// the tail in powers of n^-|q-p| (zeta tails), with a rigorous bound on
/// everything left out. Used as an independent oracle for the closed forms.
struct SeriesValue {
  Complex value;
  double error_bound;
  long n_terms;
  int expansion_terms;
};
SeriesValue m_series(Complex z, int p, int q, double tolerance);

/// Hard cap on terms summed by m_series.
inline constexpr long kMaxSeriesTerms = 10'000'000;

/// True when m_closed has a formula for (p, q).
bool closed_form_available(int p, int q) noexcept;

/// M(z; p, q) for the infinite body in closed form: (0,2), (2,0), (1,2),
/// (2,1), (p,p) with p >= 2, (0,q) and (q,0) with q >= 3.
Complex m_closed(Complex z, int p, int q);

/// z * M(1/z; q, p), the dual body with springs and dashpots swapped.
Complex apply_reciprocity(Complex z, int p, int q);
/// Finite-N version: z * m_truncated(1/z, q, p, n_terms).
Complex apply_reciprocity(Complex z, int p, int q, long n_terms);

/// n-th pole of M(z; p, q): -n^{q-p}. Poles accumulate at -infinity for
/// q > p and at 0- for q < p; p = q has the single pole -1.
double powerlaw_poles(int p, int q, long n);

/// lim_{z -> inf} M(z; p, q) = zeta(p), for p >= 2.
double high_freq_limit(int p);

/// The q solutions xi_k = -1 + r omega_k of z + (1 + xi)^q = 0, with r the
/// principal q-th root of -z (arg in (-pi, pi]) and omega_k = exp(2 pi i k / q).
std::vector<Complex> roots_of_unity_xi(Complex z, int q);

}  // namespace gmblove
