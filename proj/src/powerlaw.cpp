/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gmblove/powerlaw.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace gmblove {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string pq_label(int p, int q) {
  return "(p, q) = (" + std::to_string(p) + ", " + std::to_string(q) + ")";
}

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

void check_exponents(int p, int q) {
  if (p < 0 || q < 0) fail(ErrorCode::Domain, "power-law exponents must be >= 0, got " + pq_label(p, q));
}

// Index n >= 1 of the pole -n^{q-p} sitting at z, or 0 when z is not a pole.
long pole_index(Complex z, int p, int q) {
  if (z.imag() != 0.0 || !(z.real() < 0.0)) return 0;
  const double x = -z.real();
  const int d = q - p;
  if (d == 0) return std::abs(x - 1.0) <= 1e-12 ? 1 : 0;
  const double n = std::round(std::pow(x, 1.0 / d));
  if (n < 1.0) return 0;
  const double pole = std::pow(n, d);
  return std::abs(x - pole) <= 1e-12 * pole ? static_cast<long>(n) : 0;
}

// Neumaier-compensated complex sum
class CompensatedSum {
 public:
  void add(Complex v) {
    add_part(v.real(), re_, cre_);
    add_part(v.imag(), im_, cim_);
    abs_sum_ += std::abs(v);
  }
  Complex value() const { return {re_ + cre_, im_ + cim_}; }
  double abs_sum() const { return abs_sum_; }

 private:
  static void add_part(double v, double& sum, double& comp) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double re_ = 0.0, im_ = 0.0, cre_ = 0.0, cim_ = 0.0, abs_sum_ = 0.0;
};

// term z / (n^p z + n^q) written as n^-p z / (z + n^{q-p})
Complex series_term(Complex z, double n, int p, int d) {
  return std::pow(n, -p) * z / (z + std::pow(n, d));
}

// (w coth w - 1) / w^2, free of cancellation near w = 0
Complex coth_excess(Complex w) {
  if (std::abs(w) < 0.05) {
    const Complex w2 = w * w;
    return 1.0 / 3.0 +
           w2 * (-1.0 / 45.0 + w2 * (2.0 / 945.0 + w2 * (-1.0 / 4725.0 + w2 * (2.0 / 93555.0))));
  }
  return (w * coth(w) - 1.0) / (w * w);
}

// gamma + psi(1 + w); power series sum_{k>=2} (-1)^k zeta(k) w^{k-1} near 0
Complex digamma1p_plus_gamma(Complex w) {
  if (std::abs(w) < 0.1) {
    Complex sum = 0.0;
    Complex power = w;
    for (int k = 2; k <= 20; ++k) {
      sum += (k % 2 == 0 ? 1.0 : -1.0) * zeta_int(k) * power;
      power *= w;
    }
    return sum;
  }
  return euler_gamma + digamma(1.0 + w);
}

Complex m_zero_q(Complex z, int q) {
  if (z == 0.0) return 0.0;
  const auto xis = roots_of_unity_xi(z, q);
  Complex sum = 0.0;
  for (const Complex xi : xis) sum += digamma(-xi) / std::pow(1.0 + xi, q - 1);
  return -z / static_cast<double>(q) * sum;
}

}  // namespace

bool in_convergence_region(int p, int q) noexcept { return p >= 2 || q >= 2; }

void validate(const PowerLawGmb& body) {
  check_exponents(body.p, body.q);
  if (!(body.mu_star > 0.0) || !std::isfinite(body.mu_star))
    fail(ErrorCode::Domain, "mu_star must be finite and > 0");
  if (!(body.eta_star > 0.0) || !std::isfinite(body.eta_star))
    fail(ErrorCode::Domain, "eta_star must be finite and > 0");
  if (body.n_elements && *body.n_elements < 1)
    fail(ErrorCode::Domain, "n_elements must be >= 1");
  if (body.infinite() && !in_convergence_region(body.p, body.q))
    fail(ErrorCode::Domain, "infinite power-law GMB diverges for " + pq_label(body.p, body.q) +
                                "; need p >= 2 or q >= 2");
}

GmbModel to_gmb_model(const PowerLawGmb& body) {
  validate(body);
  if (body.infinite()) fail(ErrorCode::Domain, "cannot expand an infinite power-law GMB into elements");
  std::vector<MaxwellElement> elements;
  elements.reserve(static_cast<std::size_t>(*body.n_elements));
  for (long n = 1; n <= *body.n_elements; ++n) {
    const double dn = static_cast<double>(n);
    elements.push_back({body.mu_star * std::pow(dn, -body.p), body.eta_star * std::pow(dn, -body.q)});
  }
  return GmbModel(std::move(elements));
}

Complex powerlaw_modulus(const PowerLawGmb& body, Complex s) {
  validate(body);
  const Complex z = s * body.tau_star();
  if (body.infinite()) return body.mu_star * m_closed(z, body.p, body.q);
  return body.mu_star * m_truncated(z, body.p, body.q, *body.n_elements);
}

Complex m_truncated(Complex z, int p, int q, long n_terms) {
  check_exponents(p, q);
  if (n_terms < 1) fail(ErrorCode::InvalidArgument, "n_terms must be >= 1");
  const long pole = pole_index(z, p, q);
  if (pole >= 1 && pole <= n_terms)
    fail(ErrorCode::Pole, "z = " + describe(z) + " is the pole -n^(q-p) for n = " + std::to_string(pole));
  if (z == 0.0) return 0.0;
  const int d = q - p;
  CompensatedSum sum;
  // smallest terms first
  for (long n = n_terms; n >= 1; --n) sum.add(series_term(z, static_cast<double>(n), p, d));
  return sum.value();
}

double tail_bound(Complex z, int p, int q, long n_terms) {
  check_exponents(p, q);
  if (!in_convergence_region(p, q))
    fail(ErrorCode::Domain, "no tail bound outside the convergence region: " + pq_label(p, q));
  if (n_terms < 2) fail(ErrorCode::InvalidArgument, "tail_bound requires n_terms >= 2");
  if (z.real() < 0.0) fail(ErrorCode::Domain, "tail_bound requires Re z >= 0");
  const double N = static_cast<double>(n_terms);
  const double az = std::abs(z);
  const int d = q - p;
  double bound = std::numeric_limits<double>::infinity();
  if (p >= 2) {
    const double factor = d >= 0 ? az / std::abs(z + std::pow(N, d)) : 1.0;
    bound = std::min(bound, factor * std::pow(N, 1 - p) / (p - 1));
  }
  if (q >= 2) bound = std::min(bound, az * std::pow(N, 1 - q) / (q - 1));
  return bound;
}

SeriesValue m_series(Complex z, int p, int q, double tolerance) {
  check_exponents(p, q);
  if (!in_convergence_region(p, q))
    fail(ErrorCode::Domain, "the infinite series diverges for " + pq_label(p, q));
  if (z.real() < 0.0) fail(ErrorCode::Domain, "m_series requires Re z >= 0");
  if (!(tolerance > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be > 0");
  if (z == 0.0) return {0.0, 0.0, 0, 0};

  const int d = q - p;
  const double az = std::abs(z);
  constexpr int kMaxExpansion = 24;

  // Tail over n > N written as sum_j c_j zeta_tail(e_j, N) + remainder.
  struct Tail {
    Complex value;
    double bound;
    int terms;
  };
  const auto tail_for = [&](long N) -> std::optional<Tail> {
    const double dn = static_cast<double>(N);
    if (d == 0) {
      const auto zt = zeta_tail(p, N);
      const Complex c = z / (1.0 + z);
      return Tail{c * zt.value, std::abs(c) * zt.error_bound, 1};
    }
    const int e = std::abs(d);
    Complex value = 0.0;
    double bound = 0.0;
    // d > 0: n^-p w/(1+w), w = z n^-d; coefficients (-1)^{j-1} z^j, exponents p + j d, j >= 1
    // d < 0: n^-p / (1+u), u = n^-e / z; coefficients (-z)^-j, exponents p + j e, j >= 0
    const int j0 = d > 0 ? 1 : 0;
    Complex coeff = d > 0 ? z : Complex(1.0);
    const Complex ratio = d > 0 ? -z : -1.0 / z;
    for (int j = j0; j < j0 + kMaxExpansion; ++j) {
      const int expo = p + j * e;
      // remainder after terms j0..j-1: |coeff_j| n^-expo summed over n > N
      const double rem = std::abs(coeff) * std::pow(dn, 1 - expo) / (expo - 1);
      if (j > j0 && rem + bound <= 0.5 * tolerance) return Tail{value, bound + rem, j - j0};
      const auto zt = zeta_tail(expo, N);
      value += coeff * zt.value;
      bound += std::abs(coeff) * zt.error_bound;
      coeff *= ratio;
    }
    return std::nullopt;
  };

  for (long N = 1000; N <= kMaxSeriesTerms; N *= 10) {
    // the expansion needs |w| < 1 (d > 0) or |u| < 1 (d < 0) on n > N
    if (d > 0 && az >= 0.5 * std::pow(static_cast<double>(N), d)) continue;
    if (d < 0 && 1.0 >= 0.5 * az * std::pow(static_cast<double>(N), -d)) continue;
    const auto tail = tail_for(N);
    if (!tail) continue;
    CompensatedSum sum;
    for (long n = N; n >= 1; --n) sum.add(series_term(z, static_cast<double>(n), p, d));
    const double rounding = 8.0 * kEps * sum.abs_sum() + 8.0 * kEps * std::abs(tail->value);
    const double bound = tail->bound + rounding;
    if (bound <= tolerance) return {sum.value() + tail->value, bound, N, tail->terms};
  }
  fail(ErrorCode::Convergence, "series oracle cannot reach tolerance within " +
                                   std::to_string(kMaxSeriesTerms) + " terms at z = " + describe(z));
}

bool closed_form_available(int p, int q) noexcept {
  if (p < 0 || q < 0) return false;
  if (p == q) return p >= 2;
  if ((p == 0 && q == 2) || (p == 2 && q == 0)) return true;
  if ((p == 1 && q == 2) || (p == 2 && q == 1)) return true;
  return (p == 0 && q >= 3) || (q == 0 && p >= 3);
}

Complex m_closed(Complex z, int p, int q) {
  check_exponents(p, q);
  if (!in_convergence_region(p, q))
    fail(ErrorCode::Domain, "M(z; p, q) diverges for " + pq_label(p, q));
  if (!closed_form_available(p, q))
    fail(ErrorCode::Unsupported, "no closed form implemented for " + pq_label(p, q));
  if (const long n = pole_index(z, p, q); n > 0)
    fail(ErrorCode::Pole, "z = " + describe(z) + " is the pole -n^(q-p) for n = " + std::to_string(n));
  if (z == 0.0) return 0.0;

  if (p == q) return z * zeta_int(p) / (1.0 + z);
  if (p == 0 && q == 2) {
    // (-1 + w coth w) / 2 with w = pi sqrt(z)
    return 0.5 * kPi * kPi * z * coth_excess(kPi * std::sqrt(z));
  }
  if (p == 2 && q == 0) {
    // (-z + pi sqrt(z) coth(pi / sqrt(z))) / 2
    return 0.5 * kPi * kPi * coth_excess(kPi / std::sqrt(z));
  }
  if (p == 1 && q == 2) return digamma1p_plus_gamma(z);
  if (p == 2 && q == 1) return z * digamma1p_plus_gamma(1.0 / z);
  if (p == 0) return m_zero_q(z, q);
  return apply_reciprocity(z, p, q);
}

Complex apply_reciprocity(Complex z, int p, int q) {
  if (z == 0.0) fail(ErrorCode::Domain, "reciprocity map needs z != 0");
  return z * m_closed(1.0 / z, q, p);
}

Complex apply_reciprocity(Complex z, int p, int q, long n_terms) {
  if (z == 0.0) fail(ErrorCode::Domain, "reciprocity map needs z != 0");
  return z * m_truncated(1.0 / z, q, p, n_terms);
}

double powerlaw_poles(int p, int q, long n) {
  check_exponents(p, q);
  if (n < 1) fail(ErrorCode::InvalidArgument, "pole index must be >= 1");
  return -std::pow(static_cast<double>(n), q - p);
}

double high_freq_limit(int p) {
  if (p < 2) fail(ErrorCode::Domain, "M(z; p, q) is unbounded as z -> infinity unless p >= 2");
  return zeta_int(p);
}

std::vector<Complex> roots_of_unity_xi(Complex z, int q) {
  if (q < 1) fail(ErrorCode::InvalidArgument, "q must be >= 1");
  if (z == 0.0) fail(ErrorCode::Domain, "roots_of_unity_xi needs z != 0");
  // principal branch of (-z)^{1/q}; a signed zero must not flip arg(-z) to -pi
  Complex minus_z = -z;
  if (minus_z.imag() == 0.0) minus_z.imag(0.0);
  const double radius = std::pow(std::abs(minus_z), 1.0 / q);
  const double phase = std::arg(minus_z) / q;
  std::vector<Complex> xis;
  xis.reserve(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k)
    xis.push_back(-1.0 + std::polar(radius, phase + 2.0 * kPi * k / q));
  return xis;
}

}  // namespace gmblove
