/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gmblove/specfun.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gmblove {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} for k = 1..10
constexpr std::array<double, 10> kBernoulliEven = {
    1.0 / 6.0,          -1.0 / 30.0,      1.0 / 42.0,     -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,  7.0 / 6.0,      -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0};

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

Complex digamma_asymptotic(Complex z) {
  // valid for Re z >= 10
  const Complex inv2 = 1.0 / (z * z);
  Complex series = 0.0;
  Complex power = inv2;
  for (std::size_t k = 0; k < 8; ++k) {
    series += kBernoulliEven[k] / (2.0 * static_cast<double>(k + 1)) * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 / z - series;
}

}  // namespace

Complex digamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    fail(ErrorCode::Pole, "digamma pole at z = " + format_complex(z));
  if (z.real() < 0.5) {
    // reflection: psi(z) = psi(1 - z) - pi cot(pi z)
    return digamma(1.0 - z) - kPi / std::tan(kPi * z);
  }
  Complex shift = 0.0;
  while (z.real() < 10.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  return shift + digamma_asymptotic(z);
}

ZetaTail zeta_tail(int s, long n_last) {
  if (s < 2) fail(ErrorCode::Domain, "zeta_tail requires s >= 2");
  if (n_last < 0) fail(ErrorCode::InvalidArgument, "zeta_tail requires n_last >= 0");
  // Euler-Maclaurin anchored at a >= 10; the head below a is summed directly.
  const long anchor = std::max<long>(n_last + 1, 10);
  double head = 0.0;
  for (long n = anchor - 1; n > n_last; --n) head += std::pow(static_cast<double>(n), -s);

  const double a = static_cast<double>(anchor);
  const double ds = static_cast<double>(s);
  double value = std::pow(a, 1.0 - ds) / (ds - 1.0) + 0.5 * std::pow(a, -ds);
  // f^{(2j-1)}(a) = -s(s+1)...(s+2j-2) a^{-s-2j+1}
  double rising = ds;           // s (s+1) ... (s+2j-2)
  double factorial = 2.0;       // (2j)!
  double last_term = 0.0;
  for (int j = 1; j <= 10; ++j) {
    const double deriv = -rising * std::pow(a, -ds - 2.0 * j + 1.0);
    const double term = -kBernoulliEven[static_cast<std::size_t>(j - 1)] / factorial * deriv;
    if (j == 10) {
      last_term = term;
      break;
    }
    value += term;
    rising *= (ds + 2.0 * j - 1.0) * (ds + 2.0 * j);
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  // for completely monotone f the remainder is bounded by the first omitted term
  return {head + value, std::abs(last_term) + 4.0 * std::numeric_limits<double>::epsilon() * (head + value)};
}

double zeta_int(int p) {
  if (p < 2) fail(ErrorCode::Domain, "zeta_int requires p >= 2 (zeta diverges at p = 1)");
  double head = 0.0;
  for (int n = 9; n >= 1; --n) head += std::pow(static_cast<double>(n), -p);
  return head + zeta_tail(p, 9).value;
}

Complex coth(Complex z) {
  if (z.real() == 0.0) {
    const double k = std::round(z.imag() / kPi);
    if (std::abs(z.imag() - k * kPi) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z.imag())))
      fail(ErrorCode::Pole, "coth pole at z = " + format_complex(z));
  }
  if (z.real() > 20.0) return {1.0, 0.0};
  if (z.real() < -20.0) return {-1.0, 0.0};
  if (std::abs(z) < 0.05) {
    // 1/z + z/3 - z^3/45 + 2 z^5/945 - z^7/4725 + 2 z^9/93555
    const Complex z2 = z * z;
    const Complex poly =
        1.0 / 3.0 +
        z2 * (-1.0 / 45.0 + z2 * (2.0 / 945.0 + z2 * (-1.0 / 4725.0 + z2 * (2.0 / 93555.0))));
    return 1.0 / z + z * poly;
  }
  if (z.real() < 0.0) return -coth(-z);
  const Complex e = std::exp(-2.0 * z);
  return (1.0 + e) / (1.0 - e);
}

}  // namespace gmblove
