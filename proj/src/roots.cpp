/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gmblove/roots.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "gmblove/error.hpp"

namespace gmblove {

namespace {

// Candidate endpoints, from the requested nudge down to the adjacent double.
template <class Step>
double pull_inward(double end, double toward, double nudge, Step&& accept) {
  const std::array<double, 4> nudges = {nudge, nudge * 1e-1, nudge * 1e-2, 0.0};
  for (double rel : nudges) {
    double x;
    if (rel > 0.0) {
      const double width = std::abs(toward - end);
      x = end + std::copysign(std::min(rel * std::max(std::abs(end), 1e-300), 0.25 * width),
                              toward - end);
    } else {
      x = std::nextafter(end, toward);
    }
    if (accept(x)) return x;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

double bracketed_root(const std::function<double(double)>& f, double left, double right,
                      double nudge) {
  if (!(left < right)) fail(ErrorCode::InvalidArgument, "bracketed_root: empty interval");

  const double lo = pull_inward(left, right, nudge, [&](double x) { return f(x) < 0.0; });
  const double hi = pull_inward(right, left, nudge, [&](double x) { return f(x) > 0.0; });
  if (std::isnan(lo) || std::isnan(hi)) {
    std::ostringstream os;
    os.precision(17);
    os << "no sign change of the expected orientation on (" << left << ", " << right << ")";
    fail(ErrorCode::Bracket, os.str());
  }
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;

  std::uintmax_t max_iter = 200;
  const auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2);
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, max_iter);
  if (max_iter >= 200) fail(ErrorCode::Bracket, "bracketed_root: iteration limit reached");
  return 0.5 * (a + b);
}

}  // namespace gmblove
