/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>

namespace gmblove {

/// Root of a continuous f on the open interval (left, right), where f rises
/// from negative to positive across a single sign change. Endpoints are first pulled inward by `nudge` (relative)
/// and moved closer to the interval ends if the sign pattern is not yet
/// established there. Throws ErrorCode::Bracket when no sign change is found.
double bracketed_root(const std::function<double(double)>& f, double left, double right,
                      double nudge = 1e-13);

}  // namespace gmblove
