/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gmblove/numeric.hpp"

#include <string>

#include "gmblove/error.hpp"

namespace gmblove {

int precision_tier(int digits) {
  for (int tier : kPrecisionTiers)
    if (digits <= tier) return tier;
  fail(ErrorCode::Domain, "precision of " + std::to_string(digits) + " digits exceeds the supported maximum of " +
                              std::to_string(kPrecisionTiers.back()));
}

}  // namespace gmblove
