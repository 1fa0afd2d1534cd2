/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gmblove/error.hpp"

namespace gmblove {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Convergence: return "convergence failure";
    case ErrorCode::Bracket: return "bracketing failure";
  }
  return "unknown";
}

}  // namespace gmblove
