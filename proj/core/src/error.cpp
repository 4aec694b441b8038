// Copyright 2026 The ldpc-moments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldpc/error.hpp"

namespace ldpc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_params: return "INVALID_PARAMS";
    case Errc::no_bracket: return "NO_BRACKET";
    case Errc::no_root: return "NO_ROOT";
    case Errc::unsupported_poly: return "UNSUPPORTED_POLY";
    case Errc::nonpositive_gf: return "NONPOSITIVE_GF";
    case Errc::no_convergence: return "NO_CONVERGENCE";
    case Errc::singular_b: return "SINGULAR_B";
    case Errc::variance_degenerate: return "VARIANCE_DEGENERATE";
    case Errc::domain: return "DOMAIN";
    case Errc::off_lattice: return "OFF_LATTICE";
    case Errc::divisibility: return "DIVISIBILITY";
    case Errc::too_large: return "TOO_LARGE";
    case Errc::internal_exponent_mismatch: return "INTERNAL_EXPONENT_MISMATCH";
  }
  return "UNKNOWN";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

}  // namespace ldpc
