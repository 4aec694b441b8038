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

#include "ldpc/params.hpp"

#include "ldpc/error.hpp"

namespace ldpc {

std::string_view to_string(Kind kind) noexcept {
  return kind == Kind::weight ? "weight" : "stopping";
}

Kind parse_kind(std::string_view text) {
  if (text == "weight") return Kind::weight;
  if (text == "stopping") return Kind::stopping;
  throw Error(Errc::invalid_params, "unknown kind '" + std::string(text) + "'");
}

EnsembleParams::EnsembleParams(int left_degree, int right_degree)
    : left_(left_degree), right_(right_degree) {
  if (left_ < 2 || left_ >= right_) {
    throw Error(Errc::invalid_params,
                "degrees must satisfy 2 <= l < r, got (" + label() + ")");
  }
  if (right_ > kMaxRightDegree) {
    throw Error(Errc::invalid_params,
                "right degree " + std::to_string(right_) + " exceeds " +
                    std::to_string(kMaxRightDegree));
  }
}

std::string EnsembleParams::label() const {
  return std::to_string(left_) + "," + std::to_string(right_);
}

}  // namespace ldpc
