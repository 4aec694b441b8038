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

#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace ldpc {

// Which counting problem a generating function belongs to: codewords of a
// given weight, or stopping sets of a given size.
enum class Kind { weight, stopping };

std::string_view to_string(Kind kind) noexcept;
// Accepts "weight" or "stopping"; throws Error(invalid_params) otherwise.
Kind parse_kind(std::string_view text);

// Left/right degrees of the (l, r)-regular ensemble.
class EnsembleParams {
 public:
  static constexpr int kMaxRightDegree = 64;

  // Requires 2 <= left < right <= kMaxRightDegree.
  EnsembleParams(int left_degree, int right_degree);

  int left() const noexcept { return left_; }
  int right() const noexcept { return right_; }
  double design_rate() const noexcept {
    return 1.0 - static_cast<double>(left_) / right_;
  }
  // Number of edges per variable node divided by check degree: the power
  // m = n*l/r applied to a check-node generating function, per variable.
  double edge_ratio() const noexcept {
    return static_cast<double>(left_) / right_;
  }

  std::string label() const;

  friend auto operator<=>(const EnsembleParams&, const EnsembleParams&) = default;

 private:
  int left_;
  int right_;
};

}  // namespace ldpc
