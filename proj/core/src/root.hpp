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

#include <functional>

#include "ldpc/genfun.hpp"

namespace ldpc::detail {

// Unique positive root of a(x) = target for a strictly increasing
// log-derivative a. stats(x) returns {a(x), b(x) = x a'(x)}.
// Brackets by doubling (or halving) from 1e-8, bisects 80 times, then
// polishes with Newton steps in ln x. Throws Error(no_bracket) when target
// lies outside the range of a.
double solve_log_derivative(double target, const std::function<SaddleStats1(double)>& stats,
                            double residual_tol = 1e-12);

}  // namespace ldpc::detail
