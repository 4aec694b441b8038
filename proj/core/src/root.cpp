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

#include "root.hpp"

#include <cmath>
#include <string>

#include "ldpc/error.hpp"

namespace ldpc::detail {

namespace {
constexpr double kStart = 1e-8;
constexpr double kLowest = 1e-300;
constexpr double kHighest = 1e150;
constexpr int kBisections = 80;
constexpr int kNewtonSteps = 30;
}  // namespace

double solve_log_derivative(double target, const std::function<SaddleStats1(double)>& stats,
                            double residual_tol) {
  double lo = kStart;
  double hi = kStart;
  if (stats(lo).a < target) {
    while (stats(hi).a < target) {
      lo = hi;
      hi *= 2.0;
      if (hi > kHighest) {
        throw Error(Errc::no_bracket, "log-derivative never reaches " + std::to_string(target));
      }
    }
  } else {
    while (stats(lo).a >= target) {
      hi = lo;
      lo *= 0.5;
      if (lo < kLowest) {
        throw Error(Errc::no_bracket, "log-derivative stays above " + std::to_string(target));
      }
    }
  }

  for (int i = 0; i < kBisections; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (stats(mid).a < target ? lo : hi) = mid;
  }

  double x = 0.5 * (lo + hi);
  SaddleStats1 s = stats(x);
  double resid = std::abs(s.a - target);
  for (int i = 0; i < kNewtonSteps && resid > 0.0; ++i) {
    if (!(s.b > 0.0)) break;
    const double next = x * std::exp(-(s.a - target) / s.b);
    const SaddleStats1 sn = stats(next);
    const double rn = std::abs(sn.a - target);
    if (!(rn < resid)) break;
    x = next;
    s = sn;
    resid = rn;
  }
  if (!(resid < residual_tol)) {
    throw Error(Errc::no_convergence,
                "saddle residual " + std::to_string(resid) + " above tolerance");
  }
  return x;
}

}  // namespace ldpc::detail
