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

// Check-node generating functions of the (l, r)-regular ensemble:
//
//   p(x)   = ((1+x)^r + (1-x)^r) / 2                 even-parity checks
//   beta(x) = (1+x)^r - r x                          no check sees one edge
//   f(x1,x2,x3)  valid placements for a pair of codewords
//   g(x1,x2,x3)  valid placements for a pair of stopping sets
//
// together with the log-derivative statistics a = x phi'/phi, b = x a' and
// their trivariate counterparts a_i = x_i d_i ln phi, B_ij = x_j d_j a_i.
// Everything is evaluated from the binomial-power forms; the expanded
// integer coefficients live in exact.hpp.

#include <array>

#include "ldpc/linalg.hpp"
#include "ldpc/params.hpp"

namespace ldpc {

double weight_gf(const EnsembleParams& params, double x);
double stop_gf(const EnsembleParams& params, double x);
double univariate_gf(const EnsembleParams& params, Kind kind, double x);
// ln phi(x), valid where phi would overflow a double.
double log_univariate_gf(const EnsembleParams& params, Kind kind, double x);

double pair_gf_weight(const EnsembleParams& params, const Point3& pt);
double pair_gf_stop(const EnsembleParams& params, const Point3& pt);
double pair_gf(const EnsembleParams& params, Kind kind, const Point3& pt);

struct SaddleStats1 {
  double a = 0.0;
  double b = 0.0;
};

// Statistics of p (weight) or beta (stopping) at x > 0.
SaddleStats1 saddle_stats_uni(const EnsembleParams& params, Kind kind, double x);

struct SaddleStats3 {
  Vec3 a{};
  Matrix3 B;
  double log_value = 0.0;  // ln f(pt) or ln g(pt)
};

// Statistics of f (weight) or g (stopping) at a componentwise positive point.
// Throws Error(nonpositive_gf) when the generating function is not positive.
SaddleStats3 saddle_stats_tri(const EnsembleParams& params, Kind kind, const Point3& pt);

// The x2-free diagonal t -> phi(t, 0, t) of the pair generating function,
// i.e. placements for two words with disjoint supports.
struct DiagonalStats {
  SaddleStats1 stats;  // a = t d/dt ln phi(t,0,t), b = t a'
  double log_value = 0.0;
};
DiagonalStats diagonal_stats(const EnsembleParams& params, Kind kind, double t);
// Coefficient of t^r in phi(t, 0, t). Zero for the weight kind with odd r.
double diagonal_leading_coefficient(const EnsembleParams& params, Kind kind);

}  // namespace ldpc
