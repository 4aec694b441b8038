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

// Ensemble-average counts: univariate saddle points, the Hayman coefficient
// approximation, growth rates and the typical minimum relative size.

#include "ldpc/exact.hpp"
#include "ldpc/params.hpp"

namespace ldpc {

struct GrowthPoint {
  double abscissa = 0.0;   // relative weight (or size) in (0, 1)
  double saddle_x = 0.0;   // positive root of a(x) = r * abscissa
  double growth = 0.0;     // lim (1/n) ln E[count]
  double curvature_b = 0.0;
};

struct AvgCount {
  int n = 0;
  double count = 0.0;      // prefactor * exp(n * exponent)
  double exponent = 0.0;
  double prefactor = 0.0;
};

// Binary entropy in nats.
double binary_entropy(double p);

// Unique positive root of a_p(x) = r*abscissa (weight) or a_beta(x) =
// r*abscissa (stopping). Throws Error(no_bracket) outside the attainable range.
double solve_saddle(const EnsembleParams& params, Kind kind, double abscissa);

GrowthPoint growth_point(const EnsembleParams& params, Kind kind, double abscissa);

// (l/r) ln phi(x*) - (l-1) h(abscissa) - l * abscissa * ln x*
double growth_rate(const EnsembleParams& params, Kind kind, double abscissa);

// Saddle-point approximation of [x^k] poly(x)^m for a univariate polynomial
// with nonnegative coefficients and nonzero constant term. The support
// period d (gcd of exponents) is detected from the polynomial; off-lattice
// indices give 0, on-lattice results carry the factor d.
double hayman_coeff(const ExactPolynomial& poly, long m, long k);

// Asymptotic E[N(G, n*abscissa)] or E[S(G, n*abscissa)].
AvgCount avg_count(const EnsembleParams& params, Kind kind, int n, double abscissa);

// Smallest root of growth_rate in (0, 0.5): first sign change on a 1e-4
// grid, refined by bisection. Throws Error(no_root) if there is none.
double min_abscissa(const EnsembleParams& params, Kind kind);

}  // namespace ldpc
