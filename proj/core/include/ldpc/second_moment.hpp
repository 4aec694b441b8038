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

// Second-moment machinery: the overlap saddle of the pair generating
// function, the per-overlap exponent of the second-moment sum, the checks
// that the overlap alpha = omega^2 dominates, and the resulting variance
// ratio delta with its Chebyshev concentration bound 1 - delta / eps^2.
//
// Throughout, omega is the relative weight (or stopping-set size) and alpha
// the relative overlap of the two words, (2 omega - 1)^+ < alpha < omega.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ldpc/linalg.hpp"
#include "ldpc/params.hpp"

namespace ldpc {

// Positive solution (t1, t2, t3 = t1) of
//   a_1(t) = r (omega - alpha),  a_2(t) = r alpha
// for the pair generating function of the chosen kind.
struct OverlapSaddle {
  double alpha = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double log_gf_value = 0.0;
  double gf_value = 0.0;
  Matrix3 B;
  double determinant = 0.0;
  double sigma_c2 = 0.0;       // 1 / (l r v B^{-1} v^T), v = (-1, 1, -1)
  std::array<double, 2> residual{};  // a_1/r - (omega - alpha), a_2/r - alpha
};

using SaddleSeed = std::pair<double, double>;

OverlapSaddle solve_overlap(const EnsembleParams& params, Kind kind, double omega, double alpha,
                            std::optional<SaddleSeed> seed = std::nullopt);

// Everything known about one overlap fraction.
struct OverlapPoint {
  OverlapSaddle saddle;
  double exponent = 0.0;    // lim (1/n) ln S_{n alpha}
  double psi = 0.0;         // d exponent / d alpha
  double curvature = 0.0;   // n * (coefficient of Delta^2 in ln S_{i_m + Delta})
};

OverlapPoint evaluate_overlap(const EnsembleParams& params, Kind kind, double omega, double alpha,
                              std::optional<SaddleSeed> seed = std::nullopt);

// (l-1) ln[alpha (1 - 2 omega + alpha) / (omega - alpha)^2] - l ln(t2 / t1^2)
double stationarity_residual(const EnsembleParams& params, Kind kind, double omega, double alpha);
double exponent_curve(const EnsembleParams& params, Kind kind, double omega, double alpha);

struct EndpointEstimate {
  double value = 0.0;                 // the exponent the conditions compare against
  double extrapolated = 0.0;          // one-sided Richardson value
  std::optional<double> reduced;      // disjoint-support saddle, omega <= 1/2
  bool methods_disagree = false;      // |reduced - extrapolated| > 1e-2
};

// Exponent of the second-moment term at alpha = (2 omega - 1)^+.
EndpointEstimate endpoint_estimate(const EnsembleParams& params, Kind kind, double omega);
double endpoint_exponent(const EnsembleParams& params, Kind kind, double omega);

struct StationaryPoint {
  double alpha = 0.0;
  double exponent = 0.0;
  double curvature = 0.0;
  bool local_max = false;  // curvature < 0
};

struct ConditionReport {
  bool condition1_ok = false;
  bool condition2_ok = false;
  std::vector<StationaryPoint> stationary;
  double peak_exponent = 0.0;       // exponent at alpha = omega^2
  double grid_max_exponent = 0.0;
  double endpoint_exponent = 0.0;
  bool endpoint_methods_disagree = false;
  int failed_grid_points = 0;
};

inline constexpr int kConditionGridPoints = 2000;
inline constexpr double kConditionMargin = 1e-4;

// Requires growth_rate(params, kind, omega) > 0.
ConditionReport verify_conditions(const EnsembleParams& params, Kind kind, double omega);

// Variance ratio from the closed-form expression at the alpha = omega^2
// saddle, without running the condition checks. Throws
// Error(variance_degenerate) if omega^2 (1-omega)^2 <= (l-1) sigma_c^2.
double delta_value(const EnsembleParams& params, Kind kind, double omega);

struct ConcentrationReport {
  double abscissa = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  double bound = 0.0;  // 1 - delta / epsilon^2
  bool condition1_ok = false;
  bool condition2_ok = false;
  ConditionReport diagnostics;
};

ConcentrationReport concentration(const EnsembleParams& params, Kind kind, double omega,
                                  double epsilon);

// The (3,4) ensemble's explicit delta(omega). Throws Error(domain) when a
// radicand is negative.
double delta34_closed_form(double omega);

// Predicted Coeff(phi^m, x^j) / Coeff(phi^m, x^i) for i = l(n omega - k,
// k, n omega - k) with k = n * base_alpha and j = i + offset.
double local_limit_ratio(const EnsembleParams& params, Kind kind, int n, double omega,
                         double base_alpha, const std::array<int, 3>& offset);

}  // namespace ldpc
