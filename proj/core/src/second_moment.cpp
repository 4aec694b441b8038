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

#include "ldpc/second_moment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ldpc/error.hpp"
#include "ldpc/first_moment.hpp"
#include "ldpc/genfun.hpp"
#include "root.hpp"

namespace ldpc {

namespace {

constexpr Vec3 kOverlapDirection{-1.0, 1.0, -1.0};
constexpr double kNewtonTol = 1e-12;
constexpr int kNewtonIterations = 200;
constexpr double kMaxLogStep = 4.0;
constexpr double kSingularDet = 1e-14;
constexpr double kRootAlphaTol = 1e-6;

double xlogx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

// Entropy of the four overlap classes (only first, shared, only second, none).
double overlap_entropy(double omega, double alpha) {
  const double u = omega - alpha;
  return -(2.0 * xlogx(u) + xlogx(alpha) + xlogx(1.0 - 2.0 * omega + alpha));
}

void require_overlap_range(double omega, double alpha) {
  if (!(omega > 0.0 && omega < 1.0)) {
    throw Error(Errc::domain, "omega must lie in (0, 1)");
  }
  const double lo = std::max(0.0, 2.0 * omega - 1.0);
  if (!(alpha > lo && alpha < omega)) {
    throw Error(Errc::domain, "overlap alpha must lie in ((2 omega - 1)^+, omega)");
  }
}

struct NewtonState {
  double u1, u2;  // ln t1, ln t2
  SaddleStats3 stats;
  double f1, f2;
  double norm() const { return std::max(std::abs(f1), std::abs(f2)); }
};

std::optional<NewtonState> evaluate_state(const EnsembleParams& params, Kind kind, double u1,
                                          double u2, double target1, double target2) {
  const double t1 = std::exp(u1), t2 = std::exp(u2);
  if (!(t1 > 0.0 && t2 > 0.0) || !std::isfinite(t1) || !std::isfinite(t2)) return std::nullopt;
  try {
    NewtonState s{u1, u2, saddle_stats_tri(params, kind, {t1, t2, t1}), 0.0, 0.0};
    s.f1 = s.stats.a[0] - target1;
    s.f2 = s.stats.a[1] - target2;
    if (!std::isfinite(s.f1) || !std::isfinite(s.f2)) return std::nullopt;
    return s;
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Damped Newton on the symmetric reduction t3 = t1, in logarithmic coordinates.
std::optional<NewtonState> newton_overlap(const EnsembleParams& params, Kind kind, double target1,
                                          double target2, SaddleSeed seed) {
  if (!(seed.first > 0.0 && seed.second > 0.0)) return std::nullopt;
  auto state = evaluate_state(params, kind, std::log(seed.first), std::log(seed.second), target1,
                              target2);
  if (!state) return std::nullopt;
  for (int it = 0; it < kNewtonIterations; ++it) {
    if (state->norm() < kNewtonTol) return state;
    const Matrix3& B = state->stats.B;
    // d a_1 / d ln t1 picks up both x1 and x3, since they move together.
    const double j11 = B(0, 0) + B(0, 2), j12 = B(0, 1);
    const double j21 = B(1, 0) + B(1, 2), j22 = B(1, 1);
    const double det = j11 * j22 - j12 * j21;
    if (!(std::abs(det) > 0.0) || !std::isfinite(det)) return std::nullopt;
    double d1 = -(j22 * state->f1 - j12 * state->f2) / det;
    double d2 = -(-j21 * state->f1 + j11 * state->f2) / det;
    const double len = std::max(std::abs(d1), std::abs(d2));
    if (len > kMaxLogStep) {
      d1 *= kMaxLogStep / len;
      d2 *= kMaxLogStep / len;
    }
    bool improved = false;
    for (double lambda = 1.0; lambda > 1e-6; lambda *= 0.5) {
      auto next = evaluate_state(params, kind, state->u1 + lambda * d1, state->u2 + lambda * d2,
                                 target1, target2);
      if (next && next->norm() < state->norm()) {
        state = next;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (state->norm() < 1e-11) return state;
  return std::nullopt;
}

OverlapSaddle finish_saddle(const EnsembleParams& params, double omega, double alpha,
                            const NewtonState& s) {
  OverlapSaddle out;
  out.alpha = alpha;
  out.t1 = std::exp(s.u1);
  out.t2 = std::exp(s.u2);
  out.log_gf_value = s.stats.log_value;
  out.gf_value = std::exp(s.stats.log_value);
  out.B = s.stats.B;
  out.determinant = out.B.determinant();
  const double r = params.right();
  out.residual = {s.stats.a[0] / r - (omega - alpha), s.stats.a[1] / r - alpha};
  if (!(std::abs(out.determinant) > kSingularDet) || !out.B.is_positive_definite()) {
    throw Error(Errc::singular_b, "degenerate overlap saddle at alpha = " + std::to_string(alpha));
  }
  const auto q = out.B.inverse_quadratic_form(kOverlapDirection);
  if (!q || !(*q > 0.0)) {
    throw Error(Errc::singular_b, "B^{-1} is not positive along (-1, 1, -1)");
  }
  out.sigma_c2 = 1.0 / (params.left() * r * *q);
  return out;
}

}  // namespace

OverlapSaddle solve_overlap(const EnsembleParams& params, Kind kind, double omega, double alpha,
                            std::optional<SaddleSeed> seed) {
  require_overlap_range(omega, alpha);
  const double r = params.right();
  const double target1 = r * (omega - alpha);
  const double target2 = r * alpha;

  std::vector<SaddleSeed> seeds;
  if (seed) seeds.push_back(*seed);
  const double x = solve_saddle(params, kind, omega);
  for (double scale : {1.0, 0.5, 2.0, 0.1, 10.0}) seeds.emplace_back(x * scale, x * x * scale);

  for (const SaddleSeed& s : seeds) {
    if (auto state = newton_overlap(params, kind, target1, target2, s)) {
      return finish_saddle(params, omega, alpha, *state);
    }
  }

  // Continuation from the alpha = omega^2 solution (t1, t2) = (x, x^2).
  const double start = omega * omega;
  SaddleSeed current{x, x * x};
  constexpr int kContinuationSteps = 64;
  for (int k = 1; k <= kContinuationSteps; ++k) {
    const double a = start + (alpha - start) * k / kContinuationSteps;
    auto state = newton_overlap(params, kind, r * (omega - a), r * a, current);
    if (!state) break;
    current = {std::exp(state->u1), std::exp(state->u2)};
    if (k == kContinuationSteps) return finish_saddle(params, omega, alpha, *state);
  }
  throw Error(Errc::no_convergence,
              "overlap saddle did not converge at omega = " + std::to_string(omega) +
                  ", alpha = " + std::to_string(alpha));
}

OverlapPoint evaluate_overlap(const EnsembleParams& params, Kind kind, double omega, double alpha,
                              std::optional<SaddleSeed> seed) {
  OverlapPoint p;
  p.saddle = solve_overlap(params, kind, omega, alpha, seed);
  const int l = params.left();
  const double u = omega - alpha;
  const double rest = 1.0 - 2.0 * omega + alpha;
  const double lt1 = std::log(p.saddle.t1), lt2 = std::log(p.saddle.t2);
  p.exponent = -(l - 1) * overlap_entropy(omega, alpha) + params.edge_ratio() * p.saddle.log_gf_value -
               l * (2.0 * u * lt1 + alpha * lt2);
  p.psi = (l - 1) * (std::log(alpha) + std::log(rest) - 2.0 * std::log(u)) - l * (lt2 - 2.0 * lt1);
  p.curvature = (l - 1) * (1.0 / u + 0.5 / alpha + 0.5 / rest) - 0.5 / p.saddle.sigma_c2;
  return p;
}

double stationarity_residual(const EnsembleParams& params, Kind kind, double omega, double alpha) {
  return evaluate_overlap(params, kind, omega, alpha).psi;
}

double exponent_curve(const EnsembleParams& params, Kind kind, double omega, double alpha) {
  return evaluate_overlap(params, kind, omega, alpha).exponent;
}

EndpointEstimate endpoint_estimate(const EnsembleParams& params, Kind kind, double omega) {
  if (!(omega > 0.0 && omega < 1.0)) throw Error(Errc::domain, "omega must lie in (0, 1)");
  const int l = params.left();
  const double r = params.right();
  const double base = std::max(0.0, 2.0 * omega - 1.0);

  EndpointEstimate out;
  constexpr double kH1 = 1e-3, kH2 = 1e-4;
  const double e1 = exponent_curve(params, kind, omega, base + kH1);
  const double e2 = exponent_curve(params, kind, omega, base + kH2);
  out.extrapolated = (kH1 * e2 - kH2 * e1) / (kH1 - kH2);

  if (omega <= 0.5) {
    const double entropy = -(2.0 * xlogx(omega) + xlogx(1.0 - 2.0 * omega));
    double coefficient_part;
    if (omega == 0.5) {
      const double lead = diagonal_leading_coefficient(params, kind);
      coefficient_part = lead > 0.0 ? params.edge_ratio() * std::log(lead)
                                    : -std::numeric_limits<double>::infinity();
    } else {
      const double t = detail::solve_log_derivative(2.0 * r * omega, [&](double x) {
        return diagonal_stats(params, kind, x).stats;
      });
      coefficient_part = params.edge_ratio() * diagonal_stats(params, kind, t).log_value -
                         2.0 * l * omega * std::log(t);
    }
    out.reduced = -(l - 1) * entropy + coefficient_part;
    out.value = *out.reduced;
    out.methods_disagree = !(std::abs(*out.reduced - out.extrapolated) <= 1e-2);
  } else {
    out.value = out.extrapolated;
  }
  return out;
}

double endpoint_exponent(const EnsembleParams& params, Kind kind, double omega) {
  return endpoint_estimate(params, kind, omega).value;
}

ConditionReport verify_conditions(const EnsembleParams& params, Kind kind, double omega) {
  const GrowthPoint gp = growth_point(params, kind, omega);
  if (!(gp.growth > 0.0)) {
    throw Error(Errc::domain, "conditions are only defined where the growth rate is positive");
  }
  const double peak_alpha = omega * omega;
  const OverlapPoint peak = evaluate_overlap(params, kind, omega, peak_alpha,
                                             SaddleSeed{gp.saddle_x, gp.saddle_x * gp.saddle_x});
  if (!(std::abs(peak.exponent - 2.0 * gp.growth) < 1e-8)) {
    throw Error(Errc::internal_exponent_mismatch,
                "exponent at alpha = omega^2 differs from twice the growth rate");
  }

  ConditionReport report;
  report.peak_exponent = peak.exponent;
  report.grid_max_exponent = -std::numeric_limits<double>::infinity();

  const double lo = std::max(0.0, 2.0 * omega - 1.0) + kConditionMargin;
  const double hi = omega - kConditionMargin;
  struct GridSample {
    double alpha;
    std::optional<OverlapPoint> point;
  };
  std::vector<GridSample> grid(kConditionGridPoints);
  std::optional<SaddleSeed> seed;
  for (int k = 0; k < kConditionGridPoints; ++k) {
    const double alpha = lo + (hi - lo) * k / (kConditionGridPoints - 1);
    grid[k].alpha = alpha;
    try {
      grid[k].point = evaluate_overlap(params, kind, omega, alpha, seed);
      seed = SaddleSeed{grid[k].point->saddle.t1, grid[k].point->saddle.t2};
      report.grid_max_exponent = std::max(report.grid_max_exponent, grid[k].point->exponent);
    } catch (const Error&) {
      ++report.failed_grid_points;
      seed.reset();
    }
  }

  auto add_root = [&](double a_lo, double a_hi, double psi_lo) {
    for (int it = 0; it < 100 && a_hi - a_lo > 1e-14; ++it) {
      const double mid = 0.5 * (a_lo + a_hi);
      const double psi = stationarity_residual(params, kind, omega, mid);
      if ((psi > 0.0) == (psi_lo > 0.0)) {
        a_lo = mid;
      } else {
        a_hi = mid;
      }
    }
    const double alpha = 0.5 * (a_lo + a_hi);
    const OverlapPoint p = evaluate_overlap(params, kind, omega, alpha);
    report.stationary.push_back({alpha, p.exponent, p.curvature, p.curvature < 0.0});
  };

  for (int k = 0; k + 1 < kConditionGridPoints; ++k) {
    if (!grid[k].point || !grid[k + 1].point) continue;
    const double p0 = grid[k].point->psi, p1 = grid[k + 1].point->psi;
    if (p0 == 0.0) {
      const auto& pt = *grid[k].point;
      report.stationary.push_back({grid[k].alpha, pt.exponent, pt.curvature, pt.curvature < 0.0});
    } else if ((p0 > 0.0) != (p1 > 0.0) && p1 != 0.0) {
      add_root(grid[k].alpha, grid[k + 1].alpha, p0);
    }
  }

  int maxima = 0;
  bool peak_is_max = false;
  for (const StationaryPoint& s : report.stationary) {
    if (!s.local_max) continue;
    ++maxima;
    if (std::abs(s.alpha - peak_alpha) < kRootAlphaTol) peak_is_max = true;
  }
  report.condition1_ok = report.failed_grid_points == 0 && maxima == 1 && peak_is_max &&
                         peak.curvature < 0.0 &&
                         report.peak_exponent >= report.grid_max_exponent - 1e-10;

  const EndpointEstimate endpoint = endpoint_estimate(params, kind, omega);
  report.endpoint_exponent = endpoint.value;
  report.endpoint_methods_disagree = endpoint.methods_disagree;
  report.condition2_ok = report.peak_exponent > endpoint.value;
  return report;
}

double delta_value(const EnsembleParams& params, Kind kind, double omega) {
  const double x = solve_saddle(params, kind, omega);
  const double b = saddle_stats_uni(params, kind, x).b;
  const SaddleStats3 pair = saddle_stats_tri(params, kind, {x, x * x, x});
  const double det = pair.B.determinant();
  const auto q = pair.B.inverse_quadratic_form(kOverlapDirection);
  if (!(std::abs(det) > kSingularDet) || !q || !(*q > 0.0)) {
    throw Error(Errc::singular_b, "degenerate pair saddle at omega = " + std::to_string(omega));
  }
  const int l = params.left();
  const double r = params.right();
  const double sigma_c2 = 1.0 / (l * r * *q);
  const double spread = omega * omega * (1.0 - omega) * (1.0 - omega);
  const double variance_term = spread - (l - 1) * sigma_c2;
  if (!(variance_term > 0.0)) {
    throw Error(Errc::variance_degenerate,
                "omega^2 (1-omega)^2 <= (l-1) sigma_c^2 at omega = " + std::to_string(omega));
  }
  return b * std::sqrt(r) * omega * (1.0 - omega) * std::sqrt(sigma_c2) /
             std::sqrt(det * variance_term) -
         1.0;
}

ConcentrationReport concentration(const EnsembleParams& params, Kind kind, double omega,
                                  double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw Error(Errc::domain, "epsilon must lie in (0, 1]");
  }
  ConcentrationReport out;
  out.abscissa = omega;
  out.epsilon = epsilon;
  out.diagnostics = verify_conditions(params, kind, omega);
  out.condition1_ok = out.diagnostics.condition1_ok;
  out.condition2_ok = out.diagnostics.condition2_ok;
  out.delta = delta_value(params, kind, omega);
  out.bound = 1.0 - out.delta / (epsilon * epsilon);
  return out;
}

double delta34_closed_form(double omega) {
  const double radicand = 9.0 - 32.0 * omega + 32.0 * omega * omega;
  if (radicand < 0.0) throw Error(Errc::domain, "Omega radicand is negative");
  const double big_omega = std::sqrt(radicand);
  const double w = omega * (1.0 - omega);
  const double left = -21.0 + 80.0 * w + 9.0 * big_omega;
  const double right = 81.0 - 27.0 * big_omega + 16.0 * w * (8.0 * w - 18.0 + 3.0 * big_omega);
  const double product = left * right;
  if (!(product > 0.0)) throw Error(Errc::domain, "closed-form radicand product is not positive");
  // The expression is the second-moment ratio E[N^2] / E[N]^2; delta is that minus one.
  return 8.0 * w * (3.0 - big_omega) / std::sqrt(product) - 1.0;
}

double local_limit_ratio(const EnsembleParams& params, Kind kind, int n, double omega,
                         double base_alpha, const std::array<int, 3>& offset) {
  if (n <= 0) throw Error(Errc::domain, "block length must be positive");
  const double base_index = n * base_alpha;
  if (std::abs(base_index - std::round(base_index)) > 1e-9) {
    throw Error(Errc::domain, "n * base_alpha must be an integer");
  }
  if (kind == Kind::weight) {
    const int parity = ((offset[0] % 2) + 2) % 2;
    for (int v : offset) {
      if (((v % 2) + 2) % 2 != parity) {
        throw Error(Errc::off_lattice, "offset leaves the all-even/all-odd lattice of f");
      }
    }
  }
  if (offset == std::array<int, 3>{0, 0, 0}) return 1.0;
  const OverlapSaddle s = solve_overlap(params, kind, omega, base_alpha);
  const double scale = std::sqrt(static_cast<double>(params.right()) / (n * params.left()));
  const Vec3 u{scale * offset[0], scale * offset[1], scale * offset[2]};
  const auto q = s.B.inverse_quadratic_form(u);
  if (!q) throw Error(Errc::singular_b, "B is singular at the base saddle");
  const double shift = offset[0] * std::log(s.t1) + offset[1] * std::log(s.t2) +
                       offset[2] * std::log(s.t1);
  return std::exp(-shift - 0.5 * *q);
}

}  // namespace ldpc
