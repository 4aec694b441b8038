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

#include "ldpc/first_moment.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "ldpc/error.hpp"
#include "ldpc/genfun.hpp"
#include "root.hpp"

namespace ldpc {

namespace {

void require_interior(double abscissa) {
  if (!(abscissa > 0.0 && abscissa < 1.0)) {
    throw Error(Errc::domain, "abscissa must lie strictly inside (0, 1)");
  }
}

constexpr double kScanStep = 1e-4;
constexpr double kScanEnd = 0.5;

}  // namespace

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log(p) + (1.0 - p) * std::log1p(-p));
}

double solve_saddle(const EnsembleParams& params, Kind kind, double abscissa) {
  require_interior(abscissa);
  return detail::solve_log_derivative(params.right() * abscissa, [&](double x) {
    return saddle_stats_uni(params, kind, x);
  });
}

GrowthPoint growth_point(const EnsembleParams& params, Kind kind, double abscissa) {
  GrowthPoint gp;
  gp.abscissa = abscissa;
  gp.saddle_x = solve_saddle(params, kind, abscissa);
  gp.curvature_b = saddle_stats_uni(params, kind, gp.saddle_x).b;
  const int l = params.left();
  gp.growth = params.edge_ratio() * log_univariate_gf(params, kind, gp.saddle_x) -
              (l - 1) * binary_entropy(abscissa) - l * abscissa * std::log(gp.saddle_x);
  return gp;
}

double growth_rate(const EnsembleParams& params, Kind kind, double abscissa) {
  return growth_point(params, kind, abscissa).growth;
}

double hayman_coeff(const ExactPolynomial& poly, long m, long k) {
  if (poly.variable_count() != 1) {
    throw Error(Errc::unsupported_poly, "Hayman approximation needs a univariate polynomial");
  }
  if (poly.size() < 2) {
    throw Error(Errc::unsupported_poly, "Hayman approximation needs at least two terms");
  }
  if (poly.coefficient({0, 0, 0}) == 0 || !poly.nonnegative()) {
    throw Error(Errc::unsupported_poly, "need nonnegative coefficients and a constant term");
  }
  const long degree = poly.degree(0);
  if (m <= 0 || k <= 0 || k >= m * degree) {
    throw Error(Errc::domain, "Hayman index must satisfy 0 < k < m * deg");
  }

  std::vector<int> exponents;
  std::vector<double> log_coeffs;
  int period = 0;
  for (const auto& [e, c] : poly.terms()) {
    exponents.push_back(e[0]);
    log_coeffs.push_back(log_value(c));
    period = std::gcd(period, e[0]);
  }
  if (k % period != 0) return 0.0;

  // log-sum-exp evaluation of ln q, a and b at x = exp(u).
  struct Eval {
    double log_q, a, b;
  };
  auto evaluate = [&](double x) {
    const double u = std::log(x);
    double peak = -INFINITY;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      peak = std::max(peak, log_coeffs[i] + exponents[i] * u);
    }
    double s0 = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      const double w = std::exp(log_coeffs[i] + exponents[i] * u - peak);
      s0 += w;
      s1 += w * exponents[i];
      s2 += w * exponents[i] * static_cast<double>(exponents[i]);
    }
    const double a = s1 / s0;
    return Eval{peak + std::log(s0), a, s2 / s0 - a * a};
  };

  const double target = static_cast<double>(k) / static_cast<double>(m);
  const double x = detail::solve_log_derivative(target, [&](double t) {
    const Eval e = evaluate(t);
    return SaddleStats1{e.a, e.b};
  });
  const Eval e = evaluate(x);
  const double log_estimate = m * e.log_q - k * std::log(x) -
                              0.5 * std::log(2.0 * std::numbers::pi * m * e.b);
  return period * std::exp(log_estimate);
}

AvgCount avg_count(const EnsembleParams& params, Kind kind, int n, double abscissa) {
  require_interior(abscissa);
  if (n <= 0) throw Error(Errc::domain, "block length must be positive");
  const GrowthPoint gp = growth_point(params, kind, abscissa);
  AvgCount out;
  out.n = n;
  out.exponent = gp.growth;

  // p has only even powers; beta's exponent set has gcd 1.
  const int period = kind == Kind::weight ? 2 : 1;
  const double edges = static_cast<double>(n) * params.left() * abscissa;
  const double rounded = std::round(edges);
  const bool integral = std::abs(edges - rounded) < 1e-9 * std::max(1.0, edges);
  if (integral && std::fmod(rounded, period) != 0.0) {
    out.prefactor = 0.0;
    out.count = 0.0;
    return out;
  }
  out.prefactor = period * std::sqrt(static_cast<double>(params.right())) /
                  std::sqrt(2.0 * std::numbers::pi * n * gp.curvature_b);
  out.count = out.prefactor * std::exp(n * out.exponent);
  return out;
}

double min_abscissa(const EnsembleParams& params, Kind kind) {
  double prev_x = kScanStep;
  double prev = growth_rate(params, kind, prev_x);
  if (prev >= 0.0) {
    throw Error(Errc::no_root, "growth rate is nonnegative at the start of the scan");
  }
  const int steps = static_cast<int>(std::lround(kScanEnd / kScanStep));
  for (int i = 2; i <= steps; ++i) {
    const double x = i * kScanStep;
    const double g = growth_rate(params, kind, x);
    if (g >= 0.0) {
      double lo = prev_x, hi = x;
      while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (growth_rate(params, kind, mid) < 0.0 ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_x = x;
    prev = g;
  }
  throw Error(Errc::no_root, "growth rate has no sign change in (0, 0.5) for (" +
                                 params.label() + ")");
}

}  // namespace ldpc
