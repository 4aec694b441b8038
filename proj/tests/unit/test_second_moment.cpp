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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ldpc/error.hpp"
#include "ldpc/exact.hpp"
#include "ldpc/first_moment.hpp"
#include "ldpc/genfun.hpp"
#include "ldpc/second_moment.hpp"

using ldpc::EnsembleParams;
using ldpc::Kind;

namespace {

const EnsembleParams k36(3, 6);
const EnsembleParams k34(3, 4);

}  // namespace

TEST(SolveOverlap, ProductPointAtIndependentOverlap) {
  for (const auto& params : {k34, k36, EnsembleParams(6, 12)}) {
    for (Kind kind : {Kind::weight, Kind::stopping}) {
      for (double w : {0.2, 0.3, 0.45, 0.6}) {
        const auto s = ldpc::solve_overlap(params, kind, w, w * w);
        const double x = ldpc::solve_saddle(params, kind, w);
        EXPECT_NEAR(s.t1, x, 1e-9);
        EXPECT_NEAR(s.t2, x * x, 1e-9);
        const double phi = ldpc::univariate_gf(params, kind, x);
        EXPECT_NEAR(s.gf_value / (phi * phi), 1.0, 1e-10);
      }
    }
  }
}

TEST(SolveOverlap, ResidualsAndPositivity) {
  for (double alpha : {0.001, 0.05, 0.15, 0.29}) {
    const auto s = ldpc::solve_overlap(k36, Kind::weight, 0.3, alpha);
    EXPECT_LT(std::fabs(s.residual[0]), 1e-10);
    EXPECT_LT(std::fabs(s.residual[1]), 1e-10);
    EXPECT_GT(s.gf_value, 0.0);
    EXPECT_GT(s.sigma_c2, 0.0);
    EXPECT_TRUE(s.B.is_positive_definite());
    // Independent residual from the saddle statistics at (t1, t2, t1).
    const auto st = ldpc::saddle_stats_tri(k36, Kind::weight, {s.t1, s.t2, s.t1});
    EXPECT_NEAR(st.a[0] / 6, 0.3 - alpha, 1e-10);
    EXPECT_NEAR(st.a[1] / 6, alpha, 1e-10);
    EXPECT_NEAR(st.a[2] / 6, 0.3 - alpha, 1e-10);
    const ldpc::Vec3 v = {-1, 1, -1};
    EXPECT_NEAR(s.sigma_c2, 1.0 / (18.0 * *st.B.inverse_quadratic_form(v)), 1e-12);
  }
}

TEST(SolveOverlap, FullOverlapLimit) {
  const double x = ldpc::solve_saddle(k36, Kind::weight, 0.3);
  const auto s = ldpc::solve_overlap(k36, Kind::weight, 0.3, 0.3 - 1e-7);
  EXPECT_LT(s.t1, 1e-2);
  EXPECT_NEAR(s.t2, x, 1e-3);
}

TEST(SolveOverlap, RejectsOutOfRangeOverlap) {
  EXPECT_THROW(ldpc::solve_overlap(k36, Kind::weight, 0.3, 0.3), ldpc::Error);
  EXPECT_THROW(ldpc::solve_overlap(k36, Kind::weight, 0.7, 0.35), ldpc::Error);
  EXPECT_THROW(ldpc::solve_overlap(k36, Kind::weight, 0.3, 0.0), ldpc::Error);
}

TEST(Stationarity, VanishesAtIndependentOverlap) {
  EXPECT_NEAR(ldpc::stationarity_residual(k36, Kind::weight, 0.3, 0.09), 0.0, 1e-8);
  EXPECT_NEAR(ldpc::stationarity_residual(k34, Kind::weight, 0.25, 0.0625), 0.0, 1e-8);
  EXPECT_GT(ldpc::stationarity_residual(k36, Kind::weight, 0.3, 0.08), 0.0);
  EXPECT_LT(ldpc::stationarity_residual(k36, Kind::weight, 0.3, 0.10), 0.0);
}

TEST(Stationarity, IsTheExponentDerivative) {
  const double h = 1e-6;
  for (double alpha : {0.02, 0.09, 0.2}) {
    const double fd = (ldpc::exponent_curve(k36, Kind::weight, 0.3, alpha + h) -
                       ldpc::exponent_curve(k36, Kind::weight, 0.3, alpha - h)) /
                      (2 * h);
    EXPECT_NEAR(ldpc::stationarity_residual(k36, Kind::weight, 0.3, alpha), fd, 1e-6);
  }
}

TEST(ExponentCurve, AnchorIdentities) {
  for (const auto& params : {k34, k36, EnsembleParams(6, 8)}) {
    for (Kind kind : {Kind::weight, Kind::stopping}) {
      const double w = 0.3;
      const double g = ldpc::growth_rate(params, kind, w);
      EXPECT_NEAR(ldpc::exponent_curve(params, kind, w, w * w), 2 * g, 1e-8);
    }
  }
  const double g = ldpc::growth_rate(k36, Kind::weight, 0.3);
  EXPECT_NEAR(ldpc::exponent_curve(k36, Kind::weight, 0.3, 0.3 - 1e-4), g, 1e-3);
}

TEST(ExponentCurve, PeakIsTheGlobalMaximum) {
  const double peak = ldpc::exponent_curve(k36, Kind::weight, 0.3, 0.09);
  for (int k = 1; k < 300; ++k) {
    const double alpha = 0.3 * k / 300.0;
    if (std::fabs(alpha - 0.09) < 1e-9) continue;
    EXPECT_LT(ldpc::exponent_curve(k36, Kind::weight, 0.3, alpha), peak) << alpha;
  }
}

TEST(ExponentCurve, MatchesExactTermGrowth) {
  // (1/n) ln S_i against the exponent at alpha = i / n. The gap is the
  // polynomial prefactor, of order ln(n) / n.
  const int sizes[] = {24, 48, 96};
  double errs[3];
  for (int s = 0; s < 3; ++s) {
    const int n = sizes[s];
    const int w = n / 3;
    const int i = n / 6;
    const double e = ldpc::exponent_curve(k36, Kind::weight, 1.0 / 3.0, 1.0 / 6.0);
    const double exact = ldpc::log_value(ldpc::exact_term(k36, n, w, i, Kind::weight)) / n;
    errs[s] = std::fabs(exact - e);
  }
  EXPECT_LT(errs[1], 0.1);
  EXPECT_LT(errs[1], errs[0]);
  EXPECT_LT(errs[2], errs[1]);
  EXPECT_LT(errs[0] * 24 / std::log(24.0), 2.0);
}

TEST(Endpoint, BelowPeakAndMethodsAgree) {
  const double g = ldpc::growth_rate(k36, Kind::weight, 0.3);
  const auto est = ldpc::endpoint_estimate(k36, Kind::weight, 0.3);
  ASSERT_TRUE(est.reduced.has_value());
  EXPECT_LT(est.value, 2 * g);
  EXPECT_NEAR(*est.reduced, est.extrapolated, 1e-3);
  EXPECT_FALSE(est.methods_disagree);
  EXPECT_DOUBLE_EQ(ldpc::endpoint_exponent(k36, Kind::weight, 0.3), est.value);
}

TEST(Endpoint, AboveHalfUsesTheShiftedEdge) {
  const auto est = ldpc::endpoint_estimate(k36, Kind::weight, 0.7);
  EXPECT_FALSE(est.reduced.has_value());
  // The all-ones word maps weight 0.7 pairs onto weight 0.3 pairs.
  EXPECT_NEAR(est.value, ldpc::endpoint_exponent(k36, Kind::weight, 0.3), 1e-3);
}

TEST(Endpoint, DisjointPairsAtHalfWeight) {
  const double e0 = ldpc::endpoint_exponent(k36, Kind::weight, 0.5);
  EXPECT_NEAR(e0, ldpc::growth_rate(k36, Kind::weight, 0.5), 1e-9);
  const double g24 = ldpc::log_value(ldpc::exact_term(k36, 24, 12, 0, Kind::weight)) / 24;
  const double g48 = ldpc::log_value(ldpc::exact_term(k36, 48, 24, 0, Kind::weight)) / 48;
  EXPECT_LT(std::fabs(g48 - e0), std::fabs(g24 - e0));
}

TEST(Conditions, HoldForTabulatedEnsembles) {
  const auto a = ldpc::verify_conditions(k36, Kind::weight, 0.3);
  EXPECT_TRUE(a.condition1_ok);
  EXPECT_TRUE(a.condition2_ok);
  EXPECT_EQ(a.failed_grid_points, 0);
  int maxima = 0;
  for (const auto& sp : a.stationary) {
    if (sp.local_max) {
      ++maxima;
      EXPECT_NEAR(sp.alpha, 0.09, 1e-6);
    }
  }
  EXPECT_EQ(maxima, 1);
  const auto b = ldpc::verify_conditions(k34, Kind::weight, 0.5);
  EXPECT_TRUE(b.condition1_ok);
  EXPECT_TRUE(b.condition2_ok);
  const auto c = ldpc::verify_conditions(k36, Kind::stopping, 0.3);
  EXPECT_TRUE(c.condition1_ok);
  EXPECT_TRUE(c.condition2_ok);
}

TEST(Conditions, RequirePositiveGrowth) {
  try {
    ldpc::verify_conditions(k36, Kind::weight, 0.01);
    FAIL() << "expected an error";
  } catch (const ldpc::Error& e) {
    EXPECT_EQ(e.code(), ldpc::Errc::domain);
  }
}

TEST(Delta, HalfWeightVanishes) {
  for (const auto& params : {k34, k36, EnsembleParams(6, 8), EnsembleParams(6, 12)}) {
    const auto rep = ldpc::concentration(params, Kind::weight, 0.5, 0.95);
    EXPECT_NEAR(rep.delta, 0.0, 1e-8) << params.label();
    EXPECT_NEAR(rep.bound, 1.0, 1e-8);
  }
}

TEST(Delta, TabulatedBounds) {
  const auto a = ldpc::concentration(
      k36, Kind::weight, ldpc::min_abscissa(k36, Kind::weight) + 1e-6, 0.95);
  EXPECT_NEAR(a.bound, 0.740611, 1e-4);
  const EnsembleParams p68(6, 8);
  const auto b =
      ldpc::concentration(p68, Kind::weight, ldpc::min_abscissa(p68, Kind::weight) + 1e-6, 0.95);
  EXPECT_NEAR(b.bound, 0.989098, 1e-4);
}

TEST(Delta, NonnegativeAndBoundBelowOne) {
  for (const auto& params : {k34, k36}) {
    for (Kind kind : {Kind::weight, Kind::stopping}) {
      for (double w = 0.15; w < 0.86; w += 0.05) {
        if (ldpc::growth_rate(params, kind, w) <= 0) continue;
        const auto rep = ldpc::concentration(params, kind, w, 0.95);
        EXPECT_GE(rep.delta, -1e-9);
        EXPECT_LE(rep.bound, 1.0 + 1e-9);
      }
    }
  }
}

TEST(Delta, RejectsBadEpsilon) {
  EXPECT_THROW(ldpc::concentration(k36, Kind::weight, 0.3, 0.0), ldpc::Error);
  EXPECT_THROW(ldpc::concentration(k36, Kind::weight, 0.3, 1.5), ldpc::Error);
}

TEST(ClosedForm, SpotValuesAndPipeline) {
  EXPECT_NEAR(ldpc::delta34_closed_form(0.5), 0.0, 1e-12);
  EXPECT_NEAR(ldpc::delta34_closed_form(0.25), 0.08059, 1e-4);
  for (int k = 0; k <= 14; ++k) {
    const double w = 0.15 + 0.05 * k;
    EXPECT_NEAR(ldpc::delta_value(k34, Kind::weight, w), ldpc::delta34_closed_form(w), 1e-9) << w;
  }
}

TEST(LocalLimit, IdentityAndLattice) {
  EXPECT_DOUBLE_EQ(ldpc::local_limit_ratio(k36, Kind::weight, 24, 1.0 / 3, 1.0 / 6, {0, 0, 0}), 1.0);
  try {
    ldpc::local_limit_ratio(k36, Kind::weight, 24, 1.0 / 3, 1.0 / 6, {1, 0, 0});
    FAIL() << "expected an error";
  } catch (const ldpc::Error& e) {
    EXPECT_EQ(e.code(), ldpc::Errc::off_lattice);
  }
  EXPECT_NO_THROW(ldpc::local_limit_ratio(k36, Kind::stopping, 24, 1.0 / 3, 1.0 / 6, {1, 0, 0}));
}

TEST(LocalLimit, AgreesWithExactCoefficients) {
  const auto f = ldpc::expand_pair_gf(k36, Kind::weight);
  const std::array<int, 3> offset = {-3, 3, -3};
  double errs[2];
  const int sizes[] = {24, 48};
  for (int s = 0; s < 2; ++s) {
    const int n = sizes[s];
    const int base = n / 2;  // n l / 6
    const ldpc::PowerTable table(f, n / 2, {base + 3, base + 3, base + 3});
    const double exact = ldpc::to_double(
        ldpc::Rational(table.at({base - 3, base + 3, base - 3}), table.at({base, base, base})));
    const double pred = ldpc::local_limit_ratio(k36, Kind::weight, n, 1.0 / 3, 1.0 / 6, offset);
    errs[s] = std::fabs(pred / exact - 1);
  }
  EXPECT_LT(errs[0], 0.3);
  EXPECT_LT(errs[1], errs[0]);
}

TEST(SigmaC, SecondDifferenceOfExactCoefficients) {
  const auto f = ldpc::expand_pair_gf(k36, Kind::weight);
  const int l = 3;
  double errs[2];
  const int sizes[] = {48, 96};
  for (int s = 0; s < 2; ++s) {
    const int n = sizes[s];
    const int w = n / 3;
    const int i = static_cast<int>(std::lround(n / 9.0));
    const ldpc::PowerTable table(f, n / 2, {l * (w - i + 1), l * (i + 1), l * (w - i + 1)});
    const auto lnc = [&](int k) { return ldpc::log_value(table.at({l * (w - k), l * k, l * (w - k)})); };
    const double d2 = lnc(i + 1) - 2 * lnc(i) + lnc(i - 1);
    // n omega^2 is not an integer, so the index-matched saddle is the sharper prediction.
    const double at_index = ldpc::solve_overlap(k36, Kind::weight, 1.0 / 3, double(i) / n).sigma_c2;
    const double at_peak = ldpc::solve_overlap(k36, Kind::weight, 1.0 / 3, 1.0 / 9).sigma_c2;
    EXPECT_NEAR(d2 * n * at_peak, -1.0, 0.2) << n;
    errs[s] = std::fabs(d2 * n * at_index + 1.0);
    EXPECT_LT(errs[s], 0.2) << n;
  }
  EXPECT_LT(errs[1], errs[0]);
}
