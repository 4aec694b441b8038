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
#include "ldpc/genfun.hpp"
#include "oracles.hpp"

using ldpc::EnsembleParams;
using ldpc::Kind;
using ldpc::Point3;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

const int kDegrees[] = {4, 5, 6, 8, 12, 16, 32};

}  // namespace

TEST(Params, RejectsBadDegrees) {
  EXPECT_THROW(EnsembleParams(3, 65), ldpc::Error);
  EXPECT_THROW(EnsembleParams(1, 4), ldpc::Error);
  EXPECT_THROW(EnsembleParams(4, 4), ldpc::Error);
  EXPECT_NO_THROW(EnsembleParams(3, 64));
  EXPECT_DOUBLE_EQ(EnsembleParams(3, 6).design_rate(), 0.5);
}

TEST(Univariate, MatchesClosedForms) {
  for (int r : kDegrees) {
    const EnsembleParams params(2, r);
    for (double x : {0.0, 0.01, 0.3, 1.0, 2.5, 7.0}) {
      EXPECT_LT(rel(ldpc::weight_gf(params, x), oracle::p(r, x)), 1e-12) << r << " " << x;
      EXPECT_LT(rel(ldpc::stop_gf(params, x), oracle::beta(r, x)), 1e-12) << r << " " << x;
    }
  }
}

TEST(Univariate, LogDerivativeAgainstFiniteDifferences) {
  const double h = 1e-5;
  for (int r : {4, 6, 12}) {
    const EnsembleParams params(2, r);
    for (Kind kind : {Kind::weight, Kind::stopping}) {
      for (double x : {0.05, 0.4, 1.3, 3.0}) {
        const auto lnphi = [&](double u) { return ldpc::log_univariate_gf(params, kind, std::exp(u)); };
        const double u = std::log(x);
        const double a_fd = (lnphi(u + h) - lnphi(u - h)) / (2 * h);
        const double b_fd = (lnphi(u + h) - 2 * lnphi(u) + lnphi(u - h)) / (h * h);
        const auto s = ldpc::saddle_stats_uni(params, kind, x);
        EXPECT_NEAR(s.a, a_fd, 1e-7 * std::max(1.0, a_fd));
        EXPECT_NEAR(s.b, b_fd, 2e-4 * std::max(1.0, b_fd));
      }
    }
  }
}

TEST(Univariate, MeanAtOneAndLargeX) {
  for (int r : kDegrees) {
    const EnsembleParams params(2, r);
    EXPECT_NEAR(ldpc::saddle_stats_uni(params, Kind::weight, 1.0).a, r / 2.0, 1e-12);
    EXPECT_NEAR(ldpc::saddle_stats_uni(params, Kind::stopping, 1e6).a, r, 1e-3);
  }
}

TEST(Univariate, CurvatureIsPositiveAndMeanIncreasing) {
  for (int r : kDegrees) {
    const EnsembleParams params(2, r);
    for (Kind kind : {Kind::weight, Kind::stopping}) {
      double prev = 0.0;
      for (int k = 1; k <= 400; ++k) {
        const double x = std::exp(-12.0 + 0.05 * k);
        const auto s = ldpc::saddle_stats_uni(params, kind, x);
        EXPECT_GT(s.b, 0.0) << r << " " << x;
        EXPECT_GT(s.a, prev) << r << " " << x;
        prev = s.a;
      }
    }
  }
}

TEST(Univariate, RejectsNonpositiveX) {
  const EnsembleParams params(3, 6);
  EXPECT_THROW(ldpc::saddle_stats_uni(params, Kind::weight, 0.0), ldpc::Error);
  EXPECT_THROW(ldpc::weight_gf(params, -1.0), ldpc::Error);
}

TEST(Pair, MatchesClosedForms) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 3.0);
  for (int r : kDegrees) {
    const EnsembleParams params(2, r);
    for (int k = 0; k < 50; ++k) {
      const Point3 pt{u(rng), u(rng), u(rng)};
      EXPECT_LT(rel(ldpc::pair_gf_weight(params, pt), oracle::f(r, pt.x1, pt.x2, pt.x3)), 1e-10);
      const double g = oracle::g(r, pt.x1, pt.x2, pt.x3);
      EXPECT_LT(std::fabs(ldpc::pair_gf_stop(params, pt) - g),
                1e-10 * std::pow(1 + pt.x1 + pt.x2 + pt.x3, r));
    }
  }
}

TEST(Pair, DiagonalIdentities) {
  for (int r : kDegrees) {
    const EnsembleParams params(2, r);
    for (int k = 0; k < 100; ++k) {
      const double x = 0.05 * k;
      const Point3 pt{x, x * x, x};
      const double p = ldpc::weight_gf(params, x);
      const double b = ldpc::stop_gf(params, x);
      EXPECT_LT(rel(ldpc::pair_gf_weight(params, pt), p * p), 1e-10) << r << " " << x;
      EXPECT_LT(rel(ldpc::pair_gf_stop(params, pt), b * b), 1e-10) << r << " " << x;
    }
  }
}

TEST(Pair, SymmetricInOuterVariables) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int r : kDegrees) {
    const EnsembleParams params(2, r);
    for (int k = 0; k < 100; ++k) {
      const double a = u(rng), b = u(rng), c = u(rng);
      for (Kind kind : {Kind::weight, Kind::stopping}) {
        const double v1 = ldpc::pair_gf(params, kind, {a, b, c});
        const double v2 = ldpc::pair_gf(params, kind, {c, b, a});
        EXPECT_LT(rel(v1, v2), 1e-11) << r << " " << a << " " << b << " " << c;
      }
    }
  }
}

TEST(Pair, MomentsAgainstFiniteDifferences) {
  const double h = 1e-5;
  for (int r : {4, 6, 8}) {
    const EnsembleParams params(2, r);
    for (Kind kind : {Kind::weight, Kind::stopping}) {
      for (const Point3& pt : {Point3{0.4, 0.2, 0.4}, Point3{0.3, 0.7, 0.9}, Point3{1.5, 0.1, 0.2}}) {
        const auto lnf = [&](std::array<double, 3> u) {
          return std::log(ldpc::pair_gf(params, kind, {std::exp(u[0]), std::exp(u[1]), std::exp(u[2])}));
        };
        const std::array<double, 3> u0 = {std::log(pt.x1), std::log(pt.x2), std::log(pt.x3)};
        const auto s = ldpc::saddle_stats_tri(params, kind, pt);
        EXPECT_NEAR(s.log_value, lnf(u0), 1e-12 * std::max(1.0, std::fabs(s.log_value)));
        for (int i = 0; i < 3; ++i) {
          auto up = u0, dn = u0;
          up[i] += h;
          dn[i] -= h;
          EXPECT_NEAR(s.a[i], (lnf(up) - lnf(dn)) / (2 * h), 1e-7);
          for (int j = 0; j < 3; ++j) {
            auto pp = u0, pm = u0, mp = u0, mm = u0;
            pp[i] += h; pp[j] += h;
            pm[i] += h; pm[j] -= h;
            mp[i] -= h; mp[j] += h;
            mm[i] -= h; mm[j] -= h;
            const double fd = (lnf(pp) - lnf(pm) - lnf(mp) + lnf(mm)) / (4 * h * h);
            EXPECT_NEAR(s.B(i, j), fd, 2e-4 * std::max(1.0, std::fabs(fd))) << i << j;
          }
        }
        EXPECT_TRUE(s.B.is_symmetric(1e-12));
      }
    }
  }
}

TEST(Pair, RejectsBoundaryPoints) {
  const EnsembleParams params(3, 6);
  EXPECT_THROW(ldpc::saddle_stats_tri(params, Kind::weight, {0.0, 0.5, 0.5}), ldpc::Error);
  EXPECT_THROW(ldpc::pair_gf_weight(params, {-0.1, 0.5, 0.5}), ldpc::Error);
}

TEST(Linalg, InverseAndQuadraticForms) {
  const ldpc::Matrix3 m({4, 1, 0.5, 1, 3, 0.2, 0.5, 0.2, 2});
  ASSERT_TRUE(m.is_positive_definite());
  const auto inv = m.inverse();
  ASSERT_TRUE(inv.has_value());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += m(i, k) * (*inv)(k, j);
      EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-14);
    }
  }
  const ldpc::Vec3 v = {-1, 1, -1};
  EXPECT_NEAR(*m.inverse_quadratic_form(v), inv->quadratic_form(v), 1e-14);
  EXPECT_FALSE(ldpc::Matrix3({1, 2, 0, 2, 1, 0, 0, 0, 1}).is_positive_definite());
}
