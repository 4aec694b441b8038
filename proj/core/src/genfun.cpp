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

#include "ldpc/genfun.hpp"

#include <cmath>

#include "gf_expr.hpp"
#include "ldpc/error.hpp"

namespace ldpc {

namespace {

using detail::Jet;

void require_nonnegative(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(Errc::domain, "generating function argument must be finite and >= 0");
  }
}

void require_nonnegative(const Point3& pt) {
  if (!pt.finite_nonnegative()) {
    throw Error(Errc::domain, "pair generating function point must be finite and >= 0");
  }
}

template <class T>
T eval_uni(int r, Kind kind, const T& x, double inv) {
  return kind == Kind::weight ? detail::weight_uni(r, x, inv) : detail::stop_uni(r, x, inv);
}

template <class T>
T eval_pair(int r, Kind kind, const T& x1, const T& x2, const T& x3, double inv) {
  return kind == Kind::weight ? detail::pair_weight(r, x1, x2, x3, inv)
                              : detail::pair_stop(r, x1, x2, x3, inv);
}

SaddleStats1 stats_from_jet(const Jet<1>& j, double x) {
  const double d1 = j.grad(0) / j.v;
  const double d2 = j.hess(0, 0) / j.v;
  SaddleStats1 s;
  s.a = x * d1;
  s.b = s.a + x * x * (d2 - d1 * d1);
  return s;
}

}  // namespace

double weight_gf(const EnsembleParams& params, double x) {
  require_nonnegative(x);
  return detail::weight_uni(params.right(), x, 1.0);
}

double stop_gf(const EnsembleParams& params, double x) {
  require_nonnegative(x);
  return detail::stop_uni(params.right(), x, 1.0);
}

double univariate_gf(const EnsembleParams& params, Kind kind, double x) {
  return kind == Kind::weight ? weight_gf(params, x) : stop_gf(params, x);
}

double log_univariate_gf(const EnsembleParams& params, Kind kind, double x) {
  require_nonnegative(x);
  const double inv = 1.0 / (1.0 + x);
  const double scaled = eval_uni(params.right(), kind, x, inv);
  if (!(scaled > 0.0)) throw Error(Errc::nonpositive_gf, "univariate generating function <= 0");
  return std::log(scaled) + params.right() * std::log1p(x);
}

double pair_gf_weight(const EnsembleParams& params, const Point3& pt) {
  require_nonnegative(pt);
  return detail::pair_weight(params.right(), pt.x1, pt.x2, pt.x3, 1.0);
}

double pair_gf_stop(const EnsembleParams& params, const Point3& pt) {
  require_nonnegative(pt);
  return detail::pair_stop(params.right(), pt.x1, pt.x2, pt.x3, 1.0);
}

double pair_gf(const EnsembleParams& params, Kind kind, const Point3& pt) {
  return kind == Kind::weight ? pair_gf_weight(params, pt) : pair_gf_stop(params, pt);
}

SaddleStats1 saddle_stats_uni(const EnsembleParams& params, Kind kind, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(Errc::domain, "saddle statistics need x > 0");
  }
  const double inv = 1.0 / (1.0 + x);
  const Jet<1> j = eval_uni(params.right(), kind, Jet<1>::variable(0, x), inv);
  if (!(j.v > 0.0)) throw Error(Errc::nonpositive_gf, "univariate generating function <= 0");
  return stats_from_jet(j, x);
}

SaddleStats3 saddle_stats_tri(const EnsembleParams& params, Kind kind, const Point3& pt) {
  if (!(pt.x1 > 0.0 && pt.x2 > 0.0 && pt.x3 > 0.0) || !pt.finite_nonnegative()) {
    throw Error(Errc::domain, "trivariate saddle statistics need a positive point");
  }
  const double s = 1.0 + pt.x1 + pt.x2 + pt.x3;
  const double inv = 1.0 / s;
  using J = Jet<3>;
  const J f = eval_pair(params.right(), kind, J::variable(0, pt.x1), J::variable(1, pt.x2),
                        J::variable(2, pt.x3), inv);
  if (!(f.v > 0.0)) {
    throw Error(Errc::nonpositive_gf, "pair generating function <= 0 at saddle point");
  }
  SaddleStats3 out;
  out.log_value = std::log(f.v) + params.right() * std::log(s);
  Vec3 g{};
  for (int i = 0; i < 3; ++i) {
    g[i] = f.grad(i) / f.v;
    out.a[i] = pt[i] * g[i];
  }
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      const double cross = pt[i] * pt[k] * (f.hess(i, k) / f.v - g[i] * g[k]);
      out.B(i, k) = (i == k ? out.a[i] : 0.0) + cross;
    }
  }
  return out;
}

DiagonalStats diagonal_stats(const EnsembleParams& params, Kind kind, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(Errc::domain, "diagonal statistics need t > 0");
  }
  const double s = 1.0 + 2.0 * t;
  using J = Jet<1>;
  const J x = J::variable(0, t);
  const J f = eval_pair(params.right(), kind, x, J::constant(0.0), x, 1.0 / s);
  if (!(f.v > 0.0)) {
    throw Error(Errc::nonpositive_gf, "diagonal generating function <= 0");
  }
  DiagonalStats out;
  out.stats = stats_from_jet(f, t);
  out.log_value = std::log(f.v) + params.right() * std::log(s);
  return out;
}

double diagonal_leading_coefficient(const EnsembleParams& params, Kind kind) {
  const int r = params.right();
  const double top = std::ldexp(1.0, r);
  if (kind == Kind::weight) {
    // (1/4)[(1+2t)^r + (1-2t)^r + 2]
    return r % 2 == 0 ? top / 2.0 : 0.0;
  }
  // (1+2t)^r - 2 r t (1+t)^{r-1} + r(r-1) t^2
  return top - 2.0 * r;
}

}  // namespace ldpc
