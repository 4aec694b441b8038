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

#include "ldpc/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ldpc {

bool Point3::finite_nonnegative() const {
  for (double v : {x1, x2, x3}) {
    if (!std::isfinite(v) || v < 0.0) return false;
  }
  return true;
}

double Matrix3::determinant() const {
  const Matrix3& a = *this;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

std::optional<Matrix3> Matrix3::inverse(double tiny) const {
  const double det = determinant();
  if (!(std::abs(det) > tiny)) return std::nullopt;
  const Matrix3& a = *this;
  Matrix3 inv;
  inv(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / det;
  inv(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / det;
  inv(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / det;
  inv(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / det;
  inv(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / det;
  inv(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / det;
  inv(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / det;
  inv(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / det;
  inv(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / det;
  return inv;
}

bool Matrix3::is_symmetric(double tol) const {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double scale = std::max({1.0, std::abs((*this)(i, j)), std::abs((*this)(j, i))});
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol * scale) return false;
    }
  }
  return true;
}

bool Matrix3::is_positive_definite() const {
  std::array<double, 9> l{};
  for (int j = 0; j < 3; ++j) {
    double d = (*this)(j, j);
    for (int k = 0; k < j; ++k) d -= l[3 * j + k] * l[3 * j + k];
    if (!(d > 0.0)) return false;
    l[3 * j + j] = std::sqrt(d);
    for (int i = j + 1; i < 3; ++i) {
      double s = (*this)(i, j);
      for (int k = 0; k < j; ++k) s -= l[3 * i + k] * l[3 * j + k];
      l[3 * i + j] = s / l[3 * j + j];
    }
  }
  return true;
}

std::optional<double> Matrix3::inverse_quadratic_form(const Vec3& v) const {
  auto inv = inverse();
  if (!inv) return std::nullopt;
  return inv->quadratic_form(v);
}

double Matrix3::quadratic_form(const Vec3& v) const {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s += v[i] * (*this)(i, j) * v[j];
  }
  return s;
}

}  // namespace ldpc
