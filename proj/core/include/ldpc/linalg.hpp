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

#include <array>
#include <optional>

namespace ldpc {

// Edge-type weights of the pair generating functions: x1 for edges leaving
// only the first word, x2 for the shared support, x3 for only the second.
struct Point3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  bool finite_nonnegative() const;
};

using Vec3 = std::array<double, 3>;

class Matrix3 {
 public:
  Matrix3() = default;
  explicit Matrix3(const std::array<double, 9>& row_major) : m_(row_major) {}

  double operator()(int i, int j) const { return m_[3 * i + j]; }
  double& operator()(int i, int j) { return m_[3 * i + j]; }

  double determinant() const;
  // Empty when |det| <= tiny.
  std::optional<Matrix3> inverse(double tiny = 0.0) const;
  bool is_symmetric(double tol) const;
  // Cholesky factorisation succeeds.
  bool is_positive_definite() const;
  // v^T M^{-1} v via a 3x3 solve; empty if the matrix is singular.
  std::optional<double> inverse_quadratic_form(const Vec3& v) const;
  double quadratic_form(const Vec3& v) const;

 private:
  std::array<double, 9> m_{};
};

}  // namespace ldpc
