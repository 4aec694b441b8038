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

// Second-order forward-mode jets: value, gradient and Hessian of a scalar
// function of N variables, propagated exactly through +, -, * and integer
// powers. Used to get analytic log-derivative statistics of the generating
// functions without finite differences.

#include <array>
#include <cmath>

namespace ldpc::detail {

template <int N>
struct Jet {
  double v = 0.0;
  std::array<double, N> g{};
  std::array<double, N * N> h{};

  static Jet constant(double c) {
    Jet j;
    j.v = c;
    return j;
  }
  static Jet variable(int index, double x) {
    Jet j;
    j.v = x;
    j.g[index] = 1.0;
    return j;
  }
  // Same value moving along several coordinates at once (e.g. x1 = x3 = t).
  static Jet tied(std::initializer_list<int> indices, double x) {
    Jet j;
    j.v = x;
    for (int i : indices) j.g[i] = 1.0;
    return j;
  }

  double grad(int i) const { return g[i]; }
  double hess(int i, int k) const { return h[N * i + k]; }
};

template <int N>
Jet<N> operator+(Jet<N> a, const Jet<N>& b) {
  a.v += b.v;
  for (int i = 0; i < N; ++i) a.g[i] += b.g[i];
  for (int i = 0; i < N * N; ++i) a.h[i] += b.h[i];
  return a;
}

template <int N>
Jet<N> operator-(const Jet<N>& a) {
  Jet<N> r = a;
  r.v = -r.v;
  for (auto& x : r.g) x = -x;
  for (auto& x : r.h) x = -x;
  return r;
}

template <int N>
Jet<N> operator-(const Jet<N>& a, const Jet<N>& b) {
  return a + (-b);
}

template <int N>
Jet<N> operator+(Jet<N> a, double c) {
  a.v += c;
  return a;
}
template <int N>
Jet<N> operator+(double c, Jet<N> a) {
  a.v += c;
  return a;
}
template <int N>
Jet<N> operator-(Jet<N> a, double c) {
  a.v -= c;
  return a;
}
template <int N>
Jet<N> operator-(double c, const Jet<N>& a) {
  return (-a) + c;
}

template <int N>
Jet<N> operator*(Jet<N> a, double c) {
  a.v *= c;
  for (auto& x : a.g) x *= c;
  for (auto& x : a.h) x *= c;
  return a;
}
template <int N>
Jet<N> operator*(double c, Jet<N> a) {
  return a * c;
}

template <int N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v * b.v;
  for (int i = 0; i < N; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
  for (int i = 0; i < N; ++i) {
    for (int k = 0; k < N; ++k) {
      r.h[N * i + k] = a.h[N * i + k] * b.v + a.v * b.h[N * i + k] +
                       a.g[i] * b.g[k] + b.g[i] * a.g[k];
    }
  }
  return r;
}

inline double ipow(double x, int n) { return std::pow(x, n); }

template <int N>
Jet<N> ipow(const Jet<N>& a, int n) {
  if (n == 0) return Jet<N>::constant(1.0);
  if (n == 1) return a;
  const double pm2 = std::pow(a.v, n - 2);
  const double pm1 = pm2 * a.v;
  Jet<N> r;
  r.v = pm1 * a.v;
  const double d1 = n * pm1;
  const double d2 = static_cast<double>(n) * (n - 1) * pm2;
  for (int i = 0; i < N; ++i) r.g[i] = d1 * a.g[i];
  for (int i = 0; i < N; ++i) {
    for (int k = 0; k < N; ++k) {
      r.h[N * i + k] = d1 * a.h[N * i + k] + d2 * a.g[i] * a.g[k];
    }
  }
  return r;
}

}  // namespace ldpc::detail
