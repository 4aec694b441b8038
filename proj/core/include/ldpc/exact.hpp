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

// Exact integer/rational oracle: expanded generating functions, coefficients
// of their powers, and the first and second moments of the weight and
// stopping-set distributions as reduced rationals at small block length.

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "ldpc/params.hpp"

namespace ldpc {

using BigInt = boost::multiprecision::mpz_int;
// GMP keeps mpq values canonical: reduced, positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Exponent3 = std::array<int, 3>;

// Sparse polynomial in one or three variables with nonzero integer
// coefficients. Univariate polynomials use the first exponent slot only.
class ExactPolynomial {
 public:
  using TermMap = std::map<Exponent3, BigInt>;

  explicit ExactPolynomial(int variable_count);

  int variable_count() const noexcept { return variable_count_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  // Accumulates c into the coefficient of x^e; zero results are erased.
  void add(const Exponent3& e, const BigInt& c);
  BigInt coefficient(const Exponent3& e) const;
  int degree(int variable) const;
  BigInt coefficient_sum() const;
  bool nonnegative() const;

 private:
  int variable_count_;
  TermMap terms_;
};

// p(x) or beta(x) with exact coefficients.
ExactPolynomial univariate_gf_poly(const EnsembleParams& params, Kind kind);
// f(x1,x2,x3) or g(x1,x2,x3) with exact coefficients. Requires r <= 32.
ExactPolynomial expand_pair_gf(const EnsembleParams& params, Kind kind);

// Dense table of the coefficients of poly^m for exponents up to `bounds`
// (inclusive, per variable). Terms above the bounds are truncated while
// powering; since exponents are nonnegative they never feed back.
class PowerTable {
 public:
  PowerTable(const ExactPolynomial& poly, int m, const Exponent3& bounds);

  const Exponent3& bounds() const noexcept { return bounds_; }
  int power() const noexcept { return power_; }
  // Zero outside the table or off the support.
  BigInt at(const Exponent3& e) const;

 private:
  std::size_t index(const Exponent3& e) const;

  Exponent3 bounds_;
  int power_;
  std::vector<BigInt> cells_;
};

BigInt power_coeff(const ExactPolynomial& poly, int m, const Exponent3& index);

// k! for k <= max, computed once at construction.
class FactorialTable {
 public:
  explicit FactorialTable(int max);
  const BigInt& operator()(int k) const;
  BigInt binomial(int n, int k) const;

 private:
  std::vector<BigInt> values_;
};

// E[N(G, W)] (weight) or E[S(G, W)] (stopping) for the ensemble of
// block length n. Requires r | n*l and 0 <= W <= n.
Rational exact_first_moment(const EnsembleParams& params, int n, int weight, Kind kind);
// S_i = F_i C_i for (2W - n)^+ <= i <= W.
Rational exact_term(const EnsembleParams& params, int n, int weight, int overlap, Kind kind);
// All S_i, indexed from overlap_lower_bound(n, W).
std::vector<Rational> exact_terms(const EnsembleParams& params, int n, int weight, Kind kind);
Rational exact_second_moment(const EnsembleParams& params, int n, int weight, Kind kind);

constexpr int overlap_lower_bound(int n, int weight) {
  return 2 * weight - n > 0 ? 2 * weight - n : 0;
}

// Natural logarithms that survive values beyond double range. Arguments
// must be positive.
double log_value(const BigInt& value);
double log_value(const Rational& value);
double to_double(const Rational& value);

}  // namespace ldpc
