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

#include "ldpc/exact.hpp"

#include <gmp.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

#include "ldpc/error.hpp"

namespace ldpc {

namespace {

void require_moment_args(const EnsembleParams& params, int n, int weight) {
  if (n <= 0 || (static_cast<long>(n) * params.left()) % params.right() != 0) {
    throw Error(Errc::divisibility, "r must divide n*l (n=" + std::to_string(n) + ")");
  }
  if (weight < 0 || weight > n) {
    throw Error(Errc::domain, "weight must lie in [0, n]");
  }
}

}  // namespace

ExactPolynomial::ExactPolynomial(int variable_count) : variable_count_(variable_count) {
  if (variable_count != 1 && variable_count != 3) {
    throw Error(Errc::domain, "ExactPolynomial supports 1 or 3 variables");
  }
}

void ExactPolynomial::add(const Exponent3& e, const BigInt& c) {
  for (int v = 0; v < 3; ++v) {
    if (e[v] < 0 || (v >= variable_count_ && e[v] != 0)) {
      throw Error(Errc::domain, "exponent outside the polynomial's variables");
    }
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt ExactPolynomial::coefficient(const Exponent3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int ExactPolynomial::degree(int variable) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[variable]);
  return d;
}

BigInt ExactPolynomial::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool ExactPolynomial::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

ExactPolynomial univariate_gf_poly(const EnsembleParams& params, Kind kind) {
  const int r = params.right();
  ExactPolynomial poly(1);
  BigInt binom = 1;
  for (int k = 0; k <= r; ++k) {
    if (kind == Kind::weight) {
      if (k % 2 == 0) poly.add({k, 0, 0}, binom);
    } else {
      poly.add({k, 0, 0}, binom);
    }
    binom = binom * (r - k) / (k + 1);
  }
  if (kind == Kind::stopping) poly.add({1, 0, 0}, BigInt(-r));
  return poly;
}

ExactPolynomial expand_pair_gf(const EnsembleParams& params, Kind kind) {
  const int r = params.right();
  if (r > 32) throw Error(Errc::too_large, "exact pair expansion supports r <= 32");
  const FactorialTable fact(r);
  ExactPolynomial poly(3);

  // Multinomial r! / (k0! k1! k2! k3!) over all k1 + k2 + k3 <= r.
  auto for_each_term = [&](auto&& emit) {
    for (int k1 = 0; k1 <= r; ++k1) {
      for (int k2 = 0; k1 + k2 <= r; ++k2) {
        for (int k3 = 0; k1 + k2 + k3 <= r; ++k3) {
          const int k0 = r - k1 - k2 - k3;
          const BigInt multinomial = fact(r) / (fact(k0) * fact(k1) * fact(k2) * fact(k3));
          emit(Exponent3{k1, k2, k3}, multinomial);
        }
      }
    }
  };

  if (kind == Kind::weight) {
    // (1/4) sum over sign patterns (+++), (+--), (-+-), (--+).
    constexpr int kSigns[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    for_each_term([&](const Exponent3& e, const BigInt& m) {
      int total = 0;
      for (const auto& s : kSigns) {
        int sign = 1;
        for (int v = 0; v < 3; ++v) {
          if (s[v] < 0 && e[v] % 2 == 1) sign = -sign;
        }
        total += sign;
      }
      if (total != 0) poly.add(e, m * total / 4);
    });
    return poly;
  }

  for_each_term([&](const Exponent3& e, const BigInt& m) { poly.add(e, m); });
  BigInt binom = 1;  // C(r-1, k)
  for (int k = 0; k <= r - 1; ++k) {
    const BigInt c = BigInt(r) * binom;
    poly.add({k, 1, 0}, -c);  // -r (1+x1)^{r-1} x2
    poly.add({k, 0, 1}, -c);  // -r (1+x1)^{r-1} x3
    poly.add({1, 0, k}, -c);  // -r x1 (1+x3)^{r-1}
    poly.add({0, 1, k}, -c);  // -r x2 (1+x3)^{r-1}
    binom = binom * (r - 1 - k) / (k + 1);
  }
  poly.add({1, 0, 1}, BigInt(r) * (r - 1));
  poly.add({0, 1, 0}, BigInt(r));
  if (!poly.nonnegative()) {
    throw Error(Errc::internal_exponent_mismatch, "stopping pair expansion has a negative coefficient");
  }
  return poly;
}

PowerTable::PowerTable(const ExactPolynomial& poly, int m, const Exponent3& bounds)
    : bounds_(bounds), power_(m) {
  for (int v = 0; v < 3; ++v) {
    if (bounds_[v] < 0) throw Error(Errc::domain, "negative power-table bound");
    if (v >= poly.variable_count()) bounds_[v] = 0;
  }
  if (m < 0) throw Error(Errc::domain, "negative power");
  const std::size_t n1 = bounds_[0] + 1, n2 = bounds_[1] + 1, n3 = bounds_[2] + 1;
  cells_.assign(n1 * n2 * n3, BigInt(0));
  cells_[0] = 1;

  struct Term {
    Exponent3 e;
    BigInt c;
    bool small;
    unsigned long ulong_value;
  };
  std::vector<Term> terms;
  for (const auto& [e, c] : poly.terms()) {
    if (e[0] > bounds_[0] || e[1] > bounds_[1] || e[2] > bounds_[2]) continue;
    const bool small = c > 0 && c <= ULONG_MAX;
    terms.push_back({e, c, small, small ? c.convert_to<unsigned long>() : 0UL});
  }

  Exponent3 reach{0, 0, 0};
  std::vector<BigInt> next(cells_.size());
  for (int step = 0; step < m; ++step) {
    for (auto& v : next) v = 0;
    Exponent3 new_reach = reach;
    for (int a = 0; a <= reach[0]; ++a) {
      for (int b = 0; b <= reach[1]; ++b) {
        for (int c = 0; c <= reach[2]; ++c) {
          const BigInt& src = cells_[index({a, b, c})];
          if (mpz_sgn(src.backend().data()) == 0) continue;
          for (const Term& t : terms) {
            const Exponent3 e{a + t.e[0], b + t.e[1], c + t.e[2]};
            if (e[0] > bounds_[0] || e[1] > bounds_[1] || e[2] > bounds_[2]) continue;
            BigInt& dst = next[index(e)];
            if (t.small) {
              mpz_addmul_ui(dst.backend().data(), src.backend().data(), t.ulong_value);
            } else {
              dst += src * t.c;
            }
            for (int v = 0; v < 3; ++v) new_reach[v] = std::max(new_reach[v], e[v]);
          }
        }
      }
    }
    cells_.swap(next);
    reach = new_reach;
  }
}

std::size_t PowerTable::index(const Exponent3& e) const {
  return (static_cast<std::size_t>(e[0]) * (bounds_[1] + 1) + e[1]) * (bounds_[2] + 1) + e[2];
}

BigInt PowerTable::at(const Exponent3& e) const {
  for (int v = 0; v < 3; ++v) {
    if (e[v] < 0 || e[v] > bounds_[v]) return 0;
  }
  return cells_[index(e)];
}

BigInt power_coeff(const ExactPolynomial& poly, int m, const Exponent3& index) {
  return PowerTable(poly, m, index).at(index);
}

FactorialTable::FactorialTable(int max) {
  values_.resize(static_cast<std::size_t>(std::max(max, 0)) + 1);
  values_[0] = 1;
  for (std::size_t k = 1; k < values_.size(); ++k) values_[k] = values_[k - 1] * k;
}

const BigInt& FactorialTable::operator()(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= values_.size()) {
    throw Error(Errc::domain, "factorial index " + std::to_string(k) + " outside table");
  }
  return values_[k];
}

BigInt FactorialTable::binomial(int n, int k) const {
  if (k < 0 || k > n) return 0;
  return (*this)(n) / ((*this)(k) * (*this)(n - k));
}

Rational exact_first_moment(const EnsembleParams& params, int n, int weight, Kind kind) {
  require_moment_args(params, n, weight);
  const int l = params.left();
  const int m = n * l / params.right();
  const FactorialTable fact(n * l);
  const BigInt coeff = power_coeff(univariate_gf_poly(params, kind), m, {l * weight, 0, 0});
  return Rational(fact.binomial(n, weight) * coeff, fact.binomial(n * l, l * weight));
}

std::vector<Rational> exact_terms(const EnsembleParams& params, int n, int weight, Kind kind) {
  require_moment_args(params, n, weight);
  const int l = params.left();
  const int m = n * l / params.right();
  const int lo = overlap_lower_bound(n, weight);
  const FactorialTable fact(n * l);
  const PowerTable table(expand_pair_gf(params, kind), m,
                         {l * (weight - lo), l * weight, l * (weight - lo)});
  const BigInt outer = fact.binomial(n, weight);
  std::vector<Rational> out;
  out.reserve(weight - lo + 1);
  for (int i = lo; i <= weight; ++i) {
    const BigInt numerator = outer * fact.binomial(weight, i) * fact.binomial(n - weight, weight - i) *
                             fact(l * (weight - i)) * fact(l * (weight - i)) * fact(l * i) *
                             fact(l * (n - 2 * weight + i));
    const BigInt coeff = table.at({l * (weight - i), l * i, l * (weight - i)});
    out.emplace_back(numerator * coeff, fact(n * l));
  }
  return out;
}

Rational exact_term(const EnsembleParams& params, int n, int weight, int overlap, Kind kind) {
  require_moment_args(params, n, weight);
  const int lo = overlap_lower_bound(n, weight);
  if (overlap < lo || overlap > weight) {
    throw Error(Errc::domain, "overlap must lie in [(2W-n)^+, W]");
  }
  return exact_terms(params, n, weight, kind)[overlap - lo];
}

Rational exact_second_moment(const EnsembleParams& params, int n, int weight, Kind kind) {
  Rational total = 0;
  for (const Rational& s : exact_terms(params, n, weight, kind)) total += s;
  return total;
}

double log_value(const BigInt& value) {
  if (value <= 0) throw Error(Errc::domain, "log of a nonpositive integer");
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, value.backend().data());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

double log_value(const Rational& value) {
  return log_value(BigInt(boost::multiprecision::numerator(value))) -
         log_value(BigInt(boost::multiprecision::denominator(value)));
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace ldpc
