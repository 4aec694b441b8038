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

#include "ldpc/ensemble.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ldpc/error.hpp"

namespace ldpc {

namespace {

void require_divisible(const EnsembleParams& params, int n) {
  if (n <= 0 || (static_cast<long>(n) * params.left()) % params.right() != 0) {
    throw Error(Errc::divisibility, "r must divide n*l (n=" + std::to_string(n) + ")");
  }
}

void require_exhaustive(int n) {
  if (n > kMaxExhaustiveVariables) {
    throw Error(Errc::too_large, "exhaustive counting supports n <= " +
                                     std::to_string(kMaxExhaustiveVariables));
  }
}

// Null-space basis of the parity rows over GF(2).
std::vector<std::uint32_t> null_space_basis(const std::vector<std::uint32_t>& rows, int n,
                                            int* rank_out) {
  std::vector<std::uint32_t> reduced = rows;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(reduced.size()); ++col) {
    const std::uint32_t bit = 1u << col;
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(reduced.size()); ++i) {
      if (reduced[i] & bit) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(reduced[rank], reduced[pivot]);
    for (int i = 0; i < static_cast<int>(reduced.size()); ++i) {
      if (i != rank && (reduced[i] & bit)) reduced[i] ^= reduced[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank_out) *rank_out = rank;

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::uint32_t> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::uint32_t vec = 1u << free;
    for (int i = 0; i < rank; ++i) {
      if (reduced[i] & (1u << free)) vec |= 1u << pivot_col[i];
    }
    basis.push_back(vec);
  }
  return basis;
}

bool is_stopping_set(std::uint32_t subset, const std::vector<std::uint32_t>& single,
                     const std::vector<std::uint32_t>& multi) {
  for (std::size_t c = 0; c < single.size(); ++c) {
    if (std::popcount(subset & single[c]) == 1 && (subset & multi[c]) == 0) return false;
  }
  return true;
}

// Per-check masks of variables meeting the check exactly once / at least twice.
void stopping_masks(const TannerGraph& g, std::vector<std::uint32_t>& single,
                    std::vector<std::uint32_t>& multi) {
  single.assign(g.checks(), 0);
  multi.assign(g.checks(), 0);
  for (int v = 0; v < g.variables(); ++v) {
    for (int c = 0; c < g.checks(); ++c) {
      const int m = g.multiplicity(v, c);
      if (m == 1) single[c] |= 1u << v;
      if (m >= 2) multi[c] |= 1u << v;
    }
  }
}

// Visits every W-subset of n bits (Gosper's hack).
template <class Fn>
void for_each_subset(int n, int weight, Fn&& fn) {
  if (weight == 0) {
    fn(0u);
    return;
  }
  if (weight > n) return;
  std::uint64_t s = (std::uint64_t{1} << weight) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    fn(static_cast<std::uint32_t>(s));
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

std::uint64_t count_stopping(const TannerGraph& g, int weight) {
  std::vector<std::uint32_t> single, multi;
  stopping_masks(g, single, multi);
  std::uint64_t count = 0;
  for_each_subset(g.variables(), weight, [&](std::uint32_t s) {
    if (is_stopping_set(s, single, multi)) ++count;
  });
  return count;
}

std::uint64_t count_codewords_direct(const TannerGraph& g, int weight) {
  const auto rows = g.parity_rows();
  std::uint64_t count = 0;
  for_each_subset(g.variables(), weight, [&](std::uint32_t s) {
    for (std::uint32_t row : rows) {
      if (std::popcount(s & row) % 2 != 0) return;
    }
    ++count;
  });
  return count;
}

MomentEstimate finish_estimate(double sum, double sum_sq_dev, long samples, std::uint64_t seed) {
  MomentEstimate e;
  e.sample_count = samples;
  e.seed = seed;
  e.mean = samples > 0 ? sum / samples : 0.0;
  if (samples < 2) {
    e.variance = 0.0;
    e.halfwidth = std::numeric_limits<double>::quiet_NaN();
    e.degenerate = true;
  } else {
    e.variance = sum_sq_dev / (samples - 1);
    e.halfwidth = 3.0 * std::sqrt(e.variance / samples);
  }
  return e;
}

__extension__ using u128 = unsigned __int128;

}  // namespace

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  u128 m = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

TannerGraph::TannerGraph(const EnsembleParams& params, int n, std::vector<int> socket_map)
    : params_(params), n_(n), checks_(0), socket_map_(std::move(socket_map)) {
  require_divisible(params, n);
  const int sockets = n * params.left();
  checks_ = sockets / params.right();
  if (static_cast<int>(socket_map_.size()) != sockets) {
    throw Error(Errc::domain, "socket map must have n*l entries");
  }
  std::vector<bool> seen(sockets, false);
  for (int s : socket_map_) {
    if (s < 0 || s >= sockets || seen[s]) throw Error(Errc::domain, "socket map is not a permutation");
    seen[s] = true;
  }
  multiplicity_.assign(static_cast<std::size_t>(n_) * checks_, 0);
  for (int s = 0; s < sockets; ++s) ++multiplicity_[(s / params.left()) * checks_ + check_of(s)];
}

int TannerGraph::variable_degree(int v) const {
  int d = 0;
  for (int c = 0; c < checks_; ++c) d += multiplicity(v, c);
  return d;
}

int TannerGraph::check_degree(int c) const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d += multiplicity(v, c);
  return d;
}

std::vector<std::uint32_t> TannerGraph::parity_rows() const {
  std::vector<std::uint32_t> rows(checks_, 0);
  for (int v = 0; v < n_ && v < 32; ++v) {
    for (int c = 0; c < checks_; ++c) {
      if (multiplicity(v, c) % 2 == 1) rows[c] |= 1u << v;
    }
  }
  return rows;
}

TannerGraph sample_graph(const EnsembleParams& params, int n, std::uint64_t seed) {
  require_divisible(params, n);
  const int sockets = n * params.left();
  std::vector<int> map(sockets);
  std::iota(map.begin(), map.end(), 0);
  SplitMix64 rng(seed);
  // Fisher-Yates, last index first.
  for (int i = sockets - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(map[i], map[j]);
  }
  return TannerGraph(params, n, std::move(map));
}

int parity_rank(const TannerGraph& graph) {
  require_exhaustive(graph.variables());
  int rank = 0;
  null_space_basis(graph.parity_rows(), graph.variables(), &rank);
  return rank;
}

std::vector<std::uint64_t> weight_profile(const TannerGraph& graph) {
  require_exhaustive(graph.variables());
  const int n = graph.variables();
  const auto basis = null_space_basis(graph.parity_rows(), n, nullptr);
  if (static_cast<int>(basis.size()) > kMaxNullSpaceDimension) {
    throw Error(Errc::too_large, "null space dimension exceeds 2^24 enumeration cap");
  }
  std::vector<std::uint64_t> profile(n + 1, 0);
  // Gray-code walk over all 2^dim combinations.
  std::uint32_t word = 0;
  profile[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t k = 1; k < total; ++k) {
    word ^= basis[std::countr_zero(k)];
    ++profile[std::popcount(word)];
  }
  return profile;
}

std::uint64_t count_words(const TannerGraph& graph, int weight, Kind kind) {
  require_exhaustive(graph.variables());
  if (weight < 0 || weight > graph.variables()) return 0;
  if (kind == Kind::stopping) return count_stopping(graph, weight);
  int rank = 0;
  const auto basis = null_space_basis(graph.parity_rows(), graph.variables(), &rank);
  if (static_cast<int>(basis.size()) > kMaxNullSpaceDimension) {
    return count_codewords_direct(graph, weight);
  }
  return weight_profile(graph)[weight];
}

McMoments mc_moments(const EnsembleParams& params, int n, int weight, Kind kind, long samples,
                     std::uint64_t seed) {
  require_divisible(params, n);
  require_exhaustive(n);
  if (samples <= 0) throw Error(Errc::domain, "samples must be positive");
  std::vector<double> counts(samples);
  for (long k = 0; k < samples; ++k) {
    const TannerGraph g = sample_graph(params, n, seed + static_cast<std::uint64_t>(k));
    counts[k] = static_cast<double>(count_words(g, weight, kind));
  }
  // Two-pass statistics in index order.
  double sum = 0.0, sum_sq = 0.0;
  for (double c : counts) {
    sum += c;
    sum_sq += c * c;
  }
  const double mean = sum / samples, mean_sq = sum_sq / samples;
  double dev = 0.0, dev_sq = 0.0;
  for (double c : counts) {
    dev += (c - mean) * (c - mean);
    dev_sq += (c * c - mean_sq) * (c * c - mean_sq);
  }
  return {finish_estimate(sum, dev, samples, seed), finish_estimate(sum_sq, dev_sq, samples, seed)};
}

Rational exhaustive_moment(const EnsembleParams& params, int n, int weight, Kind kind, int moment) {
  require_divisible(params, n);
  if (moment != 1 && moment != 2) throw Error(Errc::domain, "moment must be 1 or 2");
  const int sockets = n * params.left();
  if (sockets > kMaxExhaustiveSockets) {
    throw Error(Errc::too_large, "exhaustive permutation average needs n*l <= " +
                                     std::to_string(kMaxExhaustiveSockets));
  }
  std::vector<int> map(sockets);
  std::iota(map.begin(), map.end(), 0);
  BigInt total = 0;
  BigInt graphs = 0;
  do {
    const TannerGraph g(params, n, map);
    const BigInt c = count_words(g, weight, kind);
    total += moment == 1 ? c : c * c;
    ++graphs;
  } while (std::next_permutation(map.begin(), map.end()));
  return Rational(total, graphs);
}

}  // namespace ldpc
