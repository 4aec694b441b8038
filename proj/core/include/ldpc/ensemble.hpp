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

// Configuration-model ground truth: sample Tanner graphs by matching
// labelled sockets, then count codewords and stopping sets exhaustively.

#include <cstdint>
#include <span>
#include <vector>

#include "ldpc/exact.hpp"
#include "ldpc/params.hpp"

namespace ldpc {

// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, output
// mixed by two xor-shift-multiply rounds. Fully specified, so sample
// streams are reproducible across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;
  // Uniform in [0, bound), Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

// Variable socket s = v * l + k (k < l) is wired to check socket
// check_socket(s); check socket c * r + j belongs to check c.
class TannerGraph {
 public:
  TannerGraph(const EnsembleParams& params, int n, std::vector<int> socket_map);

  const EnsembleParams& params() const noexcept { return params_; }
  int variables() const noexcept { return n_; }
  int checks() const noexcept { return checks_; }
  int check_socket(int variable_socket) const { return socket_map_[variable_socket]; }
  int check_of(int variable_socket) const { return socket_map_[variable_socket] / params_.right(); }
  std::span<const int> socket_map() const noexcept { return socket_map_; }

  // Number of parallel edges between variable v and check c.
  int multiplicity(int v, int c) const { return multiplicity_[v * checks_ + c]; }
  int variable_degree(int v) const;
  int check_degree(int c) const;

  // Bit v of row c is set when v meets check c an odd number of times.
  std::vector<std::uint32_t> parity_rows() const;

 private:
  EnsembleParams params_;
  int n_;
  int checks_;
  std::vector<int> socket_map_;
  std::vector<int> multiplicity_;
};

inline constexpr int kMaxExhaustiveVariables = 28;
inline constexpr int kMaxNullSpaceDimension = 24;
inline constexpr int kMaxExhaustiveSockets = 10;

// Uniform over the (n l)! socket permutations; deterministic in seed.
TannerGraph sample_graph(const EnsembleParams& params, int n, std::uint64_t seed);

int parity_rank(const TannerGraph& graph);
// Codeword count per Hamming weight, from the GF(2) null space.
std::vector<std::uint64_t> weight_profile(const TannerGraph& graph);
// Codewords of weight W, or stopping sets of size W (every neighbouring
// check sees the set at least twice, counting parallel edges).
std::uint64_t count_words(const TannerGraph& graph, int weight, Kind kind);

struct MomentEstimate {
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
  long sample_count = 0;
  double halfwidth = 0.0; // 3 sqrt(variance / samples); NaN when samples < 2
  std::uint64_t seed = 0;
  bool degenerate = false;
};

struct McMoments {
  MomentEstimate count;          // estimates E[N]
  MomentEstimate count_squared;  // estimates E[N^2]
};

// Sample k uses seed + k, so results do not depend on evaluation order.
McMoments mc_moments(const EnsembleParams& params, int n, int weight, Kind kind, long samples,
                     std::uint64_t seed);

// Exact ensemble average of count^moment over every socket permutation.
// Requires n l <= kMaxExhaustiveSockets.
Rational exhaustive_moment(const EnsembleParams& params, int n, int weight, Kind kind, int moment);

}  // namespace ldpc
