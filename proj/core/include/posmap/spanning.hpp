// Copyright 2026 The posmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <vector>

#include "posmap/linalg.hpp"
#include "posmap/map.hpp"

namespace posmap {

inline constexpr double kZeroFormTol = 1e-9;
inline constexpr double kRankRelTol = 1e-8;
inline constexpr double kSigmaTol = 1e-9;

/// A product vector x (x) y with its form residual <y, Phi(xbar xbar^dag) y>.
struct ProductPair {
  CVector x;
  CVector y;
  double value = 0.0;
};

/// Orthogonal projector onto Sigma_n, the span of x (x) conj(x) over
/// unimodular x. Its complement is { sum_k c_k e_k (x) e_k : sum_k c_k = 0 },
/// so the rank is n^2 - n + 1. Throws ConfigError for n < 2.
CMatrix sigma_projector(int n);

/// ||P x(x)y - x(x)y|| / ||x(x)y|| for the projector above.
double sigma_defect(const CVector& x, const CVector& y);

/// (x, conj(x)/||x||) for random phase vectors x. Throws ConfigError when
/// samples < n^2 - n + 1.
std::vector<ProductPair> unimodular_pairs(const MapSpec& spec, int samples,
                                          std::uint64_t seed);

/// One pair per cyclic offset j: x carries random phases on positions
/// j+k+1, ..., j+n-1 (mod n) and vanishes elsewhere, y = e_j. Empty for the
/// reduction map, where that support is empty.
std::vector<ProductPair> degenerate_pairs(const MapSpec& spec,
                                          std::uint64_t seed = 0);

/// Converged zero-value see-saw witnesses of tau_{n,k}, at most cap of them.
std::vector<ProductPair> seesaw_zero_pairs(const MapSpec& spec,
                                           std::uint64_t seed, int cap,
                                           int threads = 1);

/// Rank of the matrix whose rows are the flattened x (x) y; singular values
/// above rel_tol * sigma_max count.
int gram_rank(const std::vector<ProductPair>& pairs,
              double rel_tol = kRankRelTol);

struct SpanningSet {
  std::vector<ProductPair> pairs;
  int gram_rank = 0;
  std::vector<bool> sigma_membership;
  int rejected = 0;  // candidates dropped for |value| > kZeroFormTol
};

/// Re-evaluates every candidate against tau_{n,k}, admits those with
/// |value| <= kZeroFormTol, and computes rank and Sigma_n membership.
SpanningSet admit_pairs(const MapSpec& spec,
                        const std::vector<ProductPair>& candidates);

struct SpanningOptions {
  int samples = 0;  // 0 means 4 n^2
  int harvest_cap = 0;  // 0 means 4 n^2
  int threads = 1;
};

struct SpanningResult {
  int rank = 0;
  bool has_spanning_property = false;
  SpanningSet set;
  int unimodular_count = 0;
  int degenerate_count = 0;
  int harvested_count = 0;
  /// Admitted pairs outside Sigma_n while k < n-1. Nonzero values
  /// contradict the known zero-set structure and indicate a numerical problem.
  int anomalies = 0;
};

/// Pools unimodular, degenerate and harvested see-saw pairs. Throws
/// ConfigError for k = 0.
SpanningResult spanning_rank(const MapSpec& spec, std::uint64_t seed,
                             const SpanningOptions& options = {});

}  // namespace posmap
