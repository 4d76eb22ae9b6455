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
#include "posmap/spanning.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "posmap/errors.hpp"
#include "posmap/positivity.hpp"

namespace posmap {

namespace {

// Separate streams per (seed, purpose) so the pools stay independent.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint32_t purpose) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), purpose};
  return std::mt19937_64(seq);
}

Complex random_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

}  // namespace

CMatrix sigma_projector(int n) {
  if (n < 2) throw ConfigError("n must be at least 2");
  const int dim = n * n;
  CMatrix p = CMatrix::Identity(dim, dim);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double complement = (a == b ? 1.0 : 0.0) - 1.0 / n;
      p(a * n + a, b * n + b) -= complement;
    }
  }
  return p;
}

double sigma_defect(const CVector& x, const CVector& y) {
  const CVector v = kron(x, y);
  const double norm = v.norm();
  if (norm == 0.0) return 0.0;
  // Only the diagonal entries v_{aa} see the complement; remove their mean.
  const Eigen::Index n = x.size();
  Complex mean = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) mean += v(a * n + a);
  mean /= static_cast<double>(n);
  double off = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) off += std::norm(v(a * n + a) - mean);
  return std::sqrt(off) / norm;
}

std::vector<ProductPair> unimodular_pairs(const MapSpec& spec, int samples,
                                          std::uint64_t seed) {
  const int n = spec.n();
  if (samples < n * n - n + 1) {
    throw ConfigError("samples must be at least n^2 - n + 1");
  }
  const TauMap map(spec);
  auto rng = make_rng(seed, 1);
  std::vector<ProductPair> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    CVector x(n);
    for (int i = 0; i < n; ++i) x(i) = random_phase(rng);
    x /= x.norm();
    CVector y = x.conjugate();
    const double value = form_value(map, x, y);
    out.push_back({std::move(x), std::move(y), value});
  }
  return out;
}

std::vector<ProductPair> degenerate_pairs(const MapSpec& spec,
                                          std::uint64_t seed) {
  const int n = spec.n();
  const int k = spec.k();
  const TauMap map(spec);
  auto rng = make_rng(seed, 2);
  std::vector<ProductPair> out;
  if (spec.is_reduction()) return out;
  for (int j = 0; j < n; ++j) {
    CVector x = CVector::Zero(n);
    for (int m = k + 1; m <= n - 1; ++m) x((j + m) % n) = random_phase(rng);
    x /= x.norm();
    CVector y = CVector::Zero(n);
    y(j) = 1.0;
    const double value = form_value(map, x, y);
    out.push_back({std::move(x), std::move(y), value});
  }
  return out;
}

std::vector<ProductPair> seesaw_zero_pairs(const MapSpec& spec,
                                           std::uint64_t seed, int cap,
                                           int threads) {
  const TauMap map(spec);
  SeesawOptions options;
  options.starts = std::max(1, cap);
  options.seed = seed;
  options.step_tol = 1e-13;
  options.threads = threads;
  std::vector<ProductPair> out;
  for (const SeesawStart& s : seesaw_all_starts(map, options)) {
    if (static_cast<int>(out.size()) >= cap) break;
    if (!s.converged || std::abs(s.value) > kZeroFormTol) continue;
    out.push_back({s.x, s.y, s.value});
  }
  return out;
}

int gram_rank(const std::vector<ProductPair>& pairs, double rel_tol) {
  if (pairs.empty()) return 0;
  const Eigen::Index dim = pairs.front().x.size() * pairs.front().y.size();
  CMatrix rows(static_cast<Eigen::Index>(pairs.size()), dim);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const CVector v = kron(pairs[r].x, pairs[r].y);
    rows.row(static_cast<Eigen::Index>(r)) = v.transpose() / v.norm();
  }
  return numerical_rank(rows, rel_tol);
}

SpanningSet admit_pairs(const MapSpec& spec,
                        const std::vector<ProductPair>& candidates) {
  const TauMap map(spec);
  SpanningSet set;
  for (const ProductPair& c : candidates) {
    const double value = form_value(map, c.x, c.y);
    if (std::abs(value) > kZeroFormTol) {
      ++set.rejected;
      continue;
    }
    set.sigma_membership.push_back(sigma_defect(c.x, c.y) <= kSigmaTol);
    set.pairs.push_back({c.x, c.y, value});
  }
  set.gram_rank = gram_rank(set.pairs);
  return set;
}

SpanningResult spanning_rank(const MapSpec& spec, std::uint64_t seed,
                             const SpanningOptions& options) {
  if (spec.k() < 1) throw ConfigError("spanning analysis requires k >= 1");
  const int n = spec.n();
  const int samples = options.samples > 0 ? options.samples : 4 * n * n;
  const int cap = options.harvest_cap > 0 ? options.harvest_cap : 4 * n * n;

  std::vector<ProductPair> pool = unimodular_pairs(spec, samples, seed);
  SpanningResult result;
  result.unimodular_count = static_cast<int>(pool.size());
  const auto degenerate = degenerate_pairs(spec, seed);
  result.degenerate_count = static_cast<int>(degenerate.size());
  pool.insert(pool.end(), degenerate.begin(), degenerate.end());
  const auto harvested = seesaw_zero_pairs(spec, seed, cap, options.threads);
  result.harvested_count = static_cast<int>(harvested.size());
  pool.insert(pool.end(), harvested.begin(), harvested.end());

  result.set = admit_pairs(spec, pool);
  result.rank = result.set.gram_rank;
  result.has_spanning_property = result.rank == n * n;
  if (!spec.is_reduction()) {
    for (bool inside : result.set.sigma_membership) {
      if (!inside) ++result.anomalies;
    }
  }
  return result;
}

}  // namespace posmap
