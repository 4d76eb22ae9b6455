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
#include "posmap/positivity.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "posmap/errors.hpp"

namespace posmap {

namespace {

CVector normalized(const CVector& v, const char* what) {
  const double norm = v.norm();
  if (!(norm > 0.0)) throw InputError(std::string(what) + " must be nonzero");
  return v / norm;
}

// Q(y)_ij = <y, Phi(e_ij) y>, built from the Choi blocks. Hermitian whenever
// Phi preserves Hermiticity, and x^dagger Q(y) x equals the form value.
CMatrix x_step_matrix(const CMatrix& choi, const CVector& y) {
  const Eigen::Index n = y.size();
  CMatrix q(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      q(i, j) = y.dot(choi.block(i * n, j * n, n, n) * y);
    }
  }
  return q;
}

CMatrix y_step_matrix(const LinearMap& map, const CVector& x) {
  const CVector xc = x.conjugate();
  return map.apply(xc * xc.adjoint());
}

// || p_new - phase * p_old || for p = x (x) y, with the phase chosen to align
// the two product vectors.
double aligned_step(const CVector& x_old, const CVector& y_old,
                    const CVector& x_new, const CVector& y_new) {
  const CVector p_old = kron(x_old, y_old);
  const CVector p_new = kron(x_new, y_new);
  const Complex overlap = p_old.dot(p_new);
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0);
  return (p_new - phase * p_old).norm();
}

int resolve_threads(int requested, int starts) {
  int threads = requested;
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  return std::clamp(threads, 1, std::max(1, starts));
}

}  // namespace

double form_value(const LinearMap& map, const CVector& x, const CVector& y) {
  if (x.size() != map.dim() || y.size() != map.dim()) {
    throw InputError("form_value: vector dimension does not match the map");
  }
  const CVector xu = normalized(x, "x");
  const CVector yu = normalized(y, "y");
  const CMatrix image = y_step_matrix(map, xu);
  return yu.dot(image * yu).real();
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPositiveEvidence:
      return "positive-evidence";
    case Verdict::kNegativeCertificate:
      return "negative-certificate";
  }
  return "unknown";
}

CVector seesaw_initial_point(int n, std::uint64_t seed, int start_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(start_index)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector x(n);
  for (int i = 0; i < n; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    x(i) = Complex(re, im);
  }
  return x / x.norm();
}

SeesawStart seesaw_descent(const LinearMap& map, const CVector& x0,
                           const SeesawOptions& options,
                           std::vector<double>* trace) {
  const CMatrix choi = choi_matrix(map);
  SeesawStart state;
  state.x = normalized(x0, "x0");
  MinEigenpair ystep = min_eigenpair(y_step_matrix(map, state.x));
  state.y = ystep.vector;
  double previous = ystep.value;
  if (trace) trace->push_back(ystep.value);

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    const CVector x_old = state.x;
    const CVector y_old = state.y;
    const MinEigenpair xstep = min_eigenpair(x_step_matrix(choi, state.y));
    state.x = xstep.vector;
    if (trace) trace->push_back(xstep.value);
    ystep = min_eigenpair(y_step_matrix(map, state.x));
    state.y = ystep.vector;
    if (trace) trace->push_back(ystep.value);
    state.sweeps = sweep + 1;
    const double improvement = previous - ystep.value;
    previous = ystep.value;
    bool done = improvement < options.sweep_tol;
    if (options.step_tol > 0.0) {
      state.last_step = aligned_step(x_old, y_old, state.x, state.y);
      done = done && state.last_step < options.step_tol;
    }
    if (done) {
      state.converged = true;
      break;
    }
  }
  state.value = form_value(map, state.x, state.y);
  return state;
}

std::vector<SeesawStart> seesaw_all_starts(const LinearMap& map,
                                           const SeesawOptions& options) {
  if (options.starts < 1) throw ConfigError("starts must be at least 1");
  const int n = map.dim();
  std::vector<SeesawStart> results(static_cast<std::size_t>(options.starts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int s = next.fetch_add(1); s < options.starts; s = next.fetch_add(1)) {
      results[static_cast<std::size_t>(s)] = seesaw_descent(
          map, seesaw_initial_point(n, options.seed, s), options);
    }
  };
  const int threads = resolve_threads(options.threads, options.starts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return results;
}

PositivityReport seesaw_minimize(const LinearMap& map,
                                 const SeesawOptions& options) {
  const std::vector<SeesawStart> starts = seesaw_all_starts(map, options);
  PositivityReport report;
  report.seed = options.seed;
  report.starts_used = options.starts;
  std::size_t best = 0;
  for (std::size_t s = 0; s < starts.size(); ++s) {
    report.total_iterations += starts[s].sweeps;
    // strict comparison keeps the lowest start index on ties
    if (starts[s].value < starts[best].value) best = s;
  }
  report.best_start = static_cast<int>(best);
  report.min_value = starts[best].value;
  report.witness_x = starts[best].x;
  report.witness_y = starts[best].y;
  report.iterations = starts[best].sweeps;
  report.verdict = report.min_value < -options.tol
                       ? Verdict::kNegativeCertificate
                       : Verdict::kPositiveEvidence;
  return report;
}

}  // namespace posmap
