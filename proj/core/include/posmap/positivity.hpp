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
#include <string_view>
#include <vector>

#include "posmap/linalg.hpp"
#include "posmap/map.hpp"

namespace posmap {

/// <y, Phi(conj(x) conj(x)^dagger) y> for unit-normalized x and y. Throws
/// InputError on a dimension mismatch or a zero vector.
double form_value(const LinearMap& map, const CVector& x, const CVector& y);

enum class Verdict { kPositiveEvidence, kNegativeCertificate };
std::string_view to_string(Verdict v);

struct SeesawOptions {
  int starts = 64;
  std::uint64_t seed = 0;
  /// min_value < -tol yields a negative certificate.
  double tol = 1e-9;
  int max_sweeps = 500;
  /// A start stops once a full sweep improves the objective by less than this.
  double sweep_tol = 1e-12;
  /// When > 0, a start additionally requires the phase-aligned movement of
  /// x (x) y over one sweep to fall below this before stopping. Value-based
  /// stopping alone leaves witnesses about sqrt(sweep_tol) from the zero set.
  double step_tol = 0.0;
  /// 0 means one worker per hardware thread. Results do not depend on it.
  int threads = 1;
};

/// Best outcome of a seeded multistart see-saw. A positive verdict is
/// evidence only: it records the smallest value any start reached.
struct PositivityReport {
  Verdict verdict = Verdict::kPositiveEvidence;
  double min_value = 0.0;
  CVector witness_x;
  CVector witness_y;
  int starts_used = 0;
  int iterations = 0;        // sweeps performed by the winning start
  int total_iterations = 0;  // sweeps summed over all starts
  int best_start = 0;
  std::uint64_t seed = 0;
};

struct SeesawStart {
  double value = 0.0;
  CVector x;
  CVector y;
  int sweeps = 0;
  bool converged = false;  // stopping rule met before max_sweeps
  double last_step = 0.0;  // phase-aligned ||p_new - p_old|| of the last sweep
};

/// Random unit start for the given (seed, start) stream: i.i.d. complex
/// Gaussian entries, normalized.
CVector seesaw_initial_point(int n, std::uint64_t seed, int start_index);

/// Runs one see-saw descent from x0. If trace is non-null it receives the
/// objective after every half-step (y update, then x update).
SeesawStart seesaw_descent(const LinearMap& map, const CVector& x0,
                           const SeesawOptions& options,
                           std::vector<double>* trace = nullptr);

/// Every start's final state, indexed by start. Deterministic for fixed
/// (map, options) regardless of options.threads.
std::vector<SeesawStart> seesaw_all_starts(const LinearMap& map,
                                           const SeesawOptions& options);

PositivityReport seesaw_minimize(const LinearMap& map,
                                 const SeesawOptions& options = {});

}  // namespace posmap
