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

#include <vector>

#include "posmap/linalg.hpp"
#include "posmap/map.hpp"

// Analytic positivity criteria for tau_{n,k} evaluated on the moduli profile
// X_i = |x_i|^2 of a vector x. The image tau(conj(x) conj(x)^dagger) is
// Diag(D) - conj(x) conj(x)^dagger with D = S X.

namespace posmap {

/// S = (n-k) I + sum_{m=1..k} P^m where (P X)_i = X_{i+1 mod n}, so that
/// (S X)_i = (n-k) X_i + X_{i+1} + ... + X_{i+k}.
RMatrix shift_sum_matrix(const MapSpec& spec);

struct DiagonalProfile {
  RVector moduli_sq;  // X
  RVector weights;    // D = S X
};

/// Throws InputError on a size mismatch or a negative entry.
DiagonalProfile make_profile(const MapSpec& spec, const RVector& moduli_sq);

/// f_{n,k}(X) = sum_i X_i / D_i. Throws InputError if some D_i <= 0.
double f_value(const MapSpec& spec, const RVector& moduli_sq);

/// prod_i D_i - sum_j X_j prod_{i != j} D_i, with no division; equals
/// det tau(conj(x) conj(x)^dagger) for every non-negative profile.
double analytic_det(const MapSpec& spec, const RVector& moduli_sq);

struct HessianData {
  RMatrix s;         // S
  double s_prime;    // common eigenvalue of S and S^T on the ones vector
  RMatrix s_hat;     // s'(S + S^T) - 2 S^T S
};
HessianData hessian_shat(const MapSpec& spec);

/// 1 - (n-k-1)/(n-k) = 1/(n-k). Throws ConfigError for k = n-1.
double case2_lower_bound(const MapSpec& spec);

/// Block evaluation on the balanced profile mu = (1,0,1,0,...) of the map
/// tau(X) - t v1 v1^dagger o X, with v1 the alternating unit vector.
struct WitnessEvaluation {
  double value = 0.0;         // ((n-k) - t)/2, eigenvalue of N on ones
  double numeric_value = 0.0; // 1^T N 1 / p computed from the assembled map
  RMatrix block;              // N: even rows and columns of the image
  CVector mu;
};
/// Throws ConfigError unless n and k are even with k < n, or if t < 0.
WitnessEvaluation pro2_witness_value(int n, int k, double t);

enum class ProfileRegion { kInterior, kDegenerate };

/// Splits a profile into the interior region (all D_i > 0) and the
/// degenerate region. In the degenerate region every index with D_i = 0 has
/// X_i = 0, the corresponding rows of the image vanish, and the remaining
/// block has determinant factor 1 - sum_{D_j > 0} X_j / D_j.
struct ProfileAnalysis {
  ProfileRegion region = ProfileRegion::kInterior;
  DiagonalProfile profile;
  double det = 0.0;                 // analytic_det
  double f = 0.0;                   // f_value (interior only)
  std::vector<int> zero_rows;       // indices with D_i = 0
  double reduced_factor = 0.0;      // 1 - sum over D_j > 0 of X_j / D_j
  double reduced_bound = 0.0;       // 1/(n-k) for k < n-1, else 0
};
ProfileAnalysis analyze_profile(const MapSpec& spec, const RVector& moduli_sq);

}  // namespace posmap
