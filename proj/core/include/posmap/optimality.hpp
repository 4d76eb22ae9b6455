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
#include <optional>
#include <string_view>
#include <vector>

#include "posmap/linalg.hpp"
#include "posmap/map.hpp"
#include "posmap/positivity.hpp"

namespace posmap {

/// The 0/1 circulant whose row j states sum_{i=j}^{n+j-k-1} alpha_i = 0
/// (indices mod n): the constraint any subtractable Hadamard direction alpha
/// must satisfy.
struct CirculantConstraint {
  MapSpec spec;
  std::vector<int> first_row;  // n-k leading ones, then k zeros
  RMatrix matrix;              // matrix(i, j) = first_row[(j - i) mod n]
  Complex omega;               // exp(2 pi i / n)
};

/// Throws ConfigError for k = 0.
CirculantConstraint build_circulant(const MapSpec& spec);

struct CirculantSpectrum {
  /// lambda_j = sum_{m=0}^{n-k-1} omega^{j m}; eigenvector (omega^{j m})_m.
  std::vector<Complex> eigenvalues;
  /// j = r n/d for r = 1..d-1, d = gcd(n, k); exact, from integer arithmetic.
  std::vector<int> zero_indices;
};
CirculantSpectrum circulant_spectrum(const CirculantConstraint& constraint);

/// Orthonormal kernel vectors v_r = n^{-1/2} (omega^{j m})_m, j = r n/d.
/// Empty when gcd(n, k) = 1.
std::vector<CVector> kernel_basis(const MapSpec& spec);

/// Exact determinant of an integer-valued matrix (fraction-free Bareiss).
std::int64_t integer_determinant(const RMatrix& integral);

enum class Certification { kOptimalCertified, kNotCertified };
std::string_view to_string(Certification c);

struct OptimalityCertificate {
  MapSpec spec;
  int gcd = 1;
  int kernel_dim = 0;
  Certification verdict = Certification::kNotCertified;
  CirculantConstraint constraint;
  CirculantSpectrum spectrum;
  std::vector<CVector> kernel;
  /// Rank-one directions v_r v_r^dagger with weight 0, for a caller to size.
  std::vector<HadamardPerturbation> candidate_subtractions;
  std::optional<PositivityReport> evidence;
};

/// Optimal-certified iff gcd(n, k) = 1. Throws ConfigError for k = 0.
OptimalityCertificate certify_optimality(const MapSpec& spec);

/// True iff L is Hermitian PSD (min eigenvalue >= -1e-10), its entries sum
/// to at most 1e-10 and ||L 1|| <= 1e-9: exactly the Hadamard CP maps that
/// vanish on every unimodular pair. Throws InputError on a size mismatch.
bool admissible_subtraction_check(const CMatrix& l, int n);

enum class ConjectureVerdict { kEvidencePositive, kCounterexampleFound };
std::string_view to_string(ConjectureVerdict v);

struct ConjectureOptions {
  /// Subtraction weight; defaults to n - k.
  std::optional<double> t;
  /// Offset above n - k at which the witness is required to turn negative.
  double epsilon = 0.1;
  SeesawOptions seesaw;
};

struct ConjectureReport {
  explicit ConjectureReport(MapSpec s) : spec(s) {}

  MapSpec spec;
  double t = 0.0;
  double epsilon = 0.0;
  double t_max_witnessed = 0.0;  // largest t the balanced witness allows
  double witness_at_t = 0.0;
  double witness_at_bound = 0.0;        // at t = n - k, expected 0
  double witness_above_bound = 0.0;     // at t = n - k + epsilon
  CVector witness_mu;
  PositivityReport seesaw;
  ConjectureVerdict verdict = ConjectureVerdict::kEvidencePositive;
};

/// Evidence for positivity of tau(X) - t v1 v1^dagger o X when gcd(n,k) = 2.
/// Never claims a proof. Throws ConfigError unless gcd(n, k) = 2.
ConjectureReport conjecture_probe(const MapSpec& spec,
                                  const ConjectureOptions& options = {});

/// Exploratory sweep over tau - sum_r a_r v_r v_r^dagger o X with each a_r on
/// a uniform grid. Makes no claim about the best weights.
struct WeightGrid {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;  // points per axis, >= 1
};

struct WeightSweepPoint {
  std::vector<double> weights;
  double seesaw_min = 0.0;
  Verdict verdict = Verdict::kPositiveEvidence;
};

/// Throws ConfigError for gcd(n, k) = 1, an invalid grid, negative weights,
/// or more than 4096 grid points.
std::vector<WeightSweepPoint> sweep_kernel_weights(
    const MapSpec& spec, const WeightGrid& grid, const SeesawOptions& seesaw);

}  // namespace posmap
