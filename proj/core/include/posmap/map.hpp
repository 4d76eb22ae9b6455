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

#include <optional>
#include <string>

#include "posmap/linalg.hpp"

namespace posmap {

/// Names the map tau_{n,k}. k = n-1 is the reduction map, k = 0 is
/// completely positive.
class MapSpec {
 public:
  /// Throws ConfigError unless n >= 2 and 0 <= k <= n-1.
  MapSpec(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  bool is_reduction() const { return k_ == n_ - 1; }
  bool is_completely_positive() const { return k_ == 0; }

  /// Coefficient of x_ii in the i-th output diagonal entry.
  int self_weight() const { return n_ - k_ - 1; }

  friend bool operator==(const MapSpec&, const MapSpec&) = default;

 private:
  int n_;
  int k_;
};

/// Outcome of testing a matrix L as the kernel of a Hadamard-product CP
/// subtraction X -> L o X that vanishes on every unimodular product pair.
struct HadamardInspection {
  double min_eigenvalue = 0.0;
  double entry_sum = 0.0;        // real part of 1^T L 1
  double ones_residual = 0.0;    // ||L 1||
  bool psd = false;              // min_eigenvalue >= -1e-10
  bool zero_sum = false;         // |1^T L 1| <= 1e-10
  bool annihilates_ones = false; // ||L 1|| <= 1e-9
  bool hermitian = false;

  bool admissible() const {
    return hermitian && psd && zero_sum && annihilates_ones;
  }
};
HadamardInspection inspect_hadamard_matrix(const CMatrix& l);

/// CP subtraction Lambda(X) = L o X with L PSD and L 1 = 0. Either a full L or
/// the rank-one form L = t * alpha alpha^dagger.
class HadamardPerturbation {
 public:
  /// Throws InputError if L is not square Hermitian PSD with zero entry sum.
  static HadamardPerturbation full(CMatrix l);
  /// Throws InputError if weight < 0 or sum(alpha) != 0.
  static HadamardPerturbation rank_one(CVector alpha, double weight);

  int dim() const { return static_cast<int>(l_.rows()); }
  const CMatrix& matrix() const { return l_; }
  const std::optional<CVector>& direction() const { return alpha_; }
  double weight() const { return weight_; }

  /// L o X.
  CMatrix apply(const CMatrix& x) const;

 private:
  HadamardPerturbation(CMatrix l, std::optional<CVector> alpha, double weight)
      : l_(std::move(l)), alpha_(std::move(alpha)), weight_(weight) {}

  CMatrix l_;
  std::optional<CVector> alpha_;
  double weight_ = 1.0;
};

/// A linear map M_n -> M_n. Implementations are immutable and thread-safe.
class LinearMap {
 public:
  virtual ~LinearMap() = default;
  virtual int dim() const = 0;
  virtual CMatrix apply(const CMatrix& x) const = 0;
  virtual std::string describe() const = 0;
};

/// tau_{n,k}, optionally minus a Hadamard perturbation.
class TauMap final : public LinearMap {
 public:
  explicit TauMap(MapSpec spec,
                  std::optional<HadamardPerturbation> perturbation = {});

  const MapSpec& spec() const { return spec_; }
  const std::optional<HadamardPerturbation>& perturbation() const {
    return perturbation_;
  }

  int dim() const override { return spec_.n(); }
  CMatrix apply(const CMatrix& x) const override;
  std::string describe() const override;

 private:
  MapSpec spec_;
  std::optional<HadamardPerturbation> perturbation_;
};

/// Lambda(X) = L o X for an arbitrary square L (no admissibility required).
class HadamardMap final : public LinearMap {
 public:
  explicit HadamardMap(CMatrix l);

  int dim() const override { return static_cast<int>(l_.rows()); }
  CMatrix apply(const CMatrix& x) const override { return l_.cwiseProduct(x); }
  std::string describe() const override { return "hadamard"; }

 private:
  CMatrix l_;
};

/// Diagonal (i,i): (n-k-1) x_ii + x_{i+1,i+1} + ... + x_{i+k,i+k} (mod n);
/// off-diagonal (i,j): -x_ij. Throws InputError on a dimension mismatch.
CMatrix apply_tau(const MapSpec& spec, const CMatrix& x);

/// R_n(X) = Tr(X) I - X.
CMatrix apply_reduction(int n, const CMatrix& x);

/// tau_{n,k}(X) - L o X.
CMatrix apply_perturbed(const MapSpec& spec, const HadamardPerturbation& pert,
                        const CMatrix& x);

/// n^2 x n^2 block matrix whose (i,j) block is Phi(e_ij); row index i*n + a,
/// column index j*n + b.
CMatrix choi_matrix(const LinearMap& map);
CMatrix choi_matrix(const MapSpec& spec,
                    const std::optional<HadamardPerturbation>& pert = {});

/// Balanced Fourier vector (1/sqrt(n)) (1, -1, 1, -1, ...) for even n.
CVector alternating_vector(int n);

}  // namespace posmap
