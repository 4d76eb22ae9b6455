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
#include "posmap/map.hpp"

#include <cmath>
#include <sstream>

#include "posmap/errors.hpp"

namespace posmap {

namespace {

constexpr double kPsdTol = 1e-10;
constexpr double kSumTol = 1e-10;
constexpr double kOnesTol = 1e-9;

void require_square(const CMatrix& x, int n, const char* what) {
  if (x.rows() != n || x.cols() != n) {
    std::ostringstream msg;
    msg << what << ": expected " << n << "x" << n << " matrix, got "
        << x.rows() << "x" << x.cols();
    throw InputError(msg.str());
  }
}

}  // namespace

MapSpec::MapSpec(int n, int k) : n_(n), k_(k) {
  if (n < 2) throw ConfigError("n must be at least 2");
  if (k < 0 || k > n - 1) throw ConfigError("k out of range");
}

HadamardInspection inspect_hadamard_matrix(const CMatrix& l) {
  HadamardInspection out;
  if (l.rows() != l.cols() || l.rows() == 0) return out;
  out.hermitian = is_hermitian(l, kHermitianTol);
  const CMatrix sym = 0.5 * (l + l.adjoint());
  out.min_eigenvalue = hermitian_eigenvalues(sym)(0);
  out.entry_sum = l.sum().real();
  out.ones_residual = (l * CVector::Ones(l.rows())).norm();
  out.psd = out.min_eigenvalue >= -kPsdTol;
  out.zero_sum = std::abs(l.sum()) <= kSumTol;
  out.annihilates_ones = out.ones_residual <= kOnesTol;
  return out;
}

HadamardPerturbation HadamardPerturbation::full(CMatrix l) {
  if (l.rows() != l.cols() || l.rows() < 2) {
    throw InputError("perturbation matrix must be square with dim >= 2");
  }
  const HadamardInspection check = inspect_hadamard_matrix(l);
  if (!check.hermitian) throw InputError("perturbation matrix is not Hermitian");
  if (!check.psd) {
    throw InputError("perturbation matrix is not positive semidefinite");
  }
  if (!check.zero_sum || !check.annihilates_ones) {
    throw InputError("perturbation matrix entries do not sum to zero");
  }
  return HadamardPerturbation(std::move(l), std::nullopt, 1.0);
}

HadamardPerturbation HadamardPerturbation::rank_one(CVector alpha,
                                                    double weight) {
  if (alpha.size() < 2) throw InputError("perturbation vector needs dim >= 2");
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw InputError("perturbation weight must be finite and >= 0");
  }
  CMatrix l = weight * (alpha * alpha.adjoint());
  const HadamardInspection check = inspect_hadamard_matrix(l);
  if (!check.zero_sum || !check.annihilates_ones) {
    throw InputError("perturbation vector entries do not sum to zero");
  }
  return HadamardPerturbation(std::move(l), std::move(alpha), weight);
}

CMatrix HadamardPerturbation::apply(const CMatrix& x) const {
  require_square(x, dim(), "hadamard perturbation");
  return l_.cwiseProduct(x);
}

TauMap::TauMap(MapSpec spec, std::optional<HadamardPerturbation> perturbation)
    : spec_(spec), perturbation_(std::move(perturbation)) {
  if (perturbation_ && perturbation_->dim() != spec_.n()) {
    throw InputError("perturbation dimension does not match n");
  }
}

CMatrix TauMap::apply(const CMatrix& x) const {
  if (perturbation_) return apply_perturbed(spec_, *perturbation_, x);
  return apply_tau(spec_, x);
}

std::string TauMap::describe() const {
  std::ostringstream out;
  out << "tau(" << spec_.n() << "," << spec_.k() << ")";
  if (perturbation_) out << " - L o X";
  return out.str();
}

HadamardMap::HadamardMap(CMatrix l) : l_(std::move(l)) {
  if (l_.rows() != l_.cols()) throw InputError("Hadamard kernel must be square");
}

CMatrix apply_tau(const MapSpec& spec, const CMatrix& x) {
  const int n = spec.n();
  const int k = spec.k();
  require_square(x, n, "apply_tau");
  CMatrix out = -x;
  for (int i = 0; i < n; ++i) {
    Complex d = static_cast<double>(spec.self_weight()) * x(i, i);
    for (int m = 1; m <= k; ++m) {
      const int j = (i + m) % n;
      d += x(j, j);
    }
    out(i, i) = d;
  }
  return out;
}

CMatrix apply_reduction(int n, const CMatrix& x) {
  return apply_tau(MapSpec(n, n - 1), x);
}

CMatrix apply_perturbed(const MapSpec& spec, const HadamardPerturbation& pert,
                        const CMatrix& x) {
  if (pert.dim() != spec.n()) {
    throw InputError("perturbation dimension does not match n");
  }
  return apply_tau(spec, x) - pert.apply(x);
}

CMatrix choi_matrix(const LinearMap& map) {
  const int n = map.dim();
  CMatrix choi(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      choi.block(i * n, j * n, n, n) = map.apply(matrix_unit(n, i, j));
    }
  }
  return choi;
}

CMatrix choi_matrix(const MapSpec& spec,
                    const std::optional<HadamardPerturbation>& pert) {
  return choi_matrix(TauMap(spec, pert));
}

CVector alternating_vector(int n) {
  if (n < 2 || n % 2 != 0) {
    throw ConfigError("alternating vector needs an even dimension");
  }
  CVector v(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) v(i) = (i % 2 == 0 ? scale : -scale);
  return v;
}

}  // namespace posmap
