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
#include "posmap/linalg.hpp"

#include <algorithm>
#include <limits>

namespace posmap {

double hermitian_defect(const CMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

bool is_hermitian(const CMatrix& a, double tol) {
  return hermitian_defect(a) <= tol;
}

MinEigenpair min_eigenpair(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

RVector hermitian_eigenvalues(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian,
                                                Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

RVector symmetric_eigenvalues(const RMatrix& symmetric) {
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(symmetric,
                                                Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

int numerical_rank(const CMatrix& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  const RVector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = rel_tol * sv(0);
  return static_cast<int>((sv.array() > cut).count());
}

CVector kron(const CVector& x, const CVector& y) {
  CVector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.segment(i * y.size(), y.size()) = x(i) * y;
  }
  return out;
}

CMatrix matrix_unit(int n, int i, int j) {
  CMatrix e = CMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

}  // namespace posmap
