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

#include <complex>

#include <Eigen/Dense>

namespace posmap {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;

/// max |A_ij - conj(A_ji)|; zero for exactly Hermitian input.
double hermitian_defect(const CMatrix& a);

bool is_hermitian(const CMatrix& a, double tol = kHermitianTol);

/// Smallest eigenvalue and a unit eigenvector of a Hermitian matrix. Only the
/// lower triangle is read.
struct MinEigenpair {
  double value = 0.0;
  CVector vector;
};
MinEigenpair min_eigenpair(const CMatrix& hermitian);

/// Ascending eigenvalues of a Hermitian matrix.
RVector hermitian_eigenvalues(const CMatrix& hermitian);
RVector symmetric_eigenvalues(const RMatrix& symmetric);

/// Number of singular values strictly above rel_tol * sigma_max.
int numerical_rank(const CMatrix& a, double rel_tol);

/// Kronecker product x (x) y with index i * y.size() + a.
CVector kron(const CVector& x, const CVector& y);

/// Matrix unit e_ij of size n.
CMatrix matrix_unit(int n, int i, int j);

}  // namespace posmap
