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
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "posmap/errors.hpp"
#include "posmap/optimality.hpp"
#include "test_util.hpp"

namespace posmap {
namespace {

RMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  RMatrix m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

TEST(Circulant, Fixtures) {
  EXPECT_EQ(build_circulant(MapSpec(3, 1)).matrix,
            from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  EXPECT_EQ(build_circulant(MapSpec(4, 3)).matrix, RMatrix::Identity(4, 4));
  EXPECT_EQ(build_circulant(MapSpec(5, 3)).matrix,
            from_rows({{1, 1, 0, 0, 0},
                       {0, 1, 1, 0, 0},
                       {0, 0, 1, 1, 0},
                       {0, 0, 0, 1, 1},
                       {1, 0, 0, 0, 1}}));
  EXPECT_THROW(build_circulant(MapSpec(3, 0)), ConfigError);
}

TEST(Circulant, IntegerDeterminants) {
  EXPECT_EQ(integer_determinant(build_circulant(MapSpec(3, 1)).matrix), 2);
  EXPECT_EQ(integer_determinant(build_circulant(MapSpec(4, 3)).matrix), 1);
  EXPECT_EQ(integer_determinant(build_circulant(MapSpec(5, 3)).matrix), 2);
  for (auto [n, k] : testing::all_specs(2, 10, 1)) {
    const RMatrix m = build_circulant(MapSpec(n, k)).matrix;
    const auto exact = integer_determinant(m);
    EXPECT_NEAR(static_cast<double>(exact), m.determinant(), 1e-6);
    EXPECT_EQ(exact == 0, std::gcd(n, k) > 1) << n << "," << k;
  }
  EXPECT_EQ(integer_determinant(from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_THROW(integer_determinant(from_rows({{0.5, 1}, {1, 0}})), InputError);
  EXPECT_THROW(integer_determinant(RMatrix::Zero(2, 3)), InputError);
}

TEST(Circulant, SpectrumMatchesNumeric) {
  for (auto [n, k] : testing::all_specs(2, 12, 1)) {
    const CirculantConstraint c = build_circulant(MapSpec(n, k));
    const CirculantSpectrum s = circulant_spectrum(c);
    ASSERT_EQ(static_cast<int>(s.eigenvalues.size()), n);
    EXPECT_EQ(s.eigenvalues[0], Complex(n - k, 0.0));
    // eigenvector check: M f_j = lambda_j f_j with f_j = (omega^{jm})_m
    for (int j = 0; j < n; ++j) {
      CVector f(n);
      for (int m = 0; m < n; ++m) {
        f(m) = std::polar(1.0, 2.0 * std::numbers::pi * j * m / n);
      }
      const CVector mf = c.matrix.cast<Complex>() * f;
      EXPECT_LE((mf - s.eigenvalues[static_cast<std::size_t>(j)] * f).norm(),
                1e-10 * std::sqrt(n));
    }
    // multiset comparison against a general eigensolver
    Eigen::ComplexEigenSolver<CMatrix> solver(c.matrix.cast<Complex>());
    std::vector<Complex> numeric(solver.eigenvalues().begin(),
                                 solver.eigenvalues().end());
    std::vector<Complex> closed = s.eigenvalues;
    for (const Complex& z : closed) {
      auto best = std::min_element(numeric.begin(), numeric.end(),
                                   [&](const Complex& a, const Complex& b) {
                                     return std::abs(a - z) < std::abs(b - z);
                                   });
      EXPECT_LE(std::abs(*best - z), 1e-10) << n << "," << k;
      numeric.erase(best);
    }
  }
}

TEST(Circulant, KernelDimension) {
  for (auto [n, k] : testing::all_specs(2, 12, 1)) {
    const int d = std::gcd(n, k);
    const CirculantConstraint c = build_circulant(MapSpec(n, k));
    const CirculantSpectrum s = circulant_spectrum(c);
    EXPECT_EQ(static_cast<int>(s.zero_indices.size()), d - 1);
    const int rank = numerical_rank(c.matrix.cast<Complex>(), 1e-10);
    EXPECT_EQ(n - rank, d - 1) << n << "," << k;
  }
}

TEST(KernelBasis, OrthonormalAnnihilatedAndZeroSum) {
  for (auto [n, k] : testing::all_specs(2, 12, 1)) {
    const auto basis = kernel_basis(MapSpec(n, k));
    const CMatrix m = build_circulant(MapSpec(n, k)).matrix.cast<Complex>();
    for (std::size_t a = 0; a < basis.size(); ++a) {
      EXPECT_LE((m * basis[a]).norm(), 1e-12);
      EXPECT_LE(std::abs(basis[a].sum()), 1e-12);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Complex ip = basis[a].dot(basis[b]);
        EXPECT_NEAR(std::abs(ip - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
      }
    }
  }
}

TEST(KernelBasis, Fixtures) {
  const auto v42 = kernel_basis(MapSpec(4, 2));
  ASSERT_EQ(v42.size(), 1u);
  CVector expected(4);
  expected << 0.5, -0.5, 0.5, -0.5;
  EXPECT_EQ(v42[0], expected);

  const auto v63 = kernel_basis(MapSpec(6, 3));
  ASSERT_EQ(v63.size(), 2u);
  // v_1 advances by omega^2 per step, v_2 by omega^4
  for (int m = 0; m + 1 < 6; ++m) {
    EXPECT_LE(std::abs(v63[0](m + 1) / v63[0](m) -
                       std::polar(1.0, 2.0 * std::numbers::pi / 3.0)),
              1e-12);
    EXPECT_LE(std::abs(v63[1](m + 1) / v63[1](m) -
                       std::polar(1.0, 4.0 * std::numbers::pi / 3.0)),
              1e-12);
  }
  EXPECT_TRUE(kernel_basis(MapSpec(5, 2)).empty());
}

TEST(Certify, Verdicts) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(certify_optimality(MapSpec(n, 1)).verdict,
              Certification::kOptimalCertified);
    EXPECT_EQ(certify_optimality(MapSpec(n, n - 1)).verdict,
              Certification::kOptimalCertified);
  }
  for (int n = 3; n <= 9; n += 2) {
    EXPECT_EQ(certify_optimality(MapSpec(n, n - 2)).verdict,
              Certification::kOptimalCertified);
  }
  for (auto [n, k] : std::vector<std::pair<int, int>>{
           {4, 2}, {6, 2}, {6, 3}, {6, 4}, {8, 2}, {8, 4}, {8, 6}, {9, 3}, {9, 6}}) {
    const OptimalityCertificate cert = certify_optimality(MapSpec(n, k));
    EXPECT_EQ(cert.verdict, Certification::kNotCertified);
    EXPECT_EQ(cert.kernel_dim, std::gcd(n, k) - 1);
    EXPECT_EQ(cert.candidate_subtractions.size(), cert.kernel.size());
    for (const auto& c : cert.candidate_subtractions) {
      EXPECT_EQ(c.weight(), 0.0);
    }
  }
  EXPECT_EQ(to_string(Certification::kOptimalCertified), "optimal-certified");
  EXPECT_EQ(to_string(Certification::kNotCertified), "not-certified");
}

TEST(AdmissibleSubtraction, Examples) {
  const CVector v1 = kernel_basis(MapSpec(4, 2))[0];
  EXPECT_TRUE(admissible_subtraction_check(2.0 * v1 * v1.adjoint(), 4));
  EXPECT_FALSE(admissible_subtraction_check(CMatrix::Identity(4, 4), 4));
  EXPECT_FALSE(admissible_subtraction_check(-v1 * v1.adjoint(), 4));
  EXPECT_THROW(admissible_subtraction_check(CMatrix::Identity(3, 3), 4),
               InputError);
}

TEST(ConjectureProbe, EvidenceAtBound) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}}) {
    const ConjectureReport r = conjecture_probe(MapSpec(n, k));
    EXPECT_EQ(r.t, n - k);
    EXPECT_EQ(r.witness_at_bound, 0.0);
    EXPECT_LT(r.witness_above_bound, 0.0);
    EXPECT_GE(r.seesaw.min_value, -1e-7);
    EXPECT_EQ(r.verdict, ConjectureVerdict::kEvidencePositive);
  }
}

TEST(ConjectureProbe, CounterexampleAboveBound) {
  ConjectureOptions opts;
  opts.t = 2.5;
  const ConjectureReport r = conjecture_probe(MapSpec(4, 2), opts);
  EXPECT_NEAR(r.witness_at_t, -0.25, 1e-15);
  EXPECT_NEAR(r.seesaw.min_value, -0.125, 1e-9);
  EXPECT_EQ(r.verdict, ConjectureVerdict::kCounterexampleFound);
  EXPECT_EQ(to_string(r.verdict), "counterexample-found");
}

TEST(ConjectureProbe, Errors) {
  EXPECT_THROW(conjecture_probe(MapSpec(6, 3)), ConfigError);
  EXPECT_THROW(conjecture_probe(MapSpec(5, 2)), ConfigError);
  ConjectureOptions bad;
  bad.t = -1.0;
  EXPECT_THROW(conjecture_probe(MapSpec(4, 2), bad), ConfigError);
}

TEST(WeightSweep, GridAndErrors) {
  SeesawOptions opts;
  opts.starts = 8;
  const auto points = sweep_kernel_weights(MapSpec(6, 3), {0.0, 1.0, 2}, opts);
  ASSERT_EQ(points.size(), 4u);
  EXPECT_EQ(points[0].weights, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(points[3].weights, (std::vector<double>{1.0, 1.0}));
  EXPECT_THROW(sweep_kernel_weights(MapSpec(5, 2), {0, 1, 2}, opts), ConfigError);
  EXPECT_THROW(sweep_kernel_weights(MapSpec(6, 3), {1, 0, 2}, opts), ConfigError);
  EXPECT_THROW(sweep_kernel_weights(MapSpec(6, 3), {0, 1, 0}, opts), ConfigError);
  EXPECT_THROW(sweep_kernel_weights(MapSpec(6, 3), {0, 1, 65}, opts), ConfigError);
}

}  // namespace
}  // namespace posmap
