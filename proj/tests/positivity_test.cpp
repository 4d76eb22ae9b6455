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

#include <random>

#include "posmap/errors.hpp"
#include "posmap/positivity.hpp"
#include "test_util.hpp"

namespace posmap {
namespace {

CVector basis(int n, int i) {
  CVector e = CVector::Zero(n);
  e(i) = 1.0;
  return e;
}

// (x (x) y)^dagger C (x (x) y) with C the Choi matrix: the second route to the
// form value used by the see-saw x step.
double form_via_choi(const LinearMap& map, CVector x, CVector y) {
  x.normalize();
  y.normalize();
  const CVector p = kron(x, y);
  return p.dot(choi_matrix(map) * p).real();
}

TEST(FormValue, UnimodularPairsVanish) {
  std::mt19937_64 rng(1);
  for (auto [n, k] : testing::all_specs(2, 7)) {
    const TauMap map(MapSpec(n, k));
    for (int trial = 0; trial < 20; ++trial) {
      const CVector x = testing::random_phases(n, rng);
      EXPECT_NEAR(form_value(map, x, x.conjugate()), 0.0, 1e-12);
    }
  }
}

TEST(FormValue, BasisFixtures) {
  // tau_{3,1}(e_00) = diag(1, 0, 1): the (1,1) entry is zero.
  const TauMap choi(MapSpec(3, 1));
  EXPECT_EQ(form_value(choi, basis(3, 0), basis(3, 1)), 0.0);
  EXPECT_EQ(form_value(choi, basis(3, 0), basis(3, 0)), 1.0);
  EXPECT_EQ(form_value(choi, basis(3, 0), basis(3, 2)), 1.0);
  for (int n = 2; n <= 6; ++n) {
    const TauMap red(MapSpec(n, n - 1));
    EXPECT_EQ(form_value(red, basis(n, 0), basis(n, 0)), 0.0);
  }
}

TEST(FormValue, NormalizesInputsAndChecksShape) {
  const TauMap map(MapSpec(3, 1));
  const CVector x = CVector::Ones(3) * 5.0;
  EXPECT_NEAR(form_value(map, x, x), 0.0, 1e-12);
  EXPECT_THROW(form_value(map, CVector::Ones(4), CVector::Ones(3)), InputError);
  EXPECT_THROW(form_value(map, CVector::Zero(3), CVector::Ones(3)), InputError);
}

TEST(FormValue, AgreesWithChoiRoute) {
  std::mt19937_64 rng(2);
  for (auto [n, k] : testing::all_specs(2, 6)) {
    const TauMap map(MapSpec(n, k));
    for (int trial = 0; trial < 10; ++trial) {
      const CVector x = testing::random_complex(n, 1, rng).col(0);
      const CVector y = testing::random_complex(n, 1, rng).col(0);
      EXPECT_NEAR(form_value(map, x, y), form_via_choi(map, x, y), 1e-12);
    }
  }
}

TEST(Seesaw, ChoiMapIsPositive) {
  const PositivityReport r = seesaw_minimize(TauMap(MapSpec(3, 1)), {});
  EXPECT_EQ(r.verdict, Verdict::kPositiveEvidence);
  EXPECT_GE(r.min_value, -1e-9);
  EXPECT_LE(r.min_value, 1e-6);
  EXPECT_EQ(r.starts_used, 64);
}

TEST(Seesaw, CorrectedTau42IsPositive) {
  const TauMap map(MapSpec(4, 2),
                   HadamardPerturbation::rank_one(alternating_vector(4), 2.0));
  const PositivityReport r = seesaw_minimize(map, {});
  EXPECT_GE(r.min_value, -1e-7);
  EXPECT_LE(r.min_value, 1e-6);
}

// Past t = n - k the balanced witness goes negative. With unit x the form
// value is the block eigenvalue ((n-k)-t)/2 divided by ||mu||^2 = n/2, and a
// Cauchy-Schwarz bound shows no unit pair does better.
TEST(Seesaw, OverSubtractedTau42HasNegativeCertificate) {
  for (double t : {2.1, 2.5, 3.0}) {
    const TauMap map(MapSpec(4, 2),
                     HadamardPerturbation::rank_one(alternating_vector(4), t));
    const PositivityReport r = seesaw_minimize(map, {});
    EXPECT_EQ(r.verdict, Verdict::kNegativeCertificate);
    EXPECT_NEAR(r.min_value, ((4 - 2) - t) / 2.0 / 2.0, 1e-9) << t;
    EXPECT_EQ(form_value(map, r.witness_x, r.witness_y), r.min_value);
  }
}

TEST(Seesaw, HalfStepsAreMonotone) {
  for (auto [n, k] : testing::all_specs(2, 6)) {
    const TauMap map(MapSpec(n, k));
    for (int s = 0; s < 8; ++s) {
      std::vector<double> trace;
      seesaw_descent(map, seesaw_initial_point(n, 99, s), {}, &trace);
      ASSERT_GE(trace.size(), 3u);
      for (std::size_t i = 1; i < trace.size(); ++i) {
        ASSERT_LE(trace[i], trace[i - 1] + 1e-12) << n << "," << k << " step " << i;
      }
    }
  }
}

TEST(Seesaw, MinValueIsFormAtWitness) {
  for (auto [n, k] : testing::all_specs(2, 5)) {
    const TauMap map(MapSpec(n, k));
    SeesawOptions o;
    o.starts = 8;
    const PositivityReport r = seesaw_minimize(map, o);
    EXPECT_NEAR(form_value(map, r.witness_x, r.witness_y), r.min_value, 1e-12);
  }
}

TEST(Seesaw, DeterministicAcrossThreadCounts) {
  const TauMap map(MapSpec(5, 2));
  SeesawOptions o;
  o.starts = 16;
  o.seed = 42;
  o.threads = 1;
  const PositivityReport a = seesaw_minimize(map, o);
  o.threads = 4;
  const PositivityReport b = seesaw_minimize(map, o);
  EXPECT_EQ(a.min_value, b.min_value);
  EXPECT_EQ(a.best_start, b.best_start);
  EXPECT_EQ(a.witness_x, b.witness_x);
  EXPECT_EQ(a.total_iterations, b.total_iterations);
  o.seed = 43;
  EXPECT_NE(seesaw_initial_point(5, 42, 0), seesaw_initial_point(5, 43, 0));
  EXPECT_NE(seesaw_initial_point(5, 42, 0), seesaw_initial_point(5, 42, 1));
}

TEST(Seesaw, RejectsZeroStarts) {
  SeesawOptions o;
  o.starts = 0;
  EXPECT_THROW(seesaw_minimize(TauMap(MapSpec(3, 1)), o), ConfigError);
}

TEST(Seesaw, StepTolerancePolishesOntoZeroSet) {
  const TauMap map(MapSpec(3, 1));
  SeesawOptions o;
  o.step_tol = 1e-13;
  int converged = 0;
  for (int s = 0; s < 16; ++s) {
    const SeesawStart r = seesaw_descent(map, seesaw_initial_point(3, 0, s), o);
    if (!r.converged || r.value > 1e-9) continue;
    ++converged;
    // converged witnesses pair x with conj(x) up to phase
    EXPECT_NEAR(std::abs(r.y.dot(r.x.conjugate())), 1.0, 1e-12);
  }
  EXPECT_GT(converged, 0);
}

}  // namespace
}  // namespace posmap
