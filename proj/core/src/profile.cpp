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
#include "posmap/profile.hpp"

#include <cmath>

#include "posmap/errors.hpp"

namespace posmap {

RMatrix shift_sum_matrix(const MapSpec& spec) {
  const int n = spec.n();
  RMatrix s = RMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    s(i, i) = spec.n() - spec.k();
    for (int m = 1; m <= spec.k(); ++m) s(i, (i + m) % n) += 1.0;
  }
  return s;
}

DiagonalProfile make_profile(const MapSpec& spec, const RVector& moduli_sq) {
  if (moduli_sq.size() != spec.n()) {
    throw InputError("profile length does not match n");
  }
  if ((moduli_sq.array() < 0.0).any() || !moduli_sq.allFinite()) {
    throw InputError("profile entries must be finite and non-negative");
  }
  return {moduli_sq, shift_sum_matrix(spec) * moduli_sq};
}

double f_value(const MapSpec& spec, const RVector& moduli_sq) {
  const DiagonalProfile p = make_profile(spec, moduli_sq);
  // extended accumulation keeps f(1) = 1 exact after rounding
  long double f = 0.0L;
  for (int i = 0; i < spec.n(); ++i) {
    if (!(p.weights(i) > 0.0)) {
      throw InputError("f_value: profile outside the region D_i > 0");
    }
    f += static_cast<long double>(p.moduli_sq(i)) / p.weights(i);
  }
  return static_cast<double>(f);
}

double analytic_det(const MapSpec& spec, const RVector& moduli_sq) {
  const DiagonalProfile p = make_profile(spec, moduli_sq);
  const int n = spec.n();
  double det = p.weights.prod();
  for (int j = 0; j < n; ++j) {
    double term = p.moduli_sq(j);
    for (int i = 0; i < n; ++i) {
      if (i != j) term *= p.weights(i);
    }
    det -= term;
  }
  return det;
}

HessianData hessian_shat(const MapSpec& spec) {
  HessianData h;
  h.s = shift_sum_matrix(spec);
  h.s_prime = h.s.row(0).sum();
  h.s_hat = h.s_prime * (h.s + h.s.transpose()) - 2.0 * h.s.transpose() * h.s;
  return h;
}

double case2_lower_bound(const MapSpec& spec) {
  if (spec.is_reduction()) {
    throw ConfigError("degenerate-block bound requires k < n-1");
  }
  const double nk = spec.n() - spec.k();
  return 1.0 - (nk - 1.0) / nk;
}

WitnessEvaluation pro2_witness_value(int n, int k, double t) {
  if (n % 2 != 0 || k % 2 != 0) {
    throw ConfigError("witness requires even n and even k");
  }
  if (!(t >= 0.0)) throw ConfigError("witness requires t >= 0");
  const MapSpec spec(n, k);
  const int p = n / 2;

  WitnessEvaluation out;
  out.mu = CVector::Zero(n);
  for (int i = 0; i < n; i += 2) out.mu(i) = 1.0;
  const CMatrix image = apply_perturbed(
      spec, HadamardPerturbation::rank_one(alternating_vector(n), t),
      out.mu * out.mu.adjoint());
  out.block.resize(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) out.block(i, j) = image(2 * i, 2 * j).real();
  }
  out.numeric_value = out.block.sum() / p;
  out.value = ((n - k) - t) / 2.0;
  return out;
}

ProfileAnalysis analyze_profile(const MapSpec& spec, const RVector& moduli_sq) {
  ProfileAnalysis a;
  a.profile = make_profile(spec, moduli_sq);
  a.det = analytic_det(spec, moduli_sq);
  a.reduced_bound = spec.is_reduction() ? 0.0 : case2_lower_bound(spec);
  double ratio_sum = 0.0;
  for (int i = 0; i < spec.n(); ++i) {
    const double d = a.profile.weights(i);
    if (d > 0.0) {
      ratio_sum += a.profile.moduli_sq(i) / d;
    } else {
      a.zero_rows.push_back(i);
    }
  }
  a.reduced_factor = 1.0 - ratio_sum;
  if (a.zero_rows.empty()) {
    a.region = ProfileRegion::kInterior;
    a.f = ratio_sum;
  } else {
    a.region = ProfileRegion::kDegenerate;
  }
  return a;
}

}  // namespace posmap
