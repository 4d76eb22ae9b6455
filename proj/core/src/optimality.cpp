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
#include "posmap/optimality.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "posmap/errors.hpp"
#include "posmap/profile.hpp"

namespace posmap {

namespace {

Complex root_of_unity(int n, std::int64_t power) {
  const std::int64_t reduced = ((power % n) + n) % n;
  // quarter turns are exact so that e.g. v1 = (1,-1,1,-1)/2 has no residue
  if ((4 * reduced) % n == 0) {
    static constexpr Complex kQuarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kQuarter[(4 * reduced) / n];
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(reduced) /
                             static_cast<double>(n));
}

void require_nonzero_k(const MapSpec& spec) {
  if (spec.k() < 1) {
    throw ConfigError("optimality analysis requires k >= 1");
  }
}

}  // namespace

CirculantConstraint build_circulant(const MapSpec& spec) {
  require_nonzero_k(spec);
  const int n = spec.n();
  CirculantConstraint c{spec, std::vector<int>(static_cast<std::size_t>(n), 0),
                        RMatrix::Zero(n, n), root_of_unity(n, 1)};
  for (int m = 0; m < n - spec.k(); ++m) c.first_row[static_cast<std::size_t>(m)] = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c.matrix(i, j) = c.first_row[static_cast<std::size_t>(((j - i) % n + n) % n)];
    }
  }
  return c;
}

CirculantSpectrum circulant_spectrum(const CirculantConstraint& constraint) {
  const int n = constraint.spec.n();
  const int k = constraint.spec.k();
  CirculantSpectrum out;
  out.eigenvalues.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Complex lambda = 0.0;
    for (int m = 0; m < n - k; ++m) {
      lambda += root_of_unity(n, static_cast<std::int64_t>(j) * m);
    }
    out.eigenvalues.push_back(lambda);
  }
  const int d = std::gcd(n, k);
  for (int r = 1; r < d; ++r) out.zero_indices.push_back(r * (n / d));
  // lambda_0 = n - k exactly; the roots-of-unity sum above can carry rounding.
  out.eigenvalues[0] = static_cast<double>(n - k);
  for (int j : out.zero_indices) out.eigenvalues[static_cast<std::size_t>(j)] = 0.0;
  return out;
}

std::vector<CVector> kernel_basis(const MapSpec& spec) {
  require_nonzero_k(spec);
  const int n = spec.n();
  const int d = std::gcd(n, spec.k());
  std::vector<CVector> basis;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int r = 1; r < d; ++r) {
    const std::int64_t j = static_cast<std::int64_t>(r) * (n / d);
    CVector v(n);
    for (int m = 0; m < n; ++m) v(m) = scale * root_of_unity(n, j * m);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::int64_t integer_determinant(const RMatrix& integral) {
  const Eigen::Index n = integral.rows();
  if (n != integral.cols()) throw InputError("determinant of non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<std::int64_t>> a(
      static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = integral(i, j);
      if (v != std::round(v)) throw InputError("matrix is not integer-valued");
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<std::int64_t>(v);
    }
  }
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  const auto sz = static_cast<std::size_t>(n);
  for (std::size_t k = 0; k + 1 < sz; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < sz && a[swap][k] == 0) ++swap;
      if (swap == sz) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < sz; ++i) {
      for (std::size_t j = k + 1; j < sz; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[sz - 1][sz - 1];
}

std::string_view to_string(Certification c) {
  return c == Certification::kOptimalCertified ? "optimal-certified"
                                               : "not-certified";
}

OptimalityCertificate certify_optimality(const MapSpec& spec) {
  require_nonzero_k(spec);
  const int d = std::gcd(spec.n(), spec.k());
  OptimalityCertificate cert{spec,
                             d,
                             d - 1,
                             d == 1 ? Certification::kOptimalCertified
                                    : Certification::kNotCertified,
                             build_circulant(spec),
                             {},
                             kernel_basis(spec),
                             {},
                             std::nullopt};
  cert.spectrum = circulant_spectrum(cert.constraint);
  for (const CVector& v : cert.kernel) {
    cert.candidate_subtractions.push_back(HadamardPerturbation::rank_one(v, 0.0));
  }
  return cert;
}

bool admissible_subtraction_check(const CMatrix& l, int n) {
  if (l.rows() != n || l.cols() != n) {
    throw InputError("admissibility check: matrix dimension does not match n");
  }
  return inspect_hadamard_matrix(l).admissible();
}

std::string_view to_string(ConjectureVerdict v) {
  return v == ConjectureVerdict::kEvidencePositive ? "evidence-positive"
                                                   : "counterexample-found";
}

ConjectureReport conjecture_probe(const MapSpec& spec,
                                  const ConjectureOptions& options) {
  require_nonzero_k(spec);
  if (std::gcd(spec.n(), spec.k()) != 2) {
    throw ConfigError("conjecture probe requires gcd(n, k) = 2");
  }
  const int n = spec.n();
  const int k = spec.k();
  const double bound = n - k;
  ConjectureReport report(spec);
  report.t = options.t.value_or(bound);
  if (!(report.t >= 0.0) || !std::isfinite(report.t)) {
    throw ConfigError("t must be finite and >= 0");
  }
  if (!(options.epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
  report.epsilon = options.epsilon;
  report.t_max_witnessed = bound;

  const WitnessEvaluation at_t = pro2_witness_value(n, k, report.t);
  report.witness_at_t = at_t.value;
  report.witness_mu = at_t.mu;
  report.witness_at_bound = pro2_witness_value(n, k, bound).value;
  report.witness_above_bound =
      pro2_witness_value(n, k, bound + options.epsilon).value;

  const TauMap perturbed(
      spec, HadamardPerturbation::rank_one(alternating_vector(n), report.t));
  report.seesaw = seesaw_minimize(perturbed, options.seesaw);

  const bool witness_negative = report.witness_at_t < -options.seesaw.tol;
  const bool seesaw_negative =
      report.seesaw.verdict == Verdict::kNegativeCertificate;
  report.verdict = (witness_negative || seesaw_negative)
                       ? ConjectureVerdict::kCounterexampleFound
                       : ConjectureVerdict::kEvidencePositive;
  return report;
}

std::vector<WeightSweepPoint> sweep_kernel_weights(
    const MapSpec& spec, const WeightGrid& grid, const SeesawOptions& seesaw) {
  const std::vector<CVector> basis = kernel_basis(spec);
  if (basis.empty()) {
    throw ConfigError("weight sweep requires gcd(n, k) >= 2");
  }
  if (grid.steps < 1 || !(grid.lo >= 0.0) || !(grid.hi >= grid.lo) ||
      !std::isfinite(grid.hi)) {
    throw ConfigError("weight grid needs steps >= 1 and 0 <= lo <= hi");
  }
  const std::size_t axes = basis.size();
  double points = 1.0;
  for (std::size_t a = 0; a < axes; ++a) points *= grid.steps;
  if (points > 4096.0) throw ConfigError("weight grid exceeds 4096 points");

  auto axis_value = [&](int idx) {
    if (grid.steps == 1) return grid.lo;
    return grid.lo + (grid.hi - grid.lo) * idx / (grid.steps - 1);
  };

  const int n = spec.n();
  std::vector<WeightSweepPoint> out;
  std::vector<int> index(axes, 0);
  for (;;) {
    WeightSweepPoint point;
    CMatrix l = CMatrix::Zero(n, n);
    for (std::size_t a = 0; a < axes; ++a) {
      const double w = axis_value(index[a]);
      point.weights.push_back(w);
      l += w * basis[a] * basis[a].adjoint();
    }
    const TauMap map(spec, HadamardPerturbation::full(std::move(l)));
    const PositivityReport r = seesaw_minimize(map, seesaw);
    point.seesaw_min = r.min_value;
    point.verdict = r.verdict;
    out.push_back(std::move(point));

    std::size_t a = 0;
    while (a < axes && ++index[a] == grid.steps) index[a++] = 0;
    if (a == axes) break;
  }
  return out;
}

}  // namespace posmap
