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
#include "cli/commands.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "cli/matrix_io.hpp"
#include "posmap/errors.hpp"
#include "posmap/map.hpp"
#include "posmap/positivity.hpp"
#include "posmap/spanning.hpp"
#include "posmap/version.hpp"

namespace posmap::cli {

namespace {

std::optional<HadamardPerturbation> resolve_perturbation(
    const RunConfig& config, const MapSpec& spec) {
  if (config.perturb_matrix_path) {
    return HadamardPerturbation::full(read_matrix_file(*config.perturb_matrix_path));
  }
  if (!config.perturb) return std::nullopt;
  const int r = std::stoi(config.perturb->substr(1));
  const std::vector<CVector> basis = kernel_basis(spec);
  if (r < 1 || r > static_cast<int>(basis.size())) {
    throw ConfigError("perturbation " + *config.perturb +
                      " is not a kernel vector of this map");
  }
  const double t = config.t.value_or(spec.n() - spec.k());
  return HadamardPerturbation::rank_one(basis[static_cast<std::size_t>(r - 1)], t);
}

Json perturbation_to_json(const std::optional<HadamardPerturbation>& pert) {
  if (!pert) return nullptr;
  Json out;
  out["kind"] = pert->direction() ? "rank-one" : "full";
  out["weight"] = pert->weight();
  out["direction"] =
      pert->direction() ? vector_to_json(*pert->direction()) : Json(nullptr);
  out["matrix"] = matrix_to_json(pert->matrix());
  return out;
}

Json map_to_json(const MapSpec& spec) {
  Json out;
  out["n"] = spec.n();
  out["k"] = spec.k();
  out["reduction"] = spec.is_reduction();
  return out;
}

SeesawOptions seesaw_options(const RunConfig& config) {
  SeesawOptions o;
  o.starts = config.starts;
  o.seed = config.seed;
  o.tol = config.tol;
  o.threads = config.threads;
  return o;
}

Json positivity_to_json(const PositivityReport& r) {
  Json out;
  out["verdict"] = std::string(to_string(r.verdict));
  out["min_value"] = r.min_value;
  out["witness_x"] = vector_to_json(r.witness_x);
  out["witness_y"] = vector_to_json(r.witness_y);
  out["starts_used"] = r.starts_used;
  out["iterations"] = r.iterations;
  out["total_iterations"] = r.total_iterations;
  out["best_start"] = r.best_start;
  out["seed"] = r.seed;
  return out;
}

Json run_apply(const RunConfig& config, const MapSpec& spec) {
  if (!config.input_matrix_path) {
    throw ConfigError("apply requires --input <matrix.json>");
  }
  const CMatrix x = read_matrix_file(*config.input_matrix_path);
  if (x.rows() != spec.n()) {
    throw InputError("input matrix dimension does not match n");
  }
  if (!is_hermitian(x)) throw InputError("input matrix is not Hermitian");
  const auto pert = resolve_perturbation(config, spec);
  const TauMap map(spec, pert);
  const CMatrix image = map.apply(x);
  Json out;
  out["map"] = map_to_json(spec);
  out["perturbation"] = perturbation_to_json(pert);
  out["output"] = matrix_to_json(image);
  return out;
}

Json run_positivity(const RunConfig& config, const MapSpec& spec) {
  const TauMap map(spec, resolve_perturbation(config, spec));
  Json out;
  out["map"] = map_to_json(spec);
  out["perturbation"] = perturbation_to_json(map.perturbation());
  out["positivity"] = positivity_to_json(seesaw_minimize(map, seesaw_options(config)));
  return out;
}

Json run_spanning(const RunConfig& config, const MapSpec& spec,
                  int& exit_code) {
  SpanningOptions options;
  options.samples = config.samples.value_or(0);
  options.threads = config.threads;
  const SpanningResult r = spanning_rank(spec, config.seed, options);
  Json out;
  out["map"] = map_to_json(spec);
  out["rank"] = r.rank;
  out["spanning_property"] = r.has_spanning_property;
  out["full_dimension"] = spec.n() * spec.n();
  out["sigma_dimension"] = spec.n() * spec.n() - spec.n() + 1;
  Json counts;
  counts["unimodular"] = r.unimodular_count;
  counts["degenerate"] = r.degenerate_count;
  counts["harvested"] = r.harvested_count;
  counts["admitted"] = static_cast<int>(r.set.pairs.size());
  counts["rejected"] = r.set.rejected;
  out["pairs"] = counts;
  int members = 0;
  for (bool b : r.set.sigma_membership) members += b ? 1 : 0;
  out["sigma_members"] = members;
  out["anomalies"] = r.anomalies;
  if (r.anomalies > 0) exit_code = kExitAnomaly;
  return out;
}

Json run_certify(const MapSpec& spec) {
  const OptimalityCertificate cert = certify_optimality(spec);
  Json out;
  out["map"] = map_to_json(spec);
  out["gcd"] = cert.gcd;
  out["kernel_dim"] = cert.kernel_dim;
  out["verdict"] = std::string(to_string(cert.verdict));
  out["first_row"] = cert.constraint.first_row;
  Json spectrum = Json::array();
  for (Complex z : cert.spectrum.eigenvalues) spectrum.push_back(complex_to_json(z));
  out["spectrum"] = spectrum;
  out["zero_indices"] = cert.spectrum.zero_indices;
  Json kernel = Json::array();
  for (const CVector& v : cert.kernel) kernel.push_back(vector_to_json(v));
  out["kernel_basis"] = kernel;
  Json candidates = Json::array();
  for (const auto& c : cert.candidate_subtractions) {
    candidates.push_back(perturbation_to_json(c));
  }
  out["candidate_subtractions"] = candidates;
  return out;
}

Json run_conjecture(const RunConfig& config, const MapSpec& spec) {
  Json out;
  out["map"] = map_to_json(spec);
  const int d = std::gcd(spec.n(), spec.k());
  if (config.experimental) {
    const std::vector<WeightSweepPoint> points =
        sweep_kernel_weights(spec, *config.grid, seesaw_options(config));
    out["experimental"] = true;
    out["gcd"] = d;
    Json list = Json::array();
    for (const auto& p : points) {
      Json item;
      item["weights"] = p.weights;
      item["seesaw_min"] = p.seesaw_min;
      item["verdict"] = std::string(to_string(p.verdict));
      list.push_back(std::move(item));
    }
    out["points"] = list;
    return out;
  }
  ConjectureOptions options;
  options.t = config.t;
  options.seesaw = seesaw_options(config);
  const ConjectureReport r = conjecture_probe(spec, options);
  out["experimental"] = false;
  out["gcd"] = d;
  out["t"] = r.t;
  out["epsilon"] = r.epsilon;
  out["t_max_witnessed"] = r.t_max_witnessed;
  out["witness_mu"] = vector_to_json(r.witness_mu);
  out["witness_value_at_t"] = r.witness_at_t;
  out["witness_value_at_bound"] = r.witness_at_bound;
  out["witness_value_above_bound"] = r.witness_above_bound;
  out["seesaw_min"] = r.seesaw.min_value;
  out["seesaw"] = positivity_to_json(r.seesaw);
  out["verdict"] = std::string(to_string(r.verdict));
  return out;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::kApply:
      return "apply";
    case Command::kPositivity:
      return "positivity";
    case Command::kSpanning:
      return "spanning";
    case Command::kCertify:
      return "certify";
    case Command::kConjecture:
      return "conjecture";
  }
  return "unknown";
}

WeightGrid parse_grid(const std::string& text) {
  WeightGrid grid;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> grid.lo >> c1 >> grid.hi >> c2 >> grid.steps) || c1 != ':' ||
      c2 != ':' || !in.eof()) {
    throw ConfigError("grid must look like lo:hi:steps");
  }
  return grid;
}

void validate(const RunConfig& config) {
  const MapSpec spec(config.n, config.k);
  if (config.starts < 1) throw ConfigError("starts must be at least 1");
  if (!(config.tol > 0.0) || !std::isfinite(config.tol)) {
    throw ConfigError("tol must be positive");
  }
  if (config.t && (!(*config.t >= 0.0) || !std::isfinite(*config.t))) {
    throw ConfigError("t must be finite and >= 0");
  }
  if (config.perturb) {
    const std::string& p = *config.perturb;
    if (p.size() < 2 || p[0] != 'v' ||
        p.find_first_not_of("0123456789", 1) != std::string::npos) {
      throw ConfigError("perturb must be of the form v<r>, e.g. v1");
    }
  }
  if (config.perturb && config.perturb_matrix_path) {
    throw ConfigError("use either --perturb or --perturb-matrix, not both");
  }
  if (config.t && !config.perturb && config.command != Command::kConjecture) {
    throw ConfigError("--t requires --perturb");
  }
  const int n = spec.n();
  if (config.samples && *config.samples < n * n - n + 1) {
    throw ConfigError("samples must be at least n^2 - n + 1");
  }
  switch (config.command) {
    case Command::kSpanning:
    case Command::kCertify:
      if (spec.k() < 1) throw ConfigError("k must be at least 1");
      break;
    case Command::kConjecture:
      if (spec.k() < 1) throw ConfigError("k must be at least 1");
      if (config.experimental) {
        if (!config.grid) throw ConfigError("--experimental requires --grid");
        if (std::gcd(n, spec.k()) < 2) {
          throw ConfigError("experimental sweep requires gcd(n, k) >= 2");
        }
      } else if (std::gcd(n, spec.k()) != 2) {
        throw ConfigError("conjecture requires gcd(n, k) = 2 (or --experimental)");
      }
      break;
    default:
      break;
  }
  if (config.grid && !config.experimental) {
    throw ConfigError("--grid requires --experimental");
  }
}

Json config_to_json(const RunConfig& config) {
  Json out;
  out["command"] = std::string(to_string(config.command));
  out["n"] = config.n;
  out["k"] = config.k;
  out["t"] = config.t ? Json(*config.t) : Json(nullptr);
  out["seed"] = config.seed;
  out["starts"] = config.starts;
  out["tol"] = config.tol;
  out["samples"] = config.samples.value_or(4 * config.n * config.n);
  out["perturb"] = config.perturb ? Json(*config.perturb) : Json(nullptr);
  out["perturb_matrix"] =
      config.perturb_matrix_path ? Json(*config.perturb_matrix_path) : Json(nullptr);
  out["input"] =
      config.input_matrix_path ? Json(*config.input_matrix_path) : Json(nullptr);
  out["experimental"] = config.experimental;
  if (config.grid) {
    out["grid"] = Json{{"lo", config.grid->lo},
                       {"hi", config.grid->hi},
                       {"steps", config.grid->steps}};
  } else {
    out["grid"] = nullptr;
  }
  return out;
}

RunResult run(const RunConfig& config) {
  validate(config);
  const MapSpec spec(config.n, config.k);
  RunResult result;
  Json body;
  switch (config.command) {
    case Command::kApply:
      body = run_apply(config, spec);
      break;
    case Command::kPositivity:
      body = run_positivity(config, spec);
      break;
    case Command::kSpanning:
      body = run_spanning(config, spec, result.exit_code);
      break;
    case Command::kCertify:
      body = run_certify(spec);
      break;
    case Command::kConjecture:
      body = run_conjecture(config, spec);
      break;
  }
  result.report["schema"] = std::string(kSchemaId);
  result.report["version"] = std::string(kVersion);
  result.report["command"] = std::string(to_string(config.command));
  result.report["config"] = config_to_json(config);
  result.report["result"] = std::move(body);
  return result;
}

}  // namespace posmap::cli
