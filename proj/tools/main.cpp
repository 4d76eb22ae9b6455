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
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "posmap/errors.hpp"
#include "posmap/version.hpp"

namespace {

using posmap::cli::Command;
using posmap::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& config, std::string& output) {
  sub->add_option("--n", config.n, "Matrix dimension n (>= 2)")->required();
  sub->add_option("--k", config.k, "Shift count k (0 <= k <= n-1)")->required();
  sub->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  sub->add_option("--output", output, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void add_perturbation(CLI::App* sub, RunConfig& config) {
  sub->add_option("--perturb", config.perturb,
                  "Subtract t v_r v_r^dagger o X along kernel vector v_r (e.g. v1)");
  sub->add_option("--perturb-matrix", config.perturb_matrix_path,
                  "JSON file with a full Hadamard kernel L to subtract");
  sub->add_option("--t", config.t, "Subtraction weight (default n - k)");
}

void add_seesaw(CLI::App* sub, RunConfig& config) {
  sub->add_option("--starts", config.starts, "Multistart count")
      ->capture_default_str();
  sub->add_option("--tol", config.tol, "Negative-certificate threshold")
      ->capture_default_str();
}

int env_threads() {
  if (const char* v = std::getenv("POSMAP_THREADS")) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      return 0;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posmap: generalized Choi maps tau_{n,k}: positivity, spanning "
               "and optimality analysis"};
  app.set_version_flag("--version", std::string(posmap::kVersion));
  app.require_subcommand(1);

  RunConfig config;
  std::string output = "json";
  std::optional<int> threads;
  std::string grid_text;
  app.add_option("--threads", threads,
                 "Worker threads for the see-saw (env POSMAP_THREADS)");

  auto* apply = app.add_subcommand("apply", "Apply tau_{n,k} to a matrix");
  add_common(apply, config, output);
  add_perturbation(apply, config);
  apply->add_option("--input", config.input_matrix_path,
                    "JSON matrix: array of rows of [re, im] pairs");

  auto* positivity = app.add_subcommand("positivity", "See-saw positivity search");
  add_common(positivity, config, output);
  add_perturbation(positivity, config);
  add_seesaw(positivity, config);

  auto* spanning = app.add_subcommand("spanning", "Spanning rank of zero pairs");
  add_common(spanning, config, output);
  spanning->add_option("--samples", config.samples,
                       "Unimodular samples (default 4 n^2)");

  auto* certify = app.add_subcommand("certify", "Circulant optimality certificate");
  add_common(certify, config, output);

  auto* conjecture =
      app.add_subcommand("conjecture", "Probe tau - (n-k) v1 v1^dagger o X for gcd 2");
  add_common(conjecture, config, output);
  add_seesaw(conjecture, config);
  conjecture->add_option("--t", config.t, "Subtraction weight (default n - k)");
  conjecture->add_flag("--experimental", config.experimental,
                       "Sweep kernel weights on a grid (any gcd >= 2)");
  conjecture->add_option("--grid", grid_text, "Weight grid lo:hi:steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "posmap: config error: " << e.what() << '\n';
    return posmap::cli::kExitConfig;
  }

  if (apply->parsed()) config.command = Command::kApply;
  if (positivity->parsed()) config.command = Command::kPositivity;
  if (spanning->parsed()) config.command = Command::kSpanning;
  if (certify->parsed()) config.command = Command::kCertify;
  if (conjecture->parsed()) config.command = Command::kConjecture;
  config.output = output == "text" ? posmap::cli::OutputFormat::kText
                                   : posmap::cli::OutputFormat::kJson;
  config.threads = threads.value_or(env_threads());

  try {
    if (!grid_text.empty()) config.grid = posmap::cli::parse_grid(grid_text);
    const posmap::cli::RunResult result = posmap::cli::run(config);
    if (config.output == posmap::cli::OutputFormat::kText) {
      std::cout << posmap::cli::dump_text(result.report);
    } else {
      std::cout << posmap::cli::dump_json(result.report) << '\n';
    }
    if (result.exit_code == posmap::cli::kExitAnomaly) {
      std::cerr << "posmap: numerical anomaly: admitted pairs outside Sigma_n\n";
    }
    return result.exit_code;
  } catch (const posmap::ConfigError& e) {
    std::cerr << "posmap: config error: " << e.what() << '\n';
    return posmap::cli::kExitConfig;
  } catch (const posmap::InputError& e) {
    std::cerr << "posmap: input error: " << e.what() << '\n';
    return posmap::cli::kExitInput;
  } catch (const posmap::NumericalAnomaly& e) {
    std::cerr << "posmap: numerical anomaly: " << e.what() << '\n';
    return posmap::cli::kExitAnomaly;
  }
}
