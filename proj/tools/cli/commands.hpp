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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cli/json_writer.hpp"
#include "posmap/optimality.hpp"

namespace posmap::cli {

inline constexpr std::string_view kSchemaId = "posmap-report/1";

enum class Command { kApply, kPositivity, kSpanning, kCertify, kConjecture };
enum class OutputFormat { kJson, kText };

std::string_view to_string(Command c);

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitInput = 3,
  kExitAnomaly = 4,
};

struct RunConfig {
  Command command = Command::kApply;
  int n = 0;
  int k = 0;
  std::optional<double> t;
  std::uint64_t seed = 0;
  int starts = 64;
  double tol = 1e-9;
  std::optional<int> samples;  // unset means 4 n^2
  std::optional<std::string> input_matrix_path;
  /// "v<r>": rank-one subtraction along kernel vector v_r of the constraint.
  std::optional<std::string> perturb;
  /// File holding a full Hadamard kernel L.
  std::optional<std::string> perturb_matrix_path;
  bool experimental = false;
  std::optional<WeightGrid> grid;
  OutputFormat output = OutputFormat::kJson;
  /// Worker cap for the see-saw; never part of a report.
  int threads = 0;
};

/// Throws ConfigError with a single-line message.
void validate(const RunConfig& config);

/// Everything that determines a report's content.
Json config_to_json(const RunConfig& config);

struct RunResult {
  Json report;
  int exit_code = kExitOk;
};

/// Validates, dispatches, and builds the posmap-report/1 document. Throws
/// ConfigError, InputError or NumericalAnomaly.
RunResult run(const RunConfig& config);

/// Parses "lo:hi:steps".
WeightGrid parse_grid(const std::string& text);

}  // namespace posmap::cli
