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

#include <stdexcept>
#include <string>

namespace posmap {

/// Invalid map parameters or options (bad n, k, t, flags).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or contract-violating input data (shape mismatch, non-Hermitian
/// input, perturbation that is not an admissible CP subtraction).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical result contradicted a structural invariant the library relies
/// on, e.g. an admitted zero pair that falls outside the unimodular span.
class NumericalAnomaly : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace posmap
