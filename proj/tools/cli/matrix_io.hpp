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

#include <string>

#include "cli/json_writer.hpp"
#include "posmap/linalg.hpp"

namespace posmap::cli {

/// Parses an array of n rows, each an array of n [re, im] pairs. Throws
/// InputError on any shape or type problem.
CMatrix matrix_from_json(const Json& doc);
CMatrix read_matrix_file(const std::string& path);

Json matrix_to_json(const CMatrix& m);
Json vector_to_json(const CVector& v);
Json complex_to_json(Complex z);

}  // namespace posmap::cli
