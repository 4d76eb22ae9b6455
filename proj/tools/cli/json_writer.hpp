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

#include <nlohmann/json.hpp>

namespace posmap::cli {

using Json = nlohmann::ordered_json;

/// Compact JSON with every floating-point value written with 17 significant
/// digits (%.17g), so values round-trip exactly. Non-finite numbers throw.
std::string dump_json(const Json& value);

/// One "path = value" line per leaf, values formatted as in dump_json.
std::string dump_text(const Json& value);

}  // namespace posmap::cli
