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
#include "cli/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace posmap::cli {

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite value in report");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string scalar(const Json& v) {
  switch (v.type()) {
    case Json::value_t::number_float:
      return format_double(v.get<double>());
    default:
      return v.dump();
  }
}

void write(const Json& v, std::string& out) {
  if (v.is_object()) {
    out += '{';
    bool first = true;
    for (const auto& [key, item] : v.items()) {
      if (!first) out += ',';
      first = false;
      out += Json(key).dump();
      out += ':';
      write(item, out);
    }
    out += '}';
  } else if (v.is_array()) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      write(v[i], out);
    }
    out += ']';
  } else {
    out += scalar(v);
  }
}

void flatten(const Json& v, const std::string& path, std::string& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [key, item] : v.items()) {
      flatten(item, path.empty() ? key : path + "." + key, out);
    }
  } else if (v.is_array() && !v.empty()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      flatten(v[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out += path;
    out += " = ";
    out += v.is_structured() ? v.dump() : scalar(v);
    out += '\n';
  }
}

}  // namespace

std::string dump_json(const Json& value) {
  std::string out;
  write(value, out);
  return out;
}

std::string dump_text(const Json& value) {
  std::string out;
  flatten(value, "", out);
  return out;
}

}  // namespace posmap::cli
