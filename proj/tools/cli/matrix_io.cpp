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
#include "cli/matrix_io.hpp"

#include <fstream>

#include "posmap/errors.hpp"

namespace posmap::cli {

namespace {

Complex parse_entry(const Json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
      !e[1].is_number()) {
    throw InputError("matrix entries must be [re, im] number pairs");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace

CMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_array() || doc.empty()) {
    throw InputError("matrix must be a non-empty array of rows");
  }
  const auto n = static_cast<Eigen::Index>(doc.size());
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = doc[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InputError("matrix must be square");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = parse_entry(row[static_cast<std::size_t>(j)]);
    }
  }
  if (!m.allFinite()) throw InputError("matrix entries must be finite");
  return m;
}

CMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("matrix file is not valid JSON: " + path);
  }
  return matrix_from_json(doc);
}

// + 0.0 folds negative zero into zero so reports do not carry "-0".
Json complex_to_json(Complex z) {
  return Json::array({z.real() + 0.0, z.imag() + 0.0});
}

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Json matrix_to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace posmap::cli
