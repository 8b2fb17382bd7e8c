// Copyright 2026 The pivcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pivcat/json_io.hpp"

#include <fstream>

#include "pivcat/errors.hpp"

namespace pivcat {

nlohmann::json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw InputError("scalar must be a \"p/q\" string or an integer, got " +
                   j.dump());
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& x : m.entries()) e.push_back(x.to_string());
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(e)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    std::size_t r = j.size();
    std::size_t c = r == 0 ? 0 : j.at(0).size();
    std::vector<Scalar> e;
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != c) {
        throw InputError("matrix rows must be arrays of equal length");
      }
      for (const auto& x : row) e.push_back(scalar_from_json(x));
    }
    return Matrix(r, c, std::move(e));
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries")) {
    throw InputError("matrix needs rows, cols and entries");
  }
  std::size_t r = j.at("rows").get<std::size_t>();
  std::size_t c = j.at("cols").get<std::size_t>();
  const auto& ent = j.at("entries");
  if (!ent.is_array() || ent.size() != r * c) {
    throw InputError("matrix entry count does not match its shape");
  }
  std::vector<Scalar> e;
  e.reserve(r * c);
  for (const auto& x : ent) e.push_back(scalar_from_json(x));
  return Matrix(r, c, std::move(e));
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace pivcat
