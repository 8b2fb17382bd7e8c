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

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "pivcat/matrix.hpp"

namespace pivcat {

nlohmann::json scalar_to_json(const Scalar& s);
/** Accepts a "p/q" string or a JSON integer. */
Scalar scalar_from_json(const nlohmann::json& j);

/** {"rows":r,"cols":c,"entries":["p/q",...]} in row-major order. */
nlohmann::json matrix_to_json(const Matrix& m);
/** Also accepts a nested array of rows. */
Matrix matrix_from_json(const nlohmann::json& j);

/** Reads and parses a JSON file; throws InputError. */
nlohmann::json read_json_file(const std::string& path);

}  // namespace pivcat
