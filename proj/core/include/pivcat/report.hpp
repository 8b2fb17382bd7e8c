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

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pivcat/matrix.hpp"

namespace pivcat {

/** One named pass/fail entry, optionally carrying the failing residual. */
struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
  bool has_residual = false;
  Matrix residual;
};

/**
 * Ordered collection of checks. Failures are data, not exceptions, so a
 * caller can show exactly which identity broke.
 */
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<Report>& sections() const { return sections_; }
  nlohmann::json& info() { return info_; }
  const nlohmann::json& info() const { return info_; }

  void add(std::string name, bool passed, std::string detail = {});
  /** Records lhs == rhs; on failure the residual lhs - rhs is kept. */
  bool expect_equal(std::string name, const Matrix& lhs, const Matrix& rhs);
  bool expect_identity(std::string name, const Matrix& m);
  bool expect_zero(std::string name, const Matrix& m);
  void add_section(Report r) { sections_.push_back(std::move(r)); }

  bool passed() const;
  const Check* find(const std::string& name) const;
  std::size_t failure_count() const;
  nlohmann::json to_json() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
  std::vector<Report> sections_;
  nlohmann::json info_ = nlohmann::json::object();
};

/** 64-bit FNV-1a over the canonical text form of all entries. */
std::uint64_t matrix_hash(const Matrix& m);

/** Residual summary: leading 8x8 corner, full shape and hash. */
nlohmann::json residual_json(const Matrix& m);

}  // namespace pivcat
