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

#include "pivcat/report.hpp"

#include <algorithm>
#include <cstdio>

namespace pivcat {

void Report::add(std::string name, bool passed, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.passed = passed;
  c.detail = std::move(detail);
  checks_.push_back(std::move(c));
}

bool Report::expect_equal(std::string name, const Matrix& lhs,
                          const Matrix& rhs) {
  Check c;
  c.name = std::move(name);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    c.passed = false;
    c.detail = "shape " + lhs.shape_string() + " vs " + rhs.shape_string();
  } else if (lhs != rhs) {
    c.passed = false;
    c.has_residual = true;
    c.residual = lhs - rhs;
  }
  bool ok = c.passed;
  checks_.push_back(std::move(c));
  return ok;
}

bool Report::expect_identity(std::string name, const Matrix& m) {
  if (!m.is_square()) {
    add(std::move(name), false, "non-square " + m.shape_string());
    return false;
  }
  return expect_equal(std::move(name), m, Matrix::identity(m.rows()));
}

bool Report::expect_zero(std::string name, const Matrix& m) {
  return expect_equal(std::move(name), m, Matrix(m.rows(), m.cols()));
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.passed; }) &&
         std::all_of(sections_.begin(), sections_.end(),
                     [](const Report& r) { return r.passed(); });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::size_t Report::failure_count() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.passed ? 0 : 1;
  for (const auto& s : sections_) n += s.failure_count();
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["title"] = title_;
  j["passed"] = passed();
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (c.has_residual) e["residual"] = residual_json(c.residual);
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  if (!info_.empty()) j["info"] = info_;
  if (!sections_.empty()) {
    nlohmann::json ss = nlohmann::json::array();
    for (const auto& s : sections_) ss.push_back(s.to_json());
    j["sections"] = std::move(ss);
  }
  return j;
}

std::uint64_t matrix_hash(const Matrix& m) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  mix(m.shape_string());
  for (const auto& x : m.entries()) mix(x.to_string());
  return h;
}

nlohmann::json residual_json(const Matrix& m) {
  std::size_t r = std::min<std::size_t>(m.rows(), 8);
  std::size_t c = std::min<std::size_t>(m.cols(), 8);
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  nlohmann::json corner = nlohmann::json::array();
  for (std::size_t i = 0; i < r; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < c; ++k) row.push_back(m(i, k).to_string());
    corner.push_back(std::move(row));
  }
  j["corner"] = std::move(corner);
  j["truncated"] = r < m.rows() || c < m.cols();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(matrix_hash(m)));
  j["hash"] = buf;
  return j;
}

}  // namespace pivcat
