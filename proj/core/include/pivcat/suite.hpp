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
#include <functional>
#include <string>
#include <vector>

#include "pivcat/report.hpp"

namespace pivcat {

/** One named battery of checks driven by its own seeded generator. */
struct SuiteSection {
  std::string name;
  std::function<Report(std::uint64_t seed)> run;
};

/** The full battery in report order. */
std::vector<SuiteSection> suite_sections();

/** Per-section seed derived from the suite seed and the section index. */
std::uint64_t section_seed(std::uint64_t seed, std::size_t index);

/**
 * Runs every section (concurrently when parallel is set) and assembles
 * the sections in fixed order, so a fixed seed yields identical output.
 */
Report run_suite(std::uint64_t seed, bool parallel = true);

}  // namespace pivcat
