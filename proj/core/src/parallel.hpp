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

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace pivcat::detail {

// Runs body(i) for i in [0, n) on a bounded number of threads. Each index
// writes only its own output slot, so callers stay deterministic.
template <class Body>
void parallel_for(std::size_t n, Body body) {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t k = 0; k < workers; ++k) {
    jobs.push_back(std::async(std::launch::async, [&, k] {
      for (std::size_t i = k; i < n; i += workers) body(i);
    }));
  }
  for (auto& j : jobs) j.get();
}

}  // namespace pivcat::detail
