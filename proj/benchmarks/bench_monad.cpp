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


#include <benchmark/benchmark.h>

#include "pivcat/truncated_monad.hpp"

namespace {

void BM_Truncate(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto d = static_cast<std::size_t>(state.range(1));
  pivcat::PivotalPair pp = pivcat::from_matrix(n, pivcat::Matrix::identity(n));
  for (auto _ : state) benchmark::DoNotOptimize(pivcat::truncate(pp, 1, d));
}
BENCHMARK(BM_Truncate)
    ->Args({1, 4})
    ->Args({1, 8})
    ->Args({2, 2})
    ->Args({2, 3})
    ->Unit(benchmark::kMillisecond);

}  // namespace
