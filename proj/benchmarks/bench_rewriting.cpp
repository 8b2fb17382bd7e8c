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

#include "pivcat/hopf_verify.hpp"
#include "pivcat/rewriting.hpp"

namespace {

void BM_Complete(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto d = static_cast<std::size_t>(state.range(1));
  pivcat::Presentation pres =
      pivcat::build_presentation(n, pivcat::Matrix::identity(n));
  for (auto _ : state) benchmark::DoNotOptimize(pivcat::complete(pres, d));
}
BENCHMARK(BM_Complete)->Args({1, 4})->Args({2, 3})->Args({2, 4});

void BM_VerifyHopf(benchmark::State& state) {
  auto d = static_cast<std::size_t>(state.range(0));
  pivcat::Presentation pres = pivcat::build_presentation(
      2, pivcat::Matrix::from_rows({{1, 1}, {0, 1}}));
  for (auto _ : state) benchmark::DoNotOptimize(pivcat::verify_hopf(pres, d));
}
BENCHMARK(BM_VerifyHopf)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
