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

#include "pivcat/linalg.hpp"
#include "pivcat/random.hpp"

namespace {

void BM_Kron(benchmark::State& state) {
  pivcat::Rng rng(1);
  auto n = static_cast<std::size_t>(state.range(0));
  pivcat::Matrix a = pivcat::random_matrix(rng, n, n, 5, true);
  pivcat::Matrix b = pivcat::random_matrix(rng, n, n, 5, true);
  for (auto _ : state) benchmark::DoNotOptimize(pivcat::kron(a, b));
}
BENCHMARK(BM_Kron)->Arg(4)->Arg(8)->Arg(16);

void BM_Invert(benchmark::State& state) {
  pivcat::Rng rng(2);
  auto n = static_cast<std::size_t>(state.range(0));
  pivcat::Matrix a = pivcat::random_invertible(rng, n, 5, true);
  for (auto _ : state) benchmark::DoNotOptimize(pivcat::invert(a));
}
BENCHMARK(BM_Invert)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Rank(benchmark::State& state) {
  pivcat::Rng rng(3);
  auto n = static_cast<std::size_t>(state.range(0));
  pivcat::Matrix a = pivcat::random_matrix(rng, n, 2 * n, 5, true);
  for (auto _ : state) benchmark::DoNotOptimize(pivcat::rank(a));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace
