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

#include <cstddef>
#include <cstdint>
#include <random>

#include "pivcat/intertwiner.hpp"
#include "pivcat/matrix.hpp"

namespace pivcat {

/**
 * Seeded generator for the randomized suites. Draws are defined in terms
 * of raw mt19937_64 output so results do not depend on the standard
 * library's distribution implementations.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /** Integer in [lo, hi]. */
  long uniform(long lo, long hi);
  bool coin() { return (next() >> 11) & 1; }
  /** Small nonzero-biased integer or fraction with |num|, den <= bound. */
  Scalar scalar(long bound = 3, bool fractions = true);

 private:
  std::mt19937_64 engine_;
};

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                     long bound = 3, bool fractions = false);
Matrix random_invertible(Rng& rng, std::size_t n, long bound = 3,
                         bool fractions = false);

/**
 * Random valid object of dimension dimX over a pair in standard left form.
 * Built from one-dimensional objects (σ in the commutant of 𝔔ᵀ) by direct
 * sums and tensor products, then conjugated by a random invertible map.
 */
Intertwiner random_object(Rng& rng, const PivotalPair& pair, std::size_t dimX);

}  // namespace pivcat
