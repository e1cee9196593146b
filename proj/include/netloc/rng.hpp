// Copyright 2026 The netloc Authors
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

// SplitMix64: a counter-based generator whose output is fully specified, so
// seeded runs reproduce bit for bit on every platform. The standard library
// distributions are implementation-defined, hence the hand-rolled helpers.

#ifndef NETLOC_RNG_HPP_
#define NETLOC_RNG_HPP_

#include <cstdint>

#include "netloc/distribution.hpp"
#include "netloc/rational.hpp"

namespace netloc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : counter_(seed) {}

  // Output k is Mix(seed + (k+1) * golden).
  std::uint64_t Next() {
    counter_ += 0x9E3779B97F4A7C15ULL;
    return Mix(counter_);
  }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi);
  // Next() / 2^64, exact.
  Rational UnitRational();

  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t counter_;
};

// Walks the cumulative distribution in support order with one UnitRational
// draw and returns the first outcome whose cumulative mass exceeds it.
Point Sample(const LocationDistribution& P, Rng& rng);

// Seed for trial `trial` of a sweep.
inline std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t trial) {
  return seed ^ trial;
}

}  // namespace netloc

#endif  // NETLOC_RNG_HPP_
