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

#include "netloc/rng.hpp"

#include "netloc/errors.hpp"

namespace netloc {

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw InvalidParameterError("empty range");
  // Largest multiple of bound that fits, minus one.
  const std::uint64_t limit = -bound % bound;
  for (;;) {
    const std::uint64_t r = Next();
    if (r >= limit) return r % bound;
  }
}

std::int64_t Rng::Between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidParameterError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(Next());
  return lo + static_cast<std::int64_t>(Below(span));
}

Rational Rng::UnitRational() {
  const std::uint64_t r = Next();
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
  Rational out(num, mpz_class(1) << 64);
  out.canonicalize();
  return out;
}

Point Sample(const LocationDistribution& P, Rng& rng) {
  const Rational u = rng.UnitRational();
  Rational cumulative = 0;
  for (const Outcome& o : P) {
    cumulative += o.probability;
    if (u < cumulative) return o.point;
  }
  return P.support().back().point;
}

}  // namespace netloc
