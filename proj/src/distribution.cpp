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

#include "netloc/distribution.hpp"

#include <algorithm>

#include "netloc/errors.hpp"

namespace netloc {

LocationDistribution LocationDistribution::FromWeights(
    std::vector<std::pair<Point, Rational>> weights) {
  std::sort(weights.begin(), weights.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LocationDistribution out;
  Rational total = 0;
  for (auto& [point, weight] : weights) {
    if (weight < 0) throw Error("negative probability");
    total += weight;
    if (weight == 0) continue;
    if (!out.support_.empty() && out.support_.back().point == point) {
      out.support_.back().probability += weight;
    } else {
      out.support_.push_back({std::move(point), std::move(weight)});
    }
  }
  if (total != 1) {
    throw Error("probabilities sum to " + FormatRational(total) + ", not 1");
  }
  return out;
}

LocationDistribution LocationDistribution::PointMass(Point p) {
  LocationDistribution out;
  out.support_.push_back({std::move(p), Rational(1)});
  return out;
}

Rational LocationDistribution::Probability(const Point& p) const {
  auto it = std::lower_bound(
      support_.begin(), support_.end(), p,
      [](const Outcome& o, const Point& q) { return o.point < q; });
  if (it != support_.end() && it->point == p) return it->probability;
  return 0;
}

bool operator==(const LocationDistribution& a, const LocationDistribution& b) {
  if (a.support_.size() != b.support_.size()) return false;
  for (std::size_t k = 0; k < a.support_.size(); ++k) {
    if (a.support_[k].point != b.support_[k].point ||
        a.support_[k].probability != b.support_[k].probability) {
      return false;
    }
  }
  return true;
}

}  // namespace netloc
