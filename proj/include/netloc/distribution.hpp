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

#ifndef NETLOC_DISTRIBUTION_HPP_
#define NETLOC_DISTRIBUTION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "netloc/metric_graph.hpp"
#include "netloc/rational.hpp"

namespace netloc {

struct Outcome {
  Point point;
  Rational probability;
};

// Finite-support distribution over facility locations. Support points are
// distinct, sorted in canonical point order, with positive probabilities
// summing to exactly one.
class LocationDistribution {
 public:
  // Merges repeated points and drops zero weights. Throws Error if a weight
  // is negative or the total is not exactly one.
  static LocationDistribution FromWeights(
      std::vector<std::pair<Point, Rational>> weights);
  static LocationDistribution PointMass(Point p);

  const std::vector<Outcome>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  auto begin() const { return support_.begin(); }
  auto end() const { return support_.end(); }
  // Zero when p is not in the support.
  Rational Probability(const Point& p) const;

  friend bool operator==(const LocationDistribution& a,
                         const LocationDistribution& b);

 private:
  std::vector<Outcome> support_;
};

}  // namespace netloc

#endif  // NETLOC_DISTRIBUTION_HPP_
