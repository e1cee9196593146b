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

// Circle arithmetic in circular coordinates: positions in [0, c), clockwise
// means increasing coordinate. Covers antipodes, arcs with explicit endpoint
// closure, the semicircle test, and nearly-antipodal pairs with their
// critical arcs.

#ifndef NETLOC_CIRCLE_GEOMETRY_HPP_
#define NETLOC_CIRCLE_GEOMETRY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "netloc/metric_graph.hpp"
#include "netloc/rational.hpp"

namespace netloc::circle {

class Circle {
 public:
  explicit Circle(Rational circumference);
  // Throws TopologyMismatchError unless g is a circle.
  static Circle Of(const MetricGraph& g);

  const Rational& circumference() const { return circumference_; }
  Rational Normalize(const Rational& position) const;
  Rational Antipode(const Rational& position) const;
  Rational Distance(const Rational& a, const Rational& b) const;
  // Length travelled going clockwise from a to b, in [0, c).
  Rational Clockwise(const Rational& a, const Rational& b) const;
  // Midpoint of the shorter arc; antipodal inputs need `arc`.
  Rational Center(const Rational& a, const Rational& b,
                  std::optional<ArcSelector> arc = std::nullopt) const;

 private:
  Rational circumference_;
};

// An arc leaving `start` in the given direction for `length`. Endpoint
// closure is explicit: open arcs exclude both ends, closed arcs include them.
struct Arc {
  Rational start;
  Rational length;
  bool clockwise = true;
  bool start_closed = true;
  bool end_closed = true;

  Rational End(const Circle& circle) const;
  bool Contains(const Circle& circle, const Rational& position) const;
};

// The shorter arc between a and b, open (arc) or closed (carc). Throws
// AmbiguousCenterError for antipodal endpoints.
Arc ShortArc(const Circle& circle, const Rational& a, const Rational& b,
             bool closed);

struct SemicircleAnalysis {
  // Largest clockwise gap between circularly adjacent agents.
  Rational longest_gap;
  // Minimal closed arc holding every agent: the complement of the gap,
  // running clockwise from the agent after the gap.
  Arc covering_arc;
  // covering_arc.length <= c/2 (a closed semicircle suffices).
  bool on_semicircle = false;
};

// Among equally long gaps, the covering arc with the smallest clockwise start
// wins. A single (or fully coincident) profile has gap c and covering 0.
SemicircleAnalysis AnalyzeSemicircle(const Circle& circle,
                                     std::span<const Rational> positions);

struct NearlyAntipodalPair {
  std::size_t i = 0;  // i < j, indices into the defining profile
  std::size_t j = 0;
  // Long open arc between the antipodes of x_i and x_j.
  Arc critical_arc;
};

struct NearlyAntipodalStructure {
  std::vector<NearlyAntipodalPair> pairs;
  // Per pair, how many points of the defining profile lie on its critical
  // arc.
  std::vector<std::size_t> membership_x;
  // Same for a second profile, when one was supplied.
  std::optional<std::vector<std::size_t>> membership_y;
};

// Pairs <x_i, x_j> with no profile point strictly inside arc(x_i, x^_j) or
// arc(x_j, x^_i). Computed from the circular order of the profile merged
// with its antipodes: a pair qualifies exactly when x_i and x^_j are
// neighbours in that order. Requires n >= 2, pairwise distinct and pairwise
// non-antipodal points (InvalidProfileError otherwise).
NearlyAntipodalStructure NearlyAntipodalPairs(
    const Circle& circle, std::span<const Rational> x,
    std::optional<std::span<const Rational>> y = std::nullopt);

// Per pair, the number of `points` on its critical arc.
std::vector<std::size_t> CriticalMembershipCounts(
    const Circle& circle, const NearlyAntipodalStructure& structure,
    std::span<const Rational> points);

// Expected distance from breakpoints[0] when the center of each consecutive
// sub-interval [y_k, y_{k+1}] is chosen with probability equal to its length.
// Breakpoints must be nondecreasing.
Rational CenterLotteryCost(std::span<const Rational> breakpoints);

}  // namespace netloc::circle

#endif  // NETLOC_CIRCLE_GEOMETRY_HPP_
