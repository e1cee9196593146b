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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "netloc/costs.hpp"
#include "netloc/instances.hpp"
#include "netloc/mechanisms.hpp"
#include "oracles.hpp"

namespace netloc {
namespace {

using oracle::Q;

LocationProfile At(const MetricGraph& g, std::vector<Rational> coords) {
  return ProfileAtCoordinates(g, coords);
}

TEST_CASE("line optima") {
  const MetricGraph line = MetricGraph::Segment(1);
  const LocationProfile x = At(line, {0, Q(3, 10), 1});
  const Optimum sc = OptimalSocial(line, x);
  CHECK(line.Coordinate(sc.point) == Q(3, 10));
  CHECK(sc.value == 1);
  CHECK_FALSE(sc.approximate);
  const Optimum mc = OptimalMax(line, x);
  CHECK(line.Coordinate(mc.point) == Q(1, 2));
  CHECK(mc.value == Q(1, 2));
}

TEST_CASE("circle optima") {
  const MetricGraph c = MetricGraph::Circle(1);
  const LocationProfile a = At(c, {0, 0, Q(3, 10)});
  CHECK(c.Coordinate(OptimalSocial(c, a).point) == 0);
  CHECK(OptimalSocial(c, a).value == Q(3, 10));
  CHECK(c.Coordinate(OptimalMax(c, a).point) == Q(3, 20));
  CHECK(OptimalMax(c, a).value == Q(3, 20));

  const LocationProfile b = At(c, {0, Q(3, 10), Q(11, 20)});
  CHECK(c.Coordinate(OptimalMax(c, b).point) == Q(11, 40));
  CHECK(OptimalMax(c, b).value == Q(11, 40));

  const LocationProfile thirds = At(c, {0, Q(1, 3), Q(2, 3)});
  CHECK(OptimalMax(c, thirds).value == Q(1, 3));
  CHECK(OptimalSocial(c, thirds).value == Q(2, 3));
}

TEST_CASE("costs of a distribution") {
  const MetricGraph line = MetricGraph::Segment(1);
  const LocationProfile x = At(line, {0, 1});
  const LocationDistribution P = LocationDistribution::FromWeights(
      {{line.AtCoordinate(0), Q(1, 2)}, {line.AtCoordinate(1), Q(1, 2)}});
  CHECK(ExpectedCost(line, P, x[0]) == Q(1, 2));
  CHECK(SocialCost(line, P, x) == 1);
  // Expected maximum, not the maximum expectation.
  CHECK(MaxCost(line, P, x) == 1);
  CHECK(Cost(Objective::kMax, line, P, x) == 1);
  const CostReport r = EvaluateCosts(line, P, x);
  CHECK(r.per_agent == std::vector<Rational>{Q(1, 2), Q(1, 2)});
  CHECK(r.opt_social.value == 1);
  CHECK(r.opt_max.value == Q(1, 2));
  CHECK(r.sc_ratio.value == 1);
  CHECK(r.mc_ratio.value == 2);
}

TEST_CASE("ratio edge cases") {
  CHECK(Ratio::Of(0, 0).value == 1);
  CHECK_FALSE(Ratio::Of(0, 0).infinite);
  CHECK(Ratio::Of(1, 0).infinite);
  CHECK(Ratio::Of(1, 0).ToString() == "inf");
  CHECK_FALSE(Ratio::Of(1, 0).AtMost(100));
  CHECK(Ratio::Of(3, 2).value == Q(3, 2));
  CHECK(Ratio::Of(3, 2).ToString() == "3/2");
  CHECK(Ratio::Of(3, 2).AtMost(Q(3, 2)));
}

// Integer lengths and agents on thirds put every max-cost breakpoint on a
// sixth, so the brute force over that grid is exact.
constexpr InstanceShape kCoarse{6, 1, 3};

TEST_CASE("exact solvers match brute force on every topology") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed + 31);
    const MetricGraph g =
        RandomGraph(static_cast<Topology>(seed % 4), rng, kCoarse);
    const LocationProfile x = RandomProfile(g, 1 + rng.Below(5), rng, kCoarse);
    const std::vector<Point> grid = g.GridPoints(Q(1, 6));
    const Rational sc = oracle::BruteObjective(g, x, grid, true);
    const Rational mc = oracle::BruteObjective(g, x, grid, false);
    CHECK(CandidateSocialOptimum(g, x).value == sc);
    CHECK(OptimalSocial(g, x).value == sc);
    CHECK(CrossingMaxOptimum(g, x).value == mc);
    CHECK(OptimalMax(g, x).value == mc);
    CHECK(SocialCost(g, OptimalSocial(g, x).point, x) == sc);
    CHECK(MaxCost(g, OptimalMax(g, x).point, x) == mc);
  }
}

TEST_CASE("grid optimum is an upper bound within its resolution") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed + 900);
    const MetricGraph g = RandomGraph(static_cast<Topology>(seed % 4), rng);
    const LocationProfile x = RandomProfile(g, 1 + rng.Below(6), rng);
    const Rational res = Q(1, 7);
    const Optimum gs = GridOptimum(Objective::kSocial, g, x, res);
    const Optimum gm = GridOptimum(Objective::kMax, g, x, res);
    CHECK(gs.approximate);
    const Rational n(static_cast<unsigned long>(x.size()));
    CHECK(gs.value >= OptimalSocial(g, x).value);
    CHECK(gs.value <= OptimalSocial(g, x).value + n * res);
    CHECK(gm.value >= OptimalMax(g, x).value);
    CHECK(gm.value <= OptimalMax(g, x).value + res);
  }
}

TEST_CASE("cost identities hold for every mechanism output") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed + 4242);
    const MetricGraph g = RandomGraph(static_cast<Topology>(seed % 4), rng);
    const LocationProfile x = RandomProfile(g, 1 + rng.Below(6), rng);
    const LocationDistribution P = RandomDictator(g, x);
    Rational sum = 0;
    Rational worst = 0;
    for (const Point& p : x) {
      const Rational e = ExpectedCost(g, P, p);
      sum += e;
      worst = std::max(worst, e);
    }
    CHECK(SocialCost(g, P, x) == sum);
    CHECK(MaxCost(g, P, x) >= worst);
    CHECK(SocialCost(g, P, x) >= OptimalSocial(g, x).value);
    CHECK(MaxCost(g, P, x) >= OptimalMax(g, x).value);
    Rational by_outcome = 0;
    for (const Outcome& o : P)
      by_outcome += o.probability * MaxCost(g, o.point, x);
    CHECK(MaxCost(g, P, x) == by_outcome);
  }
}

TEST_CASE("optima are invariant under agent order") {
  Rng rng(808);
  for (int t = 0; t < 100; ++t) {
    const MetricGraph g = RandomGraph(static_cast<Topology>(t % 4), rng);
    const LocationProfile x = RandomProfile(g, 2 + rng.Below(5), rng);
    std::vector<Point> pts(x.begin(), x.end());
    std::reverse(pts.begin(), pts.end());
    const LocationProfile y(pts);
    CHECK(OptimalSocial(g, x).value == OptimalSocial(g, y).value);
    CHECK(OptimalMax(g, x).value == OptimalMax(g, y).value);
  }
}

}  // namespace
}  // namespace netloc
