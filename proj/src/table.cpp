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

#include "netloc/table.hpp"

#include <functional>
#include <utility>

#include "netloc/instances.hpp"
#include "netloc/rng.hpp"
#include "netloc/verify.hpp"

namespace netloc {
namespace {

struct Planted {
  MetricGraph graph;
  LocationProfile profile;
  Rational expected;
};

struct Cell {
  Topology topology;
  Objective objective;
  std::string mechanism;
  std::string bound;
  std::function<Rational(std::size_t)> bound_at;
  std::function<std::optional<Planted>(std::size_t)> planted;
};

Rational One(std::size_t) { return 1; }
Rational Two(std::size_t) { return 2; }
Rational ThreeHalves(std::size_t) { return Fraction(3, 2); }
Rational TwoMinusTwoOverN(std::size_t n) {
  return 2 - Fraction(2, static_cast<long>(n));
}
Rational TwoMinusTwoOverNPlusTwo(std::size_t n) {
  return 2 - Fraction(2, static_cast<long>(n + 2));
}

std::optional<Planted> None(std::size_t) { return std::nullopt; }

// One agent at y and n-1 agents at z.
std::optional<Planted> PlantedDictatorTight(std::size_t n) {
  MetricGraph g = MetricGraph::Circle(1);
  std::vector<Rational> xs(n, Fraction(3, 10));
  xs[0] = 0;
  LocationProfile x = ProfileAtCoordinates(g, xs);
  return Planted{std::move(g), std::move(x), TwoMinusTwoOverN(n)};
}

std::optional<Planted> PlantedTwoPointLine(std::size_t) {
  MetricGraph g = MetricGraph::Segment(1);
  const std::vector<Rational> xs{0, 1};
  LocationProfile x = ProfileAtCoordinates(g, xs);
  return Planted{std::move(g), std::move(x), Rational(2)};
}

std::optional<Planted> PlantedLrm(MetricGraph g) {
  const std::vector<Rational> xs{0, Fraction(2, 5)};
  LocationProfile x = ProfileAtCoordinates(g, xs);
  return Planted{std::move(g), std::move(x), Fraction(3, 2)};
}

std::optional<Planted> PlantedTwoLeaf(std::size_t) {
  MetricGraph g = MetricGraph::Star(3, Fraction(1, 2));
  LocationProfile x({Point::AtVertex(1), Point::AtVertex(2)});
  return Planted{std::move(g), std::move(x), Fraction(3, 2)};
}

std::vector<Cell> Cells() {
  return {
      {Topology::kLine, Objective::kSocial, "tree-median", "1", One, None},
      {Topology::kTree, Objective::kSocial, "tree-median", "1", One, None},
      {Topology::kLine, Objective::kSocial, "random-dictator", "2-2/n",
       TwoMinusTwoOverN, None},
      {Topology::kTree, Objective::kSocial, "random-dictator", "2-2/n",
       TwoMinusTwoOverN, None},
      {Topology::kCircle, Objective::kSocial, "random-dictator", "2-2/n",
       TwoMinusTwoOverN, PlantedDictatorTight},
      {Topology::kGeneral, Objective::kSocial, "random-dictator", "2-2/n",
       TwoMinusTwoOverN, None},
      {Topology::kLine, Objective::kMax, "dictator:0", "2", Two,
       PlantedTwoPointLine},
      {Topology::kTree, Objective::kMax, "dictator:0", "2", Two, None},
      {Topology::kCircle, Objective::kMax, "dictator:0", "2", Two, None},
      {Topology::kGeneral, Objective::kMax, "dictator:0", "2", Two, None},
      {Topology::kLine, Objective::kMax, "lrm", "3/2", ThreeHalves,
       [](std::size_t) { return PlantedLrm(MetricGraph::Segment(1)); }},
      {Topology::kCircle, Objective::kMax, "hybrid", "3/2", ThreeHalves,
       [](std::size_t) { return PlantedLrm(MetricGraph::Circle(1)); }},
      {Topology::kTree, Objective::kMax, "tree-center-lottery", "2-2/(n+2)",
       TwoMinusTwoOverNPlusTwo, PlantedTwoLeaf},
  };
}

Ratio ScoredRatio(const MechanismId& id, Objective objective,
                  const MetricGraph& g, const LocationProfile& x) {
  const Rational cost = Cost(objective, g, RunMechanism(id, g, x), x);
  const Optimum opt = objective == Objective::kSocial
                          ? CandidateSocialOptimum(g, x)
                          : CrossingMaxOptimum(g, x);
  return Ratio::Of(cost, opt.value);
}

// True when a is a strictly worse ratio than b.
bool Worse(const Ratio& a, const Ratio& b) {
  if (a.infinite != b.infinite) return a.infinite;
  return !a.infinite && a.value > b.value;
}

}  // namespace

TableResult RunTable1(const TableOptions& options) {
  const std::size_t max_n = std::max<std::size_t>(2, options.max_n);
  TableResult result;
  result.pass = true;
  const std::vector<Cell> cells = Cells();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    const MechanismId id = MechanismId::Parse(cell.mechanism);
    const std::uint64_t row_seed = Rng::Mix(options.seed + c);
    struct Trial {
      Ratio ratio;
      std::size_t n;
      bool violates;
    };
    std::vector<Trial> trials(options.trials);
    ParallelFor(options.trials, [&](std::size_t t) {
      Rng rng(TrialSeed(row_seed, t));
      const MetricGraph g = RandomGraph(cell.topology, rng);
      const std::size_t n = 2 + rng.Below(max_n - 1);
      const LocationProfile x = RandomProfile(g, n, rng);
      Ratio r = ScoredRatio(id, cell.objective, g, x);
      trials[t] = Trial{r, n, !r.AtMost(cell.bound_at(n))};
    });
    TableRow row;
    row.topology = cell.topology;
    row.objective = cell.objective;
    row.mechanism = cell.mechanism;
    row.bound = cell.bound;
    row.trials = options.trials;
    row.worst_ratio = Ratio{false, Rational(1)};
    for (const Trial& t : trials) {
      if (t.violates) ++row.violations;
      if (Worse(t.ratio, row.worst_ratio) || row.worst_n == 0) {
        row.worst_ratio = t.ratio;
        row.worst_n = t.n;
      }
    }
    row.pass = row.violations == 0;
    if (std::optional<Planted> p = cell.planted(max_n)) {
      row.planted_ratio = ScoredRatio(id, cell.objective, p->graph, p->profile);
      row.planted_expected = p->expected;
      row.pass = row.pass && !row.planted_ratio->infinite &&
                 row.planted_ratio->value == p->expected;
    }
    result.pass = result.pass && row.pass;
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace netloc
