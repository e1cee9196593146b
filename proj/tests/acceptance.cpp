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

// Acceptance harness: one line per criterion, "[PASS]" or "[FAIL]", with
// the elapsed time against a fixed limit. Exits nonzero if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netloc/circle_geometry.hpp"
#include "netloc/costs.hpp"
#include "netloc/errors.hpp"
#include "netloc/instances.hpp"
#include "netloc/lowerbound.hpp"
#include "netloc/mechanisms.hpp"
#include "netloc/rng.hpp"
#include "netloc/table.hpp"
#include "netloc/verify.hpp"
#include "oracles.hpp"

namespace netloc {
namespace {

using oracle::Q;

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Verdict()> run;
};

Rational Ul(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

std::vector<Rational> Coordinates(const MetricGraph& g,
                                  const LocationProfile& x) {
  std::vector<Rational> out;
  for (const Point& p : x) out.push_back(g.Coordinate(p));
  return out;
}

bool OnSemicircle(const MetricGraph& g, const LocationProfile& x) {
  return circle::AnalyzeSemicircle(circle::Circle::Of(g), Coordinates(g, x))
      .on_semicircle;
}

// 1. The planted instance: one agent at y, n-1 at z.
Verdict DictatorTightness() {
  const MechanismId rd = MechanismId::Parse("random-dictator");
  struct Shape {
    MetricGraph g;
    Point y, z;
  };
  const MetricGraph line = MetricGraph::Segment(1);
  const MetricGraph ring = MetricGraph::Circle(1);
  const MetricGraph star = MetricGraph::Star(3, Q(1, 2));
  const std::vector<Shape> shapes{
      {line, line.AtCoordinate(0), line.AtCoordinate(1)},
      {ring, ring.AtCoordinate(0), ring.AtCoordinate(Q(3, 10))},
      {star, Point::AtVertex(1), Point::AtVertex(2)}};
  Verdict v;
  int checked = 0;
  for (const Shape& s : shapes) {
    for (long n = 2; n <= 10; ++n) {
      std::vector<Point> pts(static_cast<std::size_t>(n), s.z);
      pts[0] = s.y;
      const LocationProfile x(pts);
      const Ratio r = Ratio::Of(SocialCost(s.g, RunMechanism(rd, s.g, x), x),
                                CandidateSocialOptimum(s.g, x).value);
      ++checked;
      if (r.infinite || r.value != 2 - Q(2, n)) {
        v.pass = false;
        v.detail = "n=" + std::to_string(n) + " ratio " + r.ToString();
        return v;
      }
    }
  }
  v.detail = std::to_string(checked) + " instances, ratio exactly 2-2/n";
  return v;
}

// 2. Random dictator stays within 2-2/n everywhere.
Verdict DictatorUpperBound() {
  const MechanismId rd = MechanismId::Parse("random-dictator");
  Verdict v;
  std::ostringstream detail;
  for (Topology t : {Topology::kLine, Topology::kTree, Topology::kCircle,
                     Topology::kGeneral}) {
    std::size_t violations = 0;
    Ratio worst{false, Rational(1)};
    for (std::uint64_t i = 0; i < 10000; ++i) {
      Rng rng(TrialSeed(Rng::Mix(200 + static_cast<int>(t)), i));
      const MetricGraph g = RandomGraph(t, rng);
      const std::size_t n = 2 + rng.Below(7);
      const LocationProfile x = RandomProfile(g, n, rng);
      const Ratio r = Ratio::Of(SocialCost(g, RunMechanism(rd, g, x), x),
                                CandidateSocialOptimum(g, x).value);
      if (!r.AtMost(2 - Q(2, static_cast<long>(n)))) ++violations;
      if (r.infinite || (!worst.infinite && r.value > worst.value)) worst = r;
    }
    v.pass = v.pass && violations == 0;
    detail << TopologyName(t) << " worst " << worst.ToString() << " ("
           << violations << " over); ";
  }
  v.detail = detail.str();
  return v;
}

// 3. The circle witness on grid and random profiles.
Verdict CircleWitness() {
  constexpr long kGrid = 12;
  std::array<Rational, kGrid> pos;
  for (long k = 0; k < kGrid; ++k) pos[k] = Q(k, kGrid);
  auto grid_distance = [](long a, long b) {
    const long d = a > b ? a - b : b - a;
    return std::min(d, kGrid - d);
  };
  std::uint64_t cases = 0, failures = 0;
  std::vector<long> xi, yi;
  std::vector<Rational> x, y;
  auto check_grid = [&]() {
    x.clear();
    y.clear();
    for (long a : xi) x.push_back(pos[a]);
    for (long b : yi) y.push_back(pos[b]);
    ++cases;
    try {
      const GspWitness w = GspCircleWitness(1, x, y);
      long lhs = 0, rhs = 0;
      for (std::size_t k = 0; k < xi.size(); ++k) {
        lhs += grid_distance(xi[w.witness_index], xi[k]);
        rhs += grid_distance(xi[w.witness_index], yi[k]);
      }
      if (lhs > rhs || w.lhs != Q(lhs, kGrid) || w.rhs != Q(rhs, kGrid))
        ++failures;
    } catch (const NoWitnessError&) {
      ++failures;
    }
  };
  // Odometer over the free coordinates.
  auto sweep = [&](std::size_t n, bool reduced) {
    xi.assign(n, 0);
    yi.assign(n, 0);
    std::vector<long*> digits;
    for (std::size_t k = reduced ? 1 : 0; k < n; ++k) digits.push_back(&xi[k]);
    for (std::size_t k = 0; k < n; ++k) digits.push_back(&yi[k]);
    for (;;) {
      if (!reduced || std::is_sorted(xi.begin(), xi.end())) check_grid();
      std::size_t d = 0;
      while (d < digits.size() && ++*digits[d] == kGrid) *digits[d++] = 0;
      if (d == digits.size()) break;
    }
  };
  sweep(2, false);
  sweep(3, false);
  // Witnesses are invariant under rotation and under permuting agents
  // jointly in x and y, so x sorted with x_0 = 0 covers every n = 4 pair.
  sweep(4, true);
  const std::uint64_t grid_cases = cases;

  Rng rng(303);
  for (int t = 0; t < 100000; ++t) {
    const Rational c = Q(rng.Between(1, 6), rng.Between(1, 3));
    const std::size_t n = 2 + rng.Below(7);
    x.clear();
    y.clear();
    for (std::size_t k = 0; k < 2 * n; ++k) {
      const long den = rng.Between(1, 1000);
      const Rational p = c * Q(rng.Between(0, den - 1), den);
      (k < n ? x : y).push_back(p);
    }
    ++cases;
    try {
      const GspWitness w = GspCircleWitness(c, x, y);
      Rational lhs = 0, rhs = 0;
      for (std::size_t k = 0; k < n; ++k) {
        lhs += oracle::CircleDistance(c, x[w.witness_index], x[k]);
        rhs += oracle::CircleDistance(c, x[w.witness_index], y[k]);
      }
      if (lhs > rhs || w.lhs != lhs || w.rhs != rhs) ++failures;
    } catch (const NoWitnessError&) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(grid_cases) + " grid + " +
                             std::to_string(cases - grid_cases) +
                             " random pairs, " + std::to_string(failures) +
                             " failures"};
}

// 4. RC never costs an agent more than a quarter circumference.
Verdict QuarterBound() {
  Rng rng(404);
  std::size_t tested = 0, over = 0;
  while (tested < 10000) {
    const MetricGraph g = RandomCircle(rng);
    const LocationProfile x = RandomProfile(g, 3 + rng.Below(6), rng);
    if (OnSemicircle(g, x)) continue;
    ++tested;
    const LocationDistribution P = Rc(g, x);
    for (const Point& p : x) {
      if (ExpectedCost(g, P, p) * 4 > g.chain_length()) ++over;
    }
  }
  return {over == 0, std::to_string(tested) + " profiles, " +
                         std::to_string(over) + " agents above c/4"};
}

// 5. Center lottery over a partition of [0, 1/2].
Verdict IntervalIdentity() {
  Rng rng(505);
  std::size_t bad = 0;
  for (int t = 0; t < 10000; ++t) {
    const std::size_t m = 1 + rng.Below(20);
    const long den = rng.Between(1, 500);
    std::vector<Rational> y{0};
    for (std::size_t i = 1; i < m; ++i)
      y.push_back(Q(rng.Between(0, den), 2 * den));
    y.push_back(Q(1, 2));
    std::sort(y.begin(), y.end());
    Rational direct = 0, before = 0;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
      const Rational d = y[i + 1] - y[i];
      direct += d * (before + d / 2);
      before += d;
    }
    if (direct != Q(1, 8) || circle::CenterLotteryCost(y) != Q(1, 8)) ++bad;
  }
  return {bad == 0, "10000 partitions, " + std::to_string(bad) + " mismatches"};
}

// 6. The partition inequality on [0, 1] and RC's response to an added agent.
Verdict PartitionAndAntiWlog() {
  Rng rng(606);
  const MetricGraph line = MetricGraph::Segment(1);
  const Point half = line.AtCoordinate(Q(1, 2));
  std::size_t partition_bad = 0;
  for (int t = 0; t < 10000; ++t) {
    const long den = rng.Between(1, 1000);
    const Rational xr = Q(rng.Between(0, den), den);
    const Rational yr = Q(rng.Between(0, den), den);
    const Point x = line.AtCoordinate(xr);
    const Point left =
        line.PathCenter(line.AtCoordinate(0), line.AtCoordinate(yr));
    const Point right =
        line.PathCenter(line.AtCoordinate(yr), line.AtCoordinate(1));
    const Rational lhs = line.Distance(x, half);
    const Rational rhs =
        yr * line.Distance(x, left) + (1 - yr) * line.Distance(x, right);
    if (lhs > rhs) ++partition_bad;
  }
  std::size_t anti_bad = 0, tested = 0;
  while (tested < 10000) {
    const MetricGraph g = RandomCircle(rng);
    const LocationProfile x = RandomProfile(g, 3 + rng.Below(6), rng);
    if (OnSemicircle(g, x)) continue;
    ++tested;
    const Point y = RandomPoint(g, rng);
    std::vector<Point> more(x.begin(), x.end());
    more.push_back(y);
    if (ExpectedCost(g, Rc(g, x), y) <
        ExpectedCost(g, Rc(g, LocationProfile(more)), y)) {
      ++anti_bad;
    }
  }
  return {partition_bad == 0 && anti_bad == 0,
          "partition " + std::to_string(partition_bad) + " and added-agent " +
              std::to_string(anti_bad) + " violations over 10000 cases each"};
}

// 7. Hybrid max-cost ratio.
Verdict HybridRatio() {
  Rng rng(707);
  std::size_t over = 0, rc_branch = 0, rc_over = 0;
  Rational worst = 0;
  for (int t = 0; t < 10000; ++t) {
    const MetricGraph g = RandomCircle(rng);
    const LocationProfile x = RandomProfile(g, 1 + rng.Below(8), rng);
    const Ratio r = Ratio::Of(MaxCost(g, HybridCircle(g, x), x),
                              CrossingMaxOptimum(g, x).value);
    if (!r.AtMost(Q(3, 2))) ++over;
    if (!r.infinite) worst = std::max(worst, r.value);
    const circle::SemicircleAnalysis s =
        circle::AnalyzeSemicircle(circle::Circle::Of(g), Coordinates(g, x));
    if (!s.on_semicircle) {
      ++rc_branch;
      if (!r.AtMost(1 + s.longest_gap / g.chain_length())) ++rc_over;
    }
  }
  const MetricGraph ring = MetricGraph::Circle(1);
  const std::vector<Rational> tight_pos{0, Q(2, 5)};
  const LocationProfile tight = ProfileAtCoordinates(ring, tight_pos);
  const Ratio tr = Ratio::Of(MaxCost(ring, HybridCircle(ring, tight), tight),
                             CrossingMaxOptimum(ring, tight).value);
  const bool tight_ok = !tr.infinite && tr.value == Q(3, 2);
  return {over == 0 && rc_over == 0 && tight_ok,
          "worst " + Ratio{false, worst}.ToString() + ", " +
              std::to_string(over) + " above 3/2, " + std::to_string(rc_over) +
              "/" + std::to_string(rc_branch) +
              " RC-branch above 1+alpha/c, tight instance " + tr.ToString()};
}

// 8. Single-agent deviations against the hybrid, by deviation class.
Verdict HybridAudit() {
  const MechanismId hybrid = MechanismId::Parse("hybrid");
  Rng rng(808);
  std::size_t findings = 0, incomplete = 0;
  std::uint64_t deviations = 0;
  // [truthful on semicircle][report on semicircle]
  std::array<std::array<std::uint64_t, 2>, 2> classes{};
  for (int t = 0; t < 1000; ++t) {
    const MetricGraph g = RandomCircle(rng);
    const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    const LocationProfile x = RandomProfile(g, n, rng);
    const CandidateSet s = DeviationCandidates(g, x, g.chain_length() / 1000);
    const DeviationReport r = CheckSp(hybrid, g, x, s);
    deviations += r.candidates_checked;
    if (r.profitable) ++findings;
    if (!r.complete) ++incomplete;
    const circle::Circle circ = circle::Circle::Of(g);
    std::vector<Rational> pos = Coordinates(g, x);
    const bool before = circle::AnalyzeSemicircle(circ, pos).on_semicircle;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational truth = pos[i];
      for (const Point& p : s.points) {
        pos[i] = g.Coordinate(p);
        ++classes[before][circle::AnalyzeSemicircle(circ, pos).on_semicircle];
      }
      pos[i] = truth;
    }
  }
  const bool covered =
      classes[0][0] && classes[0][1] && classes[1][0] && classes[1][1];
  std::ostringstream d;
  d << deviations << " deviations on 1000 instances, " << findings
    << " profitable; classes semi->semi " << classes[1][1] << ", semi->not "
    << classes[1][0] << ", not->semi " << classes[0][1] << ", not->not "
    << classes[0][0];
  return {findings == 0 && incomplete == 0 && covered, d.str()};
}

// 9. Tree median against the grid oracle and the exact candidate solver.
Verdict TreeMedianOptimal() {
  Rng rng(909);
  std::size_t bad_grid = 0, bad_exact = 0;
  for (int t = 0; t < 1000; ++t) {
    const MetricGraph g = RandomTree(rng);
    const std::size_t n = 1 + rng.Below(10);
    const LocationProfile x = RandomProfile(g, n, rng);
    const Rational sc = SocialCost(g, TreeMedian(g, x), x);
    const Rational res = g.longest_edge() / 1000;
    const Rational grid = GridOptimum(Objective::kSocial, g, x, res).value;
    // One grid step moves every agent's distance by at most res.
    if (sc > grid || grid - sc > Ul(n) * res) ++bad_grid;
    if (sc != CandidateSocialOptimum(g, x).value) ++bad_exact;
  }
  return {bad_grid == 0 && bad_exact == 0,
          "1000 trees, " + std::to_string(bad_grid) + " grid and " +
              std::to_string(bad_exact) + " exact mismatches"};
}

// 10. Center lottery ratio.
Verdict LotteryRatio() {
  const MechanismId lottery = MechanismId::Parse("tree-center-lottery");
  Rng rng(1010);
  std::size_t over = 0;
  for (int t = 0; t < 1000; ++t) {
    const MetricGraph g = RandomTree(rng);
    const std::size_t n = 1 + rng.Below(8);
    const LocationProfile x = RandomProfile(g, n, rng);
    const Ratio r = Ratio::Of(MaxCost(g, RunMechanism(lottery, g, x), x),
                              CrossingMaxOptimum(g, x).value);
    if (!r.AtMost(2 - Q(2, static_cast<long>(n + 2)))) ++over;
  }
  const MetricGraph star = MetricGraph::Star(3, Q(1, 2));
  const LocationProfile leaves({Point::AtVertex(1), Point::AtVertex(2)});
  const Rational cost =
      MaxCost(star, RunMechanism(lottery, star, leaves), leaves);
  const Rational opt = CrossingMaxOptimum(star, leaves).value;
  const bool planted = cost == Q(3, 4) && opt == Q(1, 2);
  return {over == 0 && planted, std::to_string(over) +
                                    " of 1000 above 2-2/(n+2); two leaves " +
                                    cost.get_str() + " vs " + opt.get_str()};
}

// 11. The star coalition, and random circle coalitions.
Verdict Coalitions() {
  const MechanismId rd = MechanismId::Parse("random-dictator");
  const MetricGraph star = MetricGraph::Star(3, 1);
  const LocationProfile leaves(
      {Point::AtVertex(1), Point::AtVertex(2), Point::AtVertex(3)});
  const DeviationReport r = CheckGsp(
      rd, star, leaves, 3, DeviationCandidates(star, leaves, std::nullopt));
  const LocationDistribution truthful = RandomDictator(star, leaves);
  // Everyone reporting the hub makes the hub certain.
  const LocationProfile at_hub(std::vector<Point>(3, Point::AtVertex(0)));
  const LocationDistribution hub = RandomDictator(star, at_hub);
  bool star_ok = r.profitable && r.best_deviation->coalition.size() == 3;
  for (const Point& p : leaves) {
    star_ok = star_ok && ExpectedCost(star, truthful, p) == Q(4, 3) &&
              ExpectedCost(star, hub, p) == 1;
  }

  Rng rng(1111);
  const Mechanism f = AsMechanism(rd);
  std::size_t found = 0;
  for (int t = 0; t < 1000; ++t) {
    const MetricGraph g = RandomCircle(rng);
    const std::size_t n = 2 + rng.Below(5);
    const LocationProfile x = RandomProfile(g, n, rng);
    std::vector<std::size_t> members(n);
    for (std::size_t i = 0; i < n; ++i) members[i] = i;
    for (std::size_t i = n; i > 1; --i)
      std::swap(members[i - 1], members[rng.Below(i)]);
    members.resize(2 + rng.Below(std::min<std::size_t>(n, 3) - 1));
    std::sort(members.begin(), members.end());
    std::set<Point> pts(x.begin(), x.end());
    for (int k = 0; k < 8; ++k) pts.insert(RandomPoint(g, rng));
    const CandidateSet cands{{pts.begin(), pts.end()},
                             {CandidateSource::kStructural}};
    if (CheckCoalition(f, g, x, members, cands).profitable) ++found;
  }
  return {star_ok && found == 0,
          std::string("star ") +
              (star_ok ? "flagged (4/3 -> 1 each)" : "NOT flagged") + "; " +
              std::to_string(found) + " of 1000 circle coalitions profitable"};
}

// 12. Lower-bound tree, closed forms, and the chain trace.
Verdict LowerBound() {
  Verdict v;
  std::ostringstream d;
  const LowerBoundInstance base = BuildTree(3, 2);
  v.pass = base.graph.num_vertices() == 26 && FormulaBound(3, 2) == Q(5, 12);
  d << "tree(3,2) " << base.graph.num_vertices() << " vertices, bound "
    << FormulaBound(3, 2).get_str();
  const MechanismId lottery = MechanismId::Parse("tree-center-lottery");
  for (auto [m, k] :
       std::vector<std::pair<long, long>>{{3, 2}, {4, 3}, {8, 3}}) {
    for (long level = 0; level <= k; ++level) {
      const long p = 2L << level;
      const Rational closed = Q((p - 1) * m - 2 * (p - level - 2), 2 * m);
      const std::size_t um = static_cast<std::size_t>(m);
      const std::size_t ud = static_cast<std::size_t>(level);
      v.pass = v.pass && LevelBound(um, ud) == closed;
      const Rational slack =
          AveragingStep(um, ud, LevelBound(um, ud)) - LevelBound(um, ud + 1);
      v.pass = v.pass && slack == Q(2 * (p - level - 2), m * m) && slack >= 0;
    }
    v.pass = v.pass && LevelBound(static_cast<std::size_t>(m), 0) == Q(1, 2);
    std::size_t n = 2;
    for (long i = 0; i < k; ++i) n *= static_cast<std::size_t>(m);
    const ProfileChain c = BuildProfileChain(
        BuildTree(static_cast<std::size_t>(m), static_cast<std::size_t>(k)), n,
        lottery);
    bool trace = !c.any_profitable_step;
    std::size_t above_bound = 0;
    for (std::size_t level = 0; level < c.levels.size(); ++level) {
      const ChainLevel& l = c.levels[level];
      trace = trace && l.anchor_monotone &&
              l.expected_distance >= l.averaging_bound &&
              l.level_bound == LevelBound(static_cast<std::size_t>(m), level);
      // Reported only: a concrete mechanism may sit on either side.
      if (l.expected_distance >= l.level_bound) ++above_bound;
    }
    v.pass = v.pass && trace;
    d << "; (" << m << "," << k << ") n=" << n << " trace "
      << (trace ? "ok" : "BAD") << ", " << above_bound << "/" << c.levels.size()
      << " levels at or above the level bound"
      << ", ratio " << c.ratio_vs_reference.ToString();
  }
  v.detail = d.str();
  return v;
}

bool SameRows(const TableResult& a, const TableResult& b) {
  if (a.rows.size() != b.rows.size() || a.pass != b.pass) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const TableRow& x = a.rows[i];
    const TableRow& y = b.rows[i];
    if (x.mechanism != y.mechanism || x.topology != y.topology ||
        x.worst_ratio.ToString() != y.worst_ratio.ToString() ||
        x.worst_n != y.worst_n || x.violations != y.violations ||
        x.pass != y.pass ||
        x.planted_ratio.has_value() != y.planted_ratio.has_value() ||
        (x.planted_ratio &&
         x.planted_ratio->ToString() != y.planted_ratio->ToString())) {
      return false;
    }
  }
  return true;
}

// 13. The table suite, twice under the same seed.
Verdict TableSuite() {
  const TableOptions options;
  const TableResult a = RunTable1(options);
  const TableResult b = RunTable1(options);
  std::size_t failed = 0;
  for (const TableRow& row : a.rows) failed += row.pass ? 0 : 1;
  const bool same = SameRows(a, b);
  return {a.pass && same, std::to_string(a.rows.size()) + " cells, " +
                              std::to_string(failed) + " failing, " +
                              (same ? "deterministic" : "NOT deterministic")};
}

}  // namespace
}  // namespace netloc

// Optional arguments select criteria by number; none runs them all.
int main(int argc, char** argv) {
  using netloc::Criterion;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::vector<Criterion> criteria{
      {1, "random dictator tightness", 1, netloc::DictatorTightness},
      {2, "random dictator upper bound", 60, netloc::DictatorUpperBound},
      {3, "circle group witness", 300, netloc::CircleWitness},
      {4, "rc quarter bound", 30, netloc::QuarterBound},
      {5, "interval identity", 5, netloc::IntervalIdentity},
      {6, "partition and added-agent inequalities", 30,
       netloc::PartitionAndAntiWlog},
      {7, "hybrid max-cost ratio", 60, netloc::HybridRatio},
      {8, "hybrid strategyproofness audit", 600, netloc::HybridAudit},
      {9, "tree median optimality", 120, netloc::TreeMedianOptimal},
      {10, "tree center lottery ratio", 60, netloc::LotteryRatio},
      {11, "coalition deviations", 120, netloc::Coalitions},
      {12, "lower-bound harness", 10, netloc::LowerBound},
      {13, "table suite", 600, netloc::TableSuite},
  };
  int failed = 0, ran = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    netloc::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = v.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s%s)\n",
                pass ? "PASS" : "FAIL", c.id, c.title, v.detail.c_str(), secs,
                c.limit_seconds, in_time ? "" : ", over time");
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
