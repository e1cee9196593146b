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

#include "netloc/mechanisms.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <utility>
#include <vector>

#include "netloc/circle_geometry.hpp"
#include "netloc/errors.hpp"

namespace netloc {
namespace {

std::vector<Rational> Coordinates(const MetricGraph& g,
                                  const LocationProfile& x) {
  std::vector<Rational> out;
  out.reserve(x.size());
  for (const Point& p : x) out.push_back(g.Coordinate(p));
  return out;
}

void RequireTree(const MetricGraph& g, std::string_view what) {
  if (!IsTree(g.topology())) {
    throw TopologyMismatchError(std::string(what) + " requires a tree, got " +
                                std::string(TopologyName(g.topology())));
  }
}

void RequireNonEmpty(const LocationProfile& x) {
  if (x.empty()) throw InvalidProfileError("location profile is empty");
}

LocationDistribution LeftRightMiddle(Point left, Point right, Point middle) {
  return LocationDistribution::FromWeights(
      {{std::move(left), Rational(1, 4)},
       {std::move(right), Rational(1, 4)},
       {std::move(middle), Rational(1, 2)}});
}

}  // namespace

MechanismId MechanismId::Parse(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "random-dictator") return {MechanismKind::kRandomDictator, 0};
  if (key == "lrm") return {MechanismKind::kLrm, 0};
  if (key == "rc") return {MechanismKind::kRc, 0};
  if (key == "hybrid" || key == "hybrid-circle") {
    return {MechanismKind::kHybridCircle, 0};
  }
  if (key == "tree-median") return {MechanismKind::kTreeMedian, 0};
  if (key == "tree-center-lottery") {
    return {MechanismKind::kTreeCenterLottery, 0};
  }
  if (key == "dictator") return {MechanismKind::kDictator, 0};
  if (key.starts_with("dictator:")) {
    const std::string_view digits = std::string_view(key).substr(9);
    std::size_t agent = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), agent);
    if (ec == std::errc() && ptr == digits.data() + digits.size() &&
        !digits.empty()) {
      return {MechanismKind::kDictator, agent};
    }
  }
  throw ParseError("unknown mechanism '" + std::string(name) + "'");
}

std::string MechanismId::Name() const {
  switch (kind) {
    case MechanismKind::kRandomDictator:
      return "random-dictator";
    case MechanismKind::kLrm:
      return "lrm";
    case MechanismKind::kRc:
      return "rc";
    case MechanismKind::kHybridCircle:
      return "hybrid";
    case MechanismKind::kTreeMedian:
      return "tree-median";
    case MechanismKind::kDictator:
      return "dictator:" + std::to_string(agent);
    case MechanismKind::kTreeCenterLottery:
      return "tree-center-lottery";
  }
  return "unknown";
}

bool Applicable(const MechanismId& id, Topology topology) {
  switch (id.kind) {
    case MechanismKind::kRandomDictator:
    case MechanismKind::kDictator:
      return true;
    case MechanismKind::kLrm:
      return topology == Topology::kLine || topology == Topology::kCircle;
    case MechanismKind::kRc:
    case MechanismKind::kHybridCircle:
      return topology == Topology::kCircle;
    case MechanismKind::kTreeMedian:
    case MechanismKind::kTreeCenterLottery:
      return IsTree(topology);
  }
  return false;
}

LocationDistribution RunMechanism(const MechanismId& id, const MetricGraph& g,
                                  const LocationProfile& x) {
  ValidateProfile(g, x);
  if (!Applicable(id, g.topology())) {
    throw TopologyMismatchError(id.Name() + " is not defined on a " +
                                std::string(TopologyName(g.topology())));
  }
  switch (id.kind) {
    case MechanismKind::kRandomDictator:
      return RandomDictator(g, x);
    case MechanismKind::kLrm:
      return Lrm(g, x);
    case MechanismKind::kRc:
      return Rc(g, x);
    case MechanismKind::kHybridCircle:
      return HybridCircle(g, x);
    case MechanismKind::kTreeMedian:
      return LocationDistribution::PointMass(TreeMedian(g, x));
    case MechanismKind::kDictator:
      return LocationDistribution::PointMass(Dictator(g, x, id.agent));
    case MechanismKind::kTreeCenterLottery:
      return TreeCenterLottery(g, x);
  }
  throw Error("unhandled mechanism");
}

Mechanism AsMechanism(const MechanismId& id) {
  return [id](const MetricGraph& g, const LocationProfile& x) {
    return RunMechanism(id, g, x);
  };
}

LocationDistribution RandomDictator(const MetricGraph& g,
                                    const LocationProfile& x) {
  (void)g;
  RequireNonEmpty(x);
  const Rational share(1, x.size());
  std::vector<std::pair<Point, Rational>> weights;
  weights.reserve(x.size());
  for (const Point& p : x) weights.emplace_back(p, share);
  return LocationDistribution::FromWeights(std::move(weights));
}

LocationDistribution Lrm(const MetricGraph& g, const LocationProfile& x) {
  RequireNonEmpty(x);
  if (g.topology() == Topology::kLine) {
    const std::vector<Rational> xs = Coordinates(g, x);
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    return LeftRightMiddle(g.AtCoordinate(*lo), g.AtCoordinate(*hi),
                           g.AtCoordinate((*lo + *hi) / 2));
  }
  const circle::Circle c = circle::Circle::Of(g);
  const std::vector<Rational> xs = Coordinates(g, x);
  const circle::SemicircleAnalysis s = circle::AnalyzeSemicircle(c, xs);
  if (!s.on_semicircle) {
    throw InvalidProfileError("covering arc longer than a semicircle");
  }
  const circle::Arc& arc = s.covering_arc;
  return LeftRightMiddle(g.AtCoordinate(arc.start), g.AtCoordinate(arc.End(c)),
                         g.AtCoordinate(arc.start + arc.length / 2));
}

LocationDistribution Rc(const MetricGraph& g, const LocationProfile& x) {
  RequireNonEmpty(x);
  const circle::Circle c = circle::Circle::Of(g);
  const std::vector<Rational> xs = Coordinates(g, x);
  if (circle::AnalyzeSemicircle(c, xs).on_semicircle) {
    throw InvalidProfileError("random center needs agents off one semicircle");
  }
  std::vector<Rational> antipodes;
  antipodes.reserve(xs.size());
  for (const Rational& p : xs) antipodes.push_back(c.Antipode(p));
  std::sort(antipodes.begin(), antipodes.end());
  antipodes.erase(std::unique(antipodes.begin(), antipodes.end()),
                  antipodes.end());
  const Rational& circumference = c.circumference();
  std::vector<std::pair<Point, Rational>> weights;
  for (std::size_t k = 0; k < antipodes.size(); ++k) {
    const Rational& from = antipodes[k];
    const Rational width =
        c.Clockwise(from, antipodes[(k + 1) % antipodes.size()]);
    weights.emplace_back(g.AtCoordinate(from + width / 2),
                         width / circumference);
  }
  return LocationDistribution::FromWeights(std::move(weights));
}

LocationDistribution HybridCircle(const MetricGraph& g,
                                  const LocationProfile& x) {
  RequireNonEmpty(x);
  const circle::Circle c = circle::Circle::Of(g);
  if (circle::AnalyzeSemicircle(c, Coordinates(g, x)).on_semicircle) {
    return Lrm(g, x);
  }
  return Rc(g, x);
}

Point TreeMedian(const MetricGraph& g, const LocationProfile& x) {
  RequireTree(g, "tree median");
  RequireNonEmpty(x);
  const std::size_t nv = g.num_vertices();
  const std::size_t n = x.size();

  // Root the tree at vertex 0.
  std::vector<VertexId> parent(nv, 0);
  std::vector<EdgeId> parent_edge(nv, 0);
  std::vector<std::vector<VertexId>> children(nv);
  std::vector<VertexId> order{0};
  {
    std::vector<bool> seen(nv, false);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const VertexId v = order[head];
      for (EdgeId e : g.incident_edges(v)) {
        const Edge& ed = g.edge(e);
        const VertexId w = ed.u == v ? ed.v : ed.u;
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        parent_edge[w] = e;
        children[v].push_back(w);
        order.push_back(w);
      }
    }
  }
  // Agents on each edge, as distances from the parent end.
  std::vector<std::size_t> at_vertex(nv, 0);
  std::vector<std::vector<Rational>> on_edge(g.num_edges());
  std::vector<VertexId> child_of_edge(g.num_edges(), 0);
  for (VertexId v = 1; v < nv; ++v) child_of_edge[parent_edge[v]] = v;
  for (const Point& p : x) {
    if (p.is_vertex()) {
      ++at_vertex[p.vertex()];
      continue;
    }
    const Edge& ed = g.edge(p.edge());
    const VertexId child = child_of_edge[p.edge()];
    on_edge[p.edge()].push_back(
        ed.v == child ? p.offset() : Rational(ed.length - p.offset()));
  }
  for (auto& offsets : on_edge) std::sort(offsets.begin(), offsets.end());
  std::vector<std::size_t> subtree(nv, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    subtree[v] += at_vertex[v];
    if (v != 0)
      subtree[parent[v]] += subtree[v] + on_edge[parent_edge[v]].size();
  }

  VertexId at = 0;
  for (;;) {
    std::optional<VertexId> heavy;
    for (VertexId c : children[at]) {
      if (2 * (subtree[c] + on_edge[parent_edge[c]].size()) > n) heavy = c;
    }
    if (!heavy.has_value()) return Point::AtVertex(at);
    const EdgeId e = parent_edge[*heavy];
    const std::vector<Rational>& offsets = on_edge[e];
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      if (k + 1 < offsets.size() && offsets[k + 1] == offsets[k]) continue;
      const std::size_t ahead = offsets.size() - k - 1 + subtree[*heavy];
      if (2 * ahead <= n) {
        const Edge& ed = g.edge(e);
        return g.PointOn(
            e, ed.v == *heavy ? offsets[k] : Rational(ed.length - offsets[k]));
      }
    }
    at = *heavy;
  }
}

Point Dictator(const MetricGraph& g, const LocationProfile& x,
               std::size_t agent) {
  (void)g;
  if (agent >= x.size()) {
    throw InvalidProfileError("dictator index " + std::to_string(agent) +
                              " out of range for " + std::to_string(x.size()) +
                              " agents");
  }
  return x[agent];
}

Point TreeCenter(const MetricGraph& g, const LocationProfile& x) {
  RequireTree(g, "tree center");
  RequireNonEmpty(x);
  auto farthest = [&](const Point& from) {
    std::size_t best = 0;
    Rational best_d = g.Distance(from, x[0]);
    for (std::size_t i = 1; i < x.size(); ++i) {
      Rational d = g.Distance(from, x[i]);
      if (d > best_d) {
        best = i;
        best_d = std::move(d);
      }
    }
    return best;
  };
  const std::size_t a = farthest(x[0]);
  const std::size_t b = farthest(x[a]);
  return g.PathCenter(x[a], x[b]);
}

LocationDistribution TreeCenterLottery(const MetricGraph& g,
                                       const LocationProfile& x) {
  RequireTree(g, "tree center lottery");
  RequireNonEmpty(x);
  const Rational share(1, x.size() + 2);
  std::vector<std::pair<Point, Rational>> weights;
  for (const Point& p : x) weights.emplace_back(p, share);
  weights.emplace_back(TreeCenter(g, x), 2 * share);
  return LocationDistribution::FromWeights(std::move(weights));
}

}  // namespace netloc
