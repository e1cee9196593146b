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

#include "netloc/metric_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "netloc/errors.hpp"

namespace netloc {
namespace {

std::vector<std::string> NumberedNames(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

Rational Mod(const Rational& x, const Rational& c) {
  Rational q = x / c;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return x - Rational(f) * c;
}

}  // namespace

std::string_view TopologyName(Topology topology) {
  switch (topology) {
    case Topology::kLine:
      return "line";
    case Topology::kTree:
      return "tree";
    case Topology::kCircle:
      return "circle";
    case Topology::kGeneral:
      return "general";
  }
  return "general";
}

MetricGraph::MetricGraph(std::vector<std::string> vertex_names,
                         std::vector<Edge> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
  if (names_.empty()) throw InvalidGraphError("graph has no vertices");
  if (edges_.empty()) throw InvalidGraphError("graph has no edges");
  incident_.assign(names_.size(), {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    Edge& edge = edges_[e];
    if (edge.u >= names_.size() || edge.v >= names_.size()) {
      throw InvalidGraphError("edge " + std::to_string(e) +
                              " references an unknown vertex");
    }
    edge.length.canonicalize();
    if (edge.length <= 0) {
      throw InvalidGraphError("edge " + std::to_string(e) +
                              " has non-positive length");
    }
    incident_[edge.u].push_back(e);
    if (edge.v != edge.u) incident_[edge.v].push_back(e);
  }
  Classify();
  BuildChain();
  BuildDistanceOracle();
}

MetricGraph MetricGraph::Path(std::span<const Rational> lengths) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    edges.push_back({i, i + 1, lengths[i]});
  }
  return MetricGraph(NumberedNames(lengths.size() + 1), std::move(edges));
}

MetricGraph MetricGraph::Segment(const Rational& length) {
  return MetricGraph(NumberedNames(2), {{0, 1, length}});
}

MetricGraph MetricGraph::Circle(const Rational& circumference) {
  return MetricGraph(NumberedNames(1), {{0, 0, circumference}});
}

MetricGraph MetricGraph::Cycle(std::span<const Rational> lengths) {
  const std::size_t n = lengths.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n, lengths[i]});
  }
  return MetricGraph(NumberedNames(n), std::move(edges));
}

MetricGraph MetricGraph::Star(std::size_t arms, const Rational& arm_length) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= arms; ++i) edges.push_back({0, i, arm_length});
  return MetricGraph(NumberedNames(arms + 1), std::move(edges));
}

void MetricGraph::Classify() {
  const std::size_t n = names_.size();
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : incident_[v]) {
      const VertexId w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != n) throw InvalidGraphError("graph is disconnected");

  bool multigraph = false;
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : edges_) {
    if (e.u == e.v) multigraph = true;
    if (!pairs.insert(std::minmax(e.u, e.v)).second) multigraph = true;
  }
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  const std::size_t cycles = edges_.size() + 1 - n;
  if (cycles == 0) {
    const bool path = std::all_of(degree.begin(), degree.end(),
                                  [](std::size_t d) { return d <= 2; });
    topology_ = path ? Topology::kLine : Topology::kTree;
  } else if (cycles == 1 && std::all_of(degree.begin(), degree.end(),
                                        [](std::size_t d) { return d == 2; })) {
    topology_ = Topology::kCircle;
  } else {
    if (multigraph) {
      throw InvalidGraphError(
          "loops and parallel edges are only supported on a single cycle");
    }
    topology_ = Topology::kGeneral;
  }
}

void MetricGraph::BuildChain() {
  if (topology_ != Topology::kLine && topology_ != Topology::kCircle) return;
  VertexId start = 0;
  if (topology_ == Topology::kLine) {
    for (VertexId v = 0; v < names_.size(); ++v) {
      if (incident_[v].size() == 1) {
        start = v;
        break;
      }
    }
  }
  edge_segment_.assign(edges_.size(), 0);
  vertex_coordinate_.assign(names_.size(), Rational(0));
  VertexId at = start;
  EdgeId next = incident_[start].front();
  Rational position = 0;
  std::vector<bool> used(edges_.size(), false);
  for (std::size_t step = 0; step < edges_.size(); ++step) {
    const Edge& e = edges_[next];
    const bool reversed = e.u != at;
    used[next] = true;
    edge_segment_[next] = chain_.size();
    chain_.push_back({next, reversed, position});
    vertex_coordinate_[at] = position;
    position += e.length;
    at = reversed ? e.u : e.v;
    for (EdgeId cand : incident_[at]) {
      if (!used[cand]) {
        next = cand;
        break;
      }
    }
  }
  if (topology_ == Topology::kLine) vertex_coordinate_[at] = position;
  chain_length_ = position;
}

void MetricGraph::BuildDistanceOracle() {
  const std::size_t n = names_.size();
  if (IsTree(topology_)) {
    parent_.assign(n, 0);
    depth_.assign(n, 0);
    root_distance_.assign(n, Rational(0));
    std::vector<bool> seen(n, false);
    std::deque<VertexId> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : incident_[v]) {
        const VertexId w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
        if (seen[w]) continue;
        seen[w] = true;
        parent_[w] = v;
        depth_[w] = depth_[v] + 1;
        root_distance_[w] = root_distance_[v] + edges_[e].length;
        queue.push_back(w);
      }
    }
  } else if (topology_ == Topology::kGeneral) {
    const Rational unreachable = total_length() + 1;
    all_pairs_.assign(n * n, unreachable);
    for (VertexId v = 0; v < n; ++v) all_pairs_[v * n + v] = 0;
    for (const Edge& e : edges_) {
      Rational& uv = all_pairs_[e.u * n + e.v];
      if (e.length < uv) {
        uv = e.length;
        all_pairs_[e.v * n + e.u] = e.length;
      }
    }
    Rational via;
    for (VertexId k = 0; k < n; ++k) {
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = 0; j < n; ++j) {
          via = all_pairs_[i * n + k] + all_pairs_[k * n + j];
          if (via < all_pairs_[i * n + j]) all_pairs_[i * n + j] = via;
        }
      }
    }
  }
}

const Edge& MetricGraph::edge(EdgeId e) const {
  if (e >= edges_.size()) {
    throw InvalidPointError("unknown edge " + std::to_string(e));
  }
  return edges_[e];
}

Rational MetricGraph::total_length() const {
  Rational total = 0;
  for (const Edge& e : edges_) total += e.length;
  return total;
}

Rational MetricGraph::longest_edge() const {
  Rational best = 0;
  for (const Edge& e : edges_) best = std::max(best, e.length);
  return best;
}

Point MetricGraph::PointOn(EdgeId e, const Rational& offset) const {
  const Edge& ed = edge(e);
  if (offset < 0 || offset > ed.length) {
    throw InvalidPointError("offset " + FormatRational(offset) +
                            " outside edge " + std::to_string(e));
  }
  if (offset == 0) return Point::AtVertex(ed.u);
  if (offset == ed.length) return Point::AtVertex(ed.v);
  Rational canonical = offset;
  canonical.canonicalize();
  return Point::Interior(e, std::move(canonical));
}

Point MetricGraph::VertexPoint(VertexId v) const {
  if (v >= names_.size()) {
    throw InvalidPointError("unknown vertex " + std::to_string(v));
  }
  return Point::AtVertex(v);
}

void MetricGraph::Validate(const Point& p) const {
  if (p.is_vertex()) {
    VertexPoint(p.vertex());
    return;
  }
  const Edge& ed = edge(p.edge());
  if (p.offset() <= 0 || p.offset() >= ed.length) {
    throw InvalidPointError("interior offset " + FormatRational(p.offset()) +
                            " not strictly inside edge " +
                            std::to_string(p.edge()));
  }
}

Rational MetricGraph::VertexDistance(VertexId a, VertexId b) const {
  if (a == b) return 0;
  if (has_coordinates()) {
    return Distance(Point::AtVertex(a), Point::AtVertex(b));
  }
  if (IsTree(topology_)) {
    VertexId x = a;
    VertexId y = b;
    while (depth_[x] > depth_[y]) x = parent_[x];
    while (depth_[y] > depth_[x]) y = parent_[y];
    while (x != y) {
      x = parent_[x];
      y = parent_[y];
    }
    return root_distance_[a] + root_distance_[b] - 2 * root_distance_[x];
  }
  return all_pairs_[a * names_.size() + b];
}

Rational MetricGraph::EdgeEndDistance(const Point& p, VertexId end) const {
  const Edge& e = edges_[p.edge()];
  Rational via_u = p.offset() + VertexDistance(e.u, end);
  Rational via_v = e.length - p.offset() + VertexDistance(e.v, end);
  return via_u < via_v ? via_u : via_v;
}

Rational MetricGraph::Distance(const Point& p, const Point& q) const {
  if (has_coordinates()) {
    Rational diff = AbsDiff(Coordinate(p), Coordinate(q));
    if (topology_ == Topology::kCircle) {
      Rational around = chain_length_ - diff;
      if (around < diff) return around;
    }
    return diff;
  }
  if (p.is_vertex() && q.is_vertex()) {
    return VertexDistance(p.vertex(), q.vertex());
  }
  if (p.is_vertex()) return EdgeEndDistance(q, p.vertex());
  if (q.is_vertex()) return EdgeEndDistance(p, q.vertex());
  const Edge& ep = edges_[p.edge()];
  const Edge& eq = edges_[q.edge()];
  Rational best;
  bool have = false;
  if (p.edge() == q.edge()) {
    best = AbsDiff(p.offset(), q.offset());
    have = true;
  }
  const Rational p_to[2] = {p.offset(), ep.length - p.offset()};
  const Rational q_to[2] = {q.offset(), eq.length - q.offset()};
  const VertexId p_end[2] = {ep.u, ep.v};
  const VertexId q_end[2] = {eq.u, eq.v};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Rational d = p_to[i] + VertexDistance(p_end[i], q_end[j]) + q_to[j];
      if (!have || d < best) {
        best = std::move(d);
        have = true;
      }
    }
  }
  return best;
}

std::vector<Rational> MetricGraph::DistancesToVertices(const Point& p) const {
  std::vector<Rational> out;
  out.reserve(names_.size());
  for (VertexId v = 0; v < names_.size(); ++v) {
    out.push_back(Distance(p, Point::AtVertex(v)));
  }
  return out;
}

Point MetricGraph::PathCenter(const Point& p, const Point& q,
                              std::optional<ArcSelector> arc) const {
  if (p == q) return p;
  if (topology_ == Topology::kLine) {
    return AtCoordinate((Coordinate(p) + Coordinate(q)) / 2);
  }
  if (topology_ == Topology::kCircle) {
    const Rational& c = chain_length_;
    const Rational a = Coordinate(p);
    const Rational cw = Mod(Coordinate(q) - a, c);
    const Rational half = c / 2;
    if (cw < half) return AtCoordinate(a + cw / 2);
    if (cw > half) return AtCoordinate(a - (c - cw) / 2);
    if (!arc.has_value()) {
      throw AmbiguousCenterError(
          "center of antipodal circle points needs an arc selector");
    }
    return AtCoordinate(*arc == ArcSelector::kClockwise ? Rational(a + c / 4)
                                                        : Rational(a - c / 4));
  }
  const Rational half = Distance(p, q) / 2;
  const std::vector<Rational> dp = DistancesToVertices(p);
  const std::vector<Rational> dq = DistancesToVertices(q);
  std::optional<Point> best;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    std::vector<Rational> offsets = {
        half - dp[ed.u], ed.length - half + dp[ed.v], half - dq[ed.u],
        ed.length - half + dq[ed.v]};
    for (const Point* s : {&p, &q}) {
      if (!s->is_vertex() && s->edge() == e) {
        offsets.push_back(s->offset() - half);
        offsets.push_back(s->offset() + half);
      }
    }
    for (const Rational& t : offsets) {
      if (t < 0 || t > ed.length) continue;
      Point z = PointOn(e, t);
      if (best.has_value() && !(z < *best)) continue;
      if (Distance(p, z) == half && Distance(q, z) == half) best = std::move(z);
    }
  }
  if (!best.has_value()) {
    throw Error("internal: no path center found");
  }
  return *best;
}

std::vector<Point> MetricGraph::GridPoints(const Rational& resolution) const {
  if (resolution <= 0) {
    throw InvalidParameterError("grid resolution must be positive");
  }
  std::vector<Point> out;
  for (VertexId v = 0; v < names_.size(); ++v)
    out.push_back(Point::AtVertex(v));
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Rational& length = edges_[e].length;
    const Rational ratio = length / resolution;
    mpz_class pieces;
    mpz_cdiv_q(pieces.get_mpz_t(), ratio.get_num_mpz_t(),
               ratio.get_den_mpz_t());
    const Rational step = length / Rational(pieces);
    for (mpz_class i = 1; i < pieces; ++i) {
      out.push_back(Point::Interior(e, step * Rational(i)));
    }
  }
  return out;
}

const Rational& MetricGraph::chain_length() const {
  if (!has_coordinates()) {
    throw TopologyMismatchError("coordinates exist only on lines and circles");
  }
  return chain_length_;
}

Rational MetricGraph::Coordinate(const Point& p) const {
  if (!has_coordinates()) {
    throw TopologyMismatchError("coordinates exist only on lines and circles");
  }
  if (p.is_vertex()) return vertex_coordinate_.at(p.vertex());
  const ChainSegment& seg = chain_[edge_segment_.at(p.edge())];
  if (seg.reversed) {
    return seg.start + edges_[seg.edge].length - p.offset();
  }
  return seg.start + p.offset();
}

Point MetricGraph::AtCoordinate(const Rational& coordinate) const {
  if (!has_coordinates()) {
    throw TopologyMismatchError("coordinates exist only on lines and circles");
  }
  Rational x = coordinate;
  if (topology_ == Topology::kCircle) {
    x = Mod(x, chain_length_);
  } else if (x < 0 || x > chain_length_) {
    throw InvalidPointError("line coordinate " + FormatRational(x) +
                            " out of range");
  }
  auto it = std::upper_bound(chain_.begin(), chain_.end(), x,
                             [](const Rational& value, const ChainSegment& s) {
                               return value < s.start;
                             });
  const ChainSegment& seg = *std::prev(it);
  const Rational t = x - seg.start;
  const Rational& length = edges_[seg.edge].length;
  return PointOn(seg.edge, seg.reversed ? Rational(length - t) : t);
}

LocationProfile LocationProfile::WithAgentAt(std::size_t i, Point p) const {
  LocationProfile copy = *this;
  copy.points_.at(i) = std::move(p);
  return copy;
}

void ValidateProfile(const MetricGraph& g, const LocationProfile& x) {
  if (x.empty()) throw InvalidProfileError("location profile is empty");
  for (const Point& p : x) g.Validate(p);
}

LocationProfile ProfileAtCoordinates(const MetricGraph& g,
                                     std::span<const Rational> coordinates) {
  std::vector<Point> points;
  points.reserve(coordinates.size());
  for (const Rational& c : coordinates) points.push_back(g.AtCoordinate(c));
  return LocationProfile(std::move(points));
}

}  // namespace netloc
