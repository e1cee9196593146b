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

// Continuous metric graphs. Agents and facilities live anywhere on the graph,
// including edge interiors; distances are exact shortest-path lengths.

#ifndef NETLOC_METRIC_GRAPH_HPP_
#define NETLOC_METRIC_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netloc/rational.hpp"

namespace netloc {

using VertexId = std::size_t;
using EdgeId = std::size_t;

enum class Topology { kLine, kTree, kCircle, kGeneral };

std::string_view TopologyName(Topology topology);

// Lines are trees.
inline bool IsTree(Topology t) {
  return t == Topology::kLine || t == Topology::kTree;
}

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational length;
};

// A location on a graph. Canonical form: a vertex, or an edge interior point
// with 0 < offset < length (offset measured from the edge's `u` endpoint).
// Use MetricGraph::PointOn to build canonical points from raw edge offsets.
class Point {
 public:
  static Point AtVertex(VertexId v) { return Point(true, v, Rational(0)); }
  // No validation; prefer MetricGraph::PointOn.
  static Point Interior(EdgeId e, Rational offset) {
    return Point(false, e, std::move(offset));
  }

  bool is_vertex() const { return is_vertex_; }
  VertexId vertex() const { return id_; }
  EdgeId edge() const { return id_; }
  const Rational& offset() const { return offset_; }

  // Vertices first (by id), then interior points by (edge, offset).
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.is_vertex_ != b.is_vertex_) {
      return a.is_vertex_ ? std::strong_ordering::less
                          : std::strong_ordering::greater;
    }
    if (a.id_ != b.id_) return a.id_ <=> b.id_;
    return Compare(a.offset_, b.offset_);
  }
  friend bool operator==(const Point& a, const Point& b) {
    return a.is_vertex_ == b.is_vertex_ && a.id_ == b.id_ &&
           a.offset_ == b.offset_;
  }

 private:
  Point(bool is_vertex, std::size_t id, Rational offset)
      : is_vertex_(is_vertex), id_(id), offset_(std::move(offset)) {}

  bool is_vertex_;
  std::size_t id_;
  Rational offset_;
};

// Which arc to take when asking for the center of two antipodal circle
// points: the one leaving the first point clockwise (increasing circular
// coordinate) or counterclockwise.
enum class ArcSelector { kClockwise, kCounterclockwise };

class MetricGraph {
 public:
  // Vertex names are labels only; vertices are addressed by index. Throws
  // InvalidGraphError when the graph is empty, disconnected, has a
  // non-positive length, references unknown vertices, or contains loops or
  // parallel edges without being a single cycle.
  MetricGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);

  // Convenience constructors; vertex names are "0", "1", ...
  static MetricGraph Path(std::span<const Rational> lengths);
  static MetricGraph Segment(const Rational& length);
  // A single vertex with one loop edge; coordinates equal edge offsets.
  static MetricGraph Circle(const Rational& circumference);
  // Cycle through `lengths.size()` vertices.
  static MetricGraph Cycle(std::span<const Rational> lengths);
  // Center vertex 0 joined to leaves 1..arms.
  static MetricGraph Star(std::size_t arms, const Rational& arm_length);

  Topology topology() const { return topology_; }
  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;
  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  // Edges incident to v, ascending; a loop appears once.
  const std::vector<EdgeId>& incident_edges(VertexId v) const {
    return incident_.at(v);
  }
  Rational total_length() const;
  Rational longest_edge() const;

  // Validates and canonicalizes: offsets 0 and length map to the endpoints.
  Point PointOn(EdgeId e, const Rational& offset) const;
  Point VertexPoint(VertexId v) const;
  // Throws InvalidPointError unless p is canonical and on this graph.
  void Validate(const Point& p) const;

  Rational Distance(const Point& p, const Point& q) const;
  Rational VertexDistance(VertexId a, VertexId b) const;
  // Distance from p to every vertex, indexed by vertex id.
  std::vector<Rational> DistancesToVertices(const Point& p) const;

  // The point z on a shortest p-q path with d(p,z) = d(q,z) = d(p,q)/2.
  // On a circle with antipodal p, q the arc must be selected, otherwise
  // AmbiguousCenterError. On general graphs with several shortest paths the
  // smallest candidate in canonical point order is returned.
  Point PathCenter(const Point& p, const Point& q,
                   std::optional<ArcSelector> arc = std::nullopt) const;

  // All vertices plus, on every edge, evenly spaced interior points at most
  // `resolution` apart. Sorted in canonical point order.
  std::vector<Point> GridPoints(const Rational& resolution) const;

  // Line and circle coordinates. A line is parametrized from its
  // lowest-numbered endpoint; a circle starts at its lowest-numbered vertex
  // and runs along that vertex's lowest-numbered incident edge ("clockwise").
  // Throws TopologyMismatchError on trees and general graphs.
  bool has_coordinates() const { return !chain_.empty(); }
  // Circle circumference or line length.
  const Rational& chain_length() const;
  Rational Coordinate(const Point& p) const;
  // Circles reduce `coordinate` modulo the circumference; lines require
  // 0 <= coordinate <= length.
  Point AtCoordinate(const Rational& coordinate) const;

 private:
  struct ChainSegment {
    EdgeId edge;
    bool reversed;  // traversed from v to u
    Rational start;
  };

  void Classify();
  void BuildChain();
  void BuildDistanceOracle();

  Rational EdgeEndDistance(const Point& p, VertexId end) const;

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  Topology topology_ = Topology::kGeneral;

  std::vector<ChainSegment> chain_;
  std::vector<std::size_t> edge_segment_;
  std::vector<Rational> vertex_coordinate_;
  Rational chain_length_;

  // Trees: rooted at vertex 0.
  std::vector<VertexId> parent_;
  std::vector<std::size_t> depth_;
  std::vector<Rational> root_distance_;
  // General graphs: all-pairs vertex distances, row-major.
  std::vector<Rational> all_pairs_;
};

// Ordered multiset of agent locations; n >= 1.
class LocationProfile {
 public:
  LocationProfile() = default;
  explicit LocationProfile(std::vector<Point> points)
      : points_(std::move(points)) {}

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const Point& at(std::size_t i) const { return points_.at(i); }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  // Copy of this profile with agent i reporting p instead.
  LocationProfile WithAgentAt(std::size_t i, Point p) const;

  friend bool operator==(const LocationProfile&,
                         const LocationProfile&) = default;

 private:
  std::vector<Point> points_;
};

// Throws InvalidProfileError when empty, InvalidPointError for points that
// are not valid on g.
void ValidateProfile(const MetricGraph& g, const LocationProfile& x);

// Circle/line helpers: builds a profile from coordinates.
LocationProfile ProfileAtCoordinates(const MetricGraph& g,
                                     std::span<const Rational> coordinates);

}  // namespace netloc

#endif  // NETLOC_METRIC_GRAPH_HPP_
