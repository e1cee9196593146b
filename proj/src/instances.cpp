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

#include "netloc/instances.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netloc/errors.hpp"

namespace netloc {
namespace {

Rational RandomLength(Rng& rng, const InstanceShape& shape) {
  return Fraction(rng.Between(1, 2 * shape.length_denominator),
                  shape.length_denominator);
}

std::vector<std::string> Names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < count; ++v) names.push_back(std::to_string(v));
  return names;
}

std::size_t RandomCount(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.Between(static_cast<std::int64_t>(lo),
                                              static_cast<std::int64_t>(hi)));
}

}  // namespace

MetricGraph RandomLine(Rng& rng, const InstanceShape& shape) {
  const std::size_t edges =
      RandomCount(rng, 1, std::max<std::size_t>(1, shape.max_vertices - 1));
  std::vector<Rational> lengths;
  for (std::size_t k = 0; k < edges; ++k) {
    lengths.push_back(RandomLength(rng, shape));
  }
  return MetricGraph::Path(lengths);
}

MetricGraph RandomTree(Rng& rng, const InstanceShape& shape) {
  const std::size_t count =
      RandomCount(rng, 2, std::max<std::size_t>(2, shape.max_vertices));
  std::vector<Edge> edges;
  for (VertexId v = 1; v < count; ++v) {
    edges.push_back(
        {static_cast<VertexId>(rng.Below(v)), v, RandomLength(rng, shape)});
  }
  return MetricGraph(Names(count), std::move(edges));
}

MetricGraph RandomCircle(Rng& rng, const InstanceShape& shape) {
  const std::size_t count =
      RandomCount(rng, 1, std::max<std::size_t>(1, shape.max_vertices));
  std::vector<Rational> lengths;
  for (std::size_t k = 0; k < count; ++k) {
    lengths.push_back(RandomLength(rng, shape));
  }
  if (count == 1) return MetricGraph::Circle(lengths[0]);
  return MetricGraph::Cycle(lengths);
}

MetricGraph RandomGeneral(Rng& rng, const InstanceShape& shape) {
  const std::size_t count =
      RandomCount(rng, 4, std::max<std::size_t>(4, shape.max_vertices));
  for (;;) {
    std::vector<Edge> edges;
    std::set<std::pair<VertexId, VertexId>> used;
    for (VertexId v = 1; v < count; ++v) {
      const VertexId u = static_cast<VertexId>(rng.Below(v));
      edges.push_back({u, v, RandomLength(rng, shape)});
      used.insert({u, v});
    }
    const std::size_t extra = RandomCount(rng, 2, count);
    for (std::size_t k = 0; k < extra; ++k) {
      VertexId a = static_cast<VertexId>(rng.Below(count));
      VertexId b = static_cast<VertexId>(rng.Below(count));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (!used.insert({a, b}).second) continue;
      edges.push_back({a, b, RandomLength(rng, shape)});
    }
    MetricGraph g(Names(count), std::move(edges));
    if (g.topology() == Topology::kGeneral) return g;
  }
}

MetricGraph RandomGraph(Topology topology, Rng& rng,
                        const InstanceShape& shape) {
  switch (topology) {
    case Topology::kLine:
      return RandomLine(rng, shape);
    case Topology::kTree:
      return RandomTree(rng, shape);
    case Topology::kCircle:
      return RandomCircle(rng, shape);
    case Topology::kGeneral:
      return RandomGeneral(rng, shape);
  }
  throw InvalidParameterError("unknown topology");
}

Point RandomPoint(const MetricGraph& g, Rng& rng, const InstanceShape& shape) {
  const long den = shape.position_denominator;
  if (g.has_coordinates()) {
    const long top = g.topology() == Topology::kCircle ? den - 1 : den;
    return g.AtCoordinate(g.chain_length() *
                          Fraction(rng.Between(0, top), den));
  }
  const EdgeId e = static_cast<EdgeId>(rng.Below(g.num_edges()));
  return g.PointOn(e, g.edge(e).length * Fraction(rng.Between(0, den), den));
}

LocationProfile RandomProfile(const MetricGraph& g, std::size_t n, Rng& rng,
                              const InstanceShape& shape) {
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    points.push_back(RandomPoint(g, rng, shape));
  return LocationProfile(std::move(points));
}

}  // namespace netloc
