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

// Seeded random graphs and profiles with small-denominator rational data.

#ifndef NETLOC_INSTANCES_HPP_
#define NETLOC_INSTANCES_HPP_

#include <cstddef>

#include "netloc/metric_graph.hpp"
#include "netloc/rng.hpp"

namespace netloc {

struct InstanceShape {
  std::size_t max_vertices = 7;
  // Edge lengths are k / length_denominator with 1 <= k <= 2 * denominator.
  long length_denominator = 4;
  // Agents sit at multiples of edge length / position_denominator.
  long position_denominator = 12;
};

// Path with 1..max_vertices-1 edges.
MetricGraph RandomLine(Rng& rng, const InstanceShape& shape = {});
// Random recursive tree on 2..max_vertices vertices.
MetricGraph RandomTree(Rng& rng, const InstanceShape& shape = {});
// Cycle with 1..max_vertices vertices (one vertex means a single loop).
MetricGraph RandomCircle(Rng& rng, const InstanceShape& shape = {});
// Connected graph with at least two independent cycles.
MetricGraph RandomGeneral(Rng& rng, const InstanceShape& shape = {});
MetricGraph RandomGraph(Topology topology, Rng& rng,
                        const InstanceShape& shape = {});

// Uniform edge, then a uniform grid offset. On circles and lines the point
// is instead a uniform grid coordinate of the whole chain.
Point RandomPoint(const MetricGraph& g, Rng& rng,
                  const InstanceShape& shape = {});
LocationProfile RandomProfile(const MetricGraph& g, std::size_t n, Rng& rng,
                              const InstanceShape& shape = {});

}  // namespace netloc

#endif  // NETLOC_INSTANCES_HPP_
