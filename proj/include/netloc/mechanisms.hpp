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

// Facility-location mechanisms without payments. Every mechanism maps a
// location profile to an exact LocationDistribution; deterministic rules
// also expose their single returned point.

#ifndef NETLOC_MECHANISMS_HPP_
#define NETLOC_MECHANISMS_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "netloc/distribution.hpp"
#include "netloc/metric_graph.hpp"

namespace netloc {

enum class MechanismKind {
  kRandomDictator,
  kLrm,
  kRc,
  kHybridCircle,
  kTreeMedian,
  kDictator,
  kTreeCenterLottery,
};

struct MechanismId {
  MechanismKind kind = MechanismKind::kRandomDictator;
  // Only meaningful for kDictator.
  std::size_t agent = 0;

  // Accepts "random-dictator", "lrm", "rc", "hybrid" / "hybrid-circle",
  // "tree-median", "dictator" / "dictator:<i>", "tree-center-lottery";
  // underscores may replace hyphens. Throws ParseError.
  static MechanismId Parse(std::string_view name);
  std::string Name() const;

  friend bool operator==(const MechanismId&, const MechanismId&) = default;
};

// Whether the mechanism is defined on graphs of this shape.
bool Applicable(const MechanismId& id, Topology topology);

using Mechanism = std::function<LocationDistribution(const MetricGraph&,
                                                     const LocationProfile&)>;

// Validates the profile, checks applicability (TopologyMismatchError), then
// dispatches.
LocationDistribution RunMechanism(const MechanismId& id, const MetricGraph& g,
                                  const LocationProfile& x);
Mechanism AsMechanism(const MechanismId& id);

// Probability 1/n on each reported location; coincident agents merge.
LocationDistribution RandomDictator(const MetricGraph& g,
                                    const LocationProfile& x);

// Left-right-middle: 1/4 on each extreme agent, 1/2 on their midpoint. On a
// line the extremes are the smallest and largest coordinates; on a circle
// they are the ends of the minimal covering arc, which must be at most a
// closed semicircle (InvalidProfileError otherwise).
LocationDistribution Lrm(const MetricGraph& g, const LocationProfile& x);

// Random center on a circle whose agents are not on one semicircle: the
// center of every arc between circularly adjacent antipodes, weighted by arc
// length / circumference. Zero-length arcs (duplicate agents) are dropped.
LocationDistribution Rc(const MetricGraph& g, const LocationProfile& x);

// LRM on the covering arc when it fits in a closed semicircle, else RC.
LocationDistribution HybridCircle(const MetricGraph& g,
                                  const LocationProfile& x);

// Tree median by descent from vertex 0: move into any component of g minus
// the current point holding more than n/2 agents and stop at the first point
// where none does.
Point TreeMedian(const MetricGraph& g, const LocationProfile& x);

Point Dictator(const MetricGraph& g, const LocationProfile& x,
               std::size_t agent);

// Unique minimizer of the maximum cost on a tree: the midpoint of a
// diametral agent pair.
Point TreeCenter(const MetricGraph& g, const LocationProfile& x);

// 1/(n+2) on each agent and 2/(n+2) on the tree center.
LocationDistribution TreeCenterLottery(const MetricGraph& g,
                                       const LocationProfile& x);

}  // namespace netloc

#endif  // NETLOC_MECHANISMS_HPP_
