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

// The recursive two-sided tree used to lower-bound randomized SP mechanisms
// for the maximum cost, and the chain of profiles that pushes agents down
// one branch of it.
//
// Two roots l0 and r0 are joined by a unit edge. Below each root hangs a
// complete m-ary tree of depth k whose edges from level d to level d+1 have
// length 2^d.

#ifndef NETLOC_LOWERBOUND_HPP_
#define NETLOC_LOWERBOUND_HPP_

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "netloc/costs.hpp"
#include "netloc/mechanisms.hpp"
#include "netloc/metric_graph.hpp"

namespace netloc {

struct LowerBoundInstance {
  std::size_t m = 2;
  std::size_t k = 1;
  MetricGraph graph;
  VertexId l0 = 0;
  VertexId r0 = 1;
  // left_levels[d] and right_levels[d] list the level-d vertices of each
  // side; the children of the j-th vertex of level d are entries
  // j*m .. j*m+m-1 of level d+1.
  std::vector<std::vector<VertexId>> left_levels;
  std::vector<std::vector<VertexId>> right_levels;

  std::vector<VertexId> Children(bool left, std::size_t level,
                                 std::size_t index) const;
};

// Vertex 0 is l0, vertex 1 is r0, then level by level, left side before
// right. Throws InvalidParameterError unless m >= 2 and k >= 1.
LowerBoundInstance BuildTree(std::size_t m, std::size_t k);

// 2 - 1/2^k - 4/m.
Rational FormulaBound(std::size_t m, std::size_t k);
// Per-level bound on the expected distance to the selected vertex:
// (2^{d+1} - 1)/2 - (2^{d+1} - (d+2))/m.
Rational LevelBound(std::size_t m, std::size_t d);
// The averaging step applied to a level-d bound b:
// (2^d * m + (m-2) * b) / m.
Rational AveragingStep(std::size_t m, std::size_t d, const Rational& b);

enum class ChainMode {
  // Every agent of a level moves at once.
  kBlock,
  // Agents move one at a time and every intermediate step is audited.
  kFine,
};

// A single agent moving from `from` to `to` between consecutive profiles.
// stay_gain: what an agent truly at `from` gains by reporting `to`.
// move_gain: what an agent truly at `to` gains by reporting `from`.
struct StepGain {
  std::size_t agent = 0;
  VertexId from = 0;
  VertexId to = 0;
  Rational stay_gain;
  Rational move_gain;

  bool profitable() const { return stay_gain > 0 || move_gain > 0; }
};

struct ChainLevel {
  std::size_t level = 0;
  // Agent count per occupied vertex, ascending by vertex.
  std::vector<std::pair<VertexId, std::size_t>> occupancy;
  // The averaging witness l^d.
  VertexId selected = 0;
  // E[d(f(x^d), v)] for each candidate v (the two roots at level 0, the
  // children of l^{d-1} otherwise), in candidate order.
  std::vector<std::pair<VertexId, Rational>> candidates;
  Rational expected_distance;
  // Level 0: 1/2. Otherwise E[d(f(x^d), l^{d-1})] pushed through the
  // averaging step, which the maximum over children always meets.
  Rational averaging_bound;
  // E[d(f(x^d), l^{d-1})] >= E[d(f(x^{d-1}), l^{d-1})]; holds for any SP
  // mechanism. Always true at level 0.
  bool anchor_monotone = true;
  Rational level_bound;
  std::vector<StepGain> gains;
};

struct ProfileChain {
  std::size_t m = 2;
  std::size_t k = 1;
  std::size_t n = 0;
  std::string mechanism;
  // The branch followed: true for the l0 side.
  bool left = true;
  std::vector<LocationProfile> profiles;
  std::vector<ChainLevel> levels;
  std::vector<VertexId> chosen_path;

  Rational final_max_cost;
  // mc(l^{k-1}, x^k) = 2^{k-1}.
  Rational reference_cost;
  Ratio ratio_vs_reference;
  Optimum optimum;
  Ratio ratio_vs_optimum;
  // LevelBound(m, k) / 2^{k-1}.
  Rational level_bound_ratio;
  Rational formula_bound;
  bool any_profitable_step = false;
};

// Throws InvalidParameterError unless 2 * m^k divides n and the mechanism
// is defined on trees.
ProfileChain BuildProfileChain(const LowerBoundInstance& inst, std::size_t n,
                               const MechanismId& f,
                               ChainMode mode = ChainMode::kBlock);

struct ChainParameters {
  std::size_t m = 2;
  std::size_t k = 1;
  std::size_t n = 0;
};

// k = max(1, floor(sqrt(log2 n))), m the largest value >= 2 with
// 2 m^k <= n, and n rounded down to a multiple of 2 m^k. Needs n >= 4.
ChainParameters AutoParameters(std::size_t n);

}  // namespace netloc

#endif  // NETLOC_LOWERBOUND_HPP_
