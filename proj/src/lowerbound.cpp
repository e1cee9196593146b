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

#include "netloc/lowerbound.hpp"

#include <cmath>
#include <map>
#include <string>

#include "netloc/errors.hpp"

namespace netloc {
namespace {

std::size_t IntPow(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t e = 0; e < exponent; ++e) out *= base;
  return out;
}

LocationProfile ToProfile(const std::vector<VertexId>& at) {
  std::vector<Point> points;
  points.reserve(at.size());
  for (VertexId v : at) points.push_back(Point::AtVertex(v));
  return LocationProfile(std::move(points));
}

std::vector<std::pair<VertexId, std::size_t>> Occupancy(
    const std::vector<VertexId>& at) {
  std::map<VertexId, std::size_t> counts;
  for (VertexId v : at) ++counts[v];
  return {counts.begin(), counts.end()};
}

}  // namespace

std::vector<VertexId> LowerBoundInstance::Children(bool left, std::size_t level,
                                                   std::size_t index) const {
  const auto& levels = left ? left_levels : right_levels;
  if (level + 1 >= levels.size()) return {};
  const auto& next = levels[level + 1];
  return {next.begin() + static_cast<std::ptrdiff_t>(index * m),
          next.begin() + static_cast<std::ptrdiff_t>((index + 1) * m)};
}

LowerBoundInstance BuildTree(std::size_t m, std::size_t k) {
  if (m < 2 || k < 1) {
    throw InvalidParameterError("lower-bound tree needs m >= 2 and k >= 1");
  }
  std::vector<std::vector<VertexId>> left{{0}};
  std::vector<std::vector<VertexId>> right{{1}};
  std::vector<Edge> edges{{0, 1, Rational(1)}};
  VertexId next = 2;
  for (std::size_t d = 0; d < k; ++d) {
    const Rational length = PowerOfTwo(static_cast<unsigned>(d));
    for (auto* side : {&left, &right}) {
      std::vector<VertexId> level;
      for (VertexId parent : side->back()) {
        for (std::size_t c = 0; c < m; ++c) {
          edges.push_back({parent, next, length});
          level.push_back(next++);
        }
      }
      side->push_back(std::move(level));
    }
  }
  std::vector<std::string> names;
  names.reserve(next);
  for (VertexId v = 0; v < next; ++v) names.push_back(std::to_string(v));
  return LowerBoundInstance{m,
                            k,
                            MetricGraph(std::move(names), std::move(edges)),
                            0,
                            1,
                            std::move(left),
                            std::move(right)};
}

Rational FormulaBound(std::size_t m, std::size_t k) {
  if (m < 2 || k < 1) throw InvalidParameterError("need m >= 2 and k >= 1");
  return Rational(2) - 1 / PowerOfTwo(static_cast<unsigned>(k)) -
         Rational(4) / Rational(static_cast<unsigned long>(m));
}

Rational LevelBound(std::size_t m, std::size_t d) {
  if (m < 2) throw InvalidParameterError("need m >= 2");
  const Rational p = PowerOfTwo(static_cast<unsigned>(d + 1));
  return (p - 1) / 2 - (p - Rational(static_cast<unsigned long>(d + 2))) /
                           Rational(static_cast<unsigned long>(m));
}

Rational AveragingStep(std::size_t m, std::size_t d, const Rational& b) {
  const Rational mm(static_cast<unsigned long>(m));
  return (PowerOfTwo(static_cast<unsigned>(d)) * mm + (mm - 2) * b) / mm;
}

ProfileChain BuildProfileChain(const LowerBoundInstance& inst, std::size_t n,
                               const MechanismId& f, ChainMode mode) {
  const std::size_t m = inst.m;
  const std::size_t k = inst.k;
  const std::size_t block = 2 * IntPow(m, k);
  if (n == 0 || n % block != 0) {
    throw InvalidParameterError(
        "n = " + std::to_string(n) +
        " must be a positive multiple of 2*m^k = " + std::to_string(block));
  }
  if (!Applicable(f, Topology::kTree)) {
    throw TopologyMismatchError(f.Name() + " is not defined on trees");
  }
  const MetricGraph& g = inst.graph;
  auto run = [&](const std::vector<VertexId>& at) {
    return RunMechanism(f, g, ToProfile(at));
  };
  auto cost = [&](const LocationDistribution& P, VertexId v) {
    return ExpectedCost(g, P, Point::AtVertex(v));
  };

  ProfileChain chain;
  chain.m = m;
  chain.k = k;
  chain.n = n;
  chain.mechanism = f.Name();

  std::vector<VertexId> at(n);
  for (std::size_t i = 0; i < n; ++i) at[i] = i < n / 2 ? inst.l0 : inst.r0;
  LocationDistribution current = run(at);

  // Level 0: one root is at expected distance >= 1/2 since d(l0, r0) = 1.
  ChainLevel level0;
  level0.occupancy = Occupancy(at);
  const Rational el = cost(current, inst.l0);
  const Rational er = cost(current, inst.r0);
  level0.candidates = {{inst.l0, el}, {inst.r0, er}};
  chain.left = el * 2 >= 1;
  level0.selected = chain.left ? inst.l0 : inst.r0;
  level0.expected_distance = chain.left ? el : er;
  level0.averaging_bound = Rational(1, 2);
  level0.level_bound = LevelBound(m, 0);
  chain.levels.push_back(std::move(level0));
  chain.profiles.push_back(ToProfile(at));
  chain.chosen_path.push_back(chain.levels[0].selected);

  std::vector<std::size_t> movers;
  for (std::size_t i = 0; i < n; ++i) {
    if (at[i] == chain.levels[0].selected) movers.push_back(i);
  }
  VertexId anchor = chain.levels[0].selected;
  std::size_t anchor_index = 0;
  for (std::size_t d = 0; d < k; ++d) {
    const std::vector<VertexId> children =
        inst.Children(chain.left, d, anchor_index);
    const std::size_t per_child = movers.size() / m;
    const Rational before_anchor = cost(current, anchor);
    ChainLevel level;
    level.level = d + 1;
    if (mode == ChainMode::kFine) {
      for (std::size_t t = 0; t < movers.size(); ++t) {
        const VertexId to = children[t / per_child];
        std::vector<VertexId> after = at;
        after[movers[t]] = to;
        LocationDistribution next = run(after);
        level.gains.push_back({movers[t], anchor, to,
                               cost(current, anchor) - cost(next, anchor),
                               cost(next, to) - cost(current, to)});
        at = std::move(after);
        current = std::move(next);
      }
    } else {
      for (std::size_t t = 0; t < movers.size(); ++t) {
        at[movers[t]] = children[t / per_child];
      }
      LocationDistribution next = run(at);
      // Audit the last mover against the profile where it stayed behind.
      const std::size_t last = movers.back();
      const VertexId to = at[last];
      std::vector<VertexId> stayed = at;
      stayed[last] = anchor;
      const LocationDistribution back = run(stayed);
      level.gains.push_back({last, anchor, to,
                             cost(back, anchor) - cost(next, anchor),
                             cost(next, to) - cost(back, to)});
      current = std::move(next);
    }
    for (const StepGain& s : level.gains) {
      chain.any_profitable_step = chain.any_profitable_step || s.profitable();
    }
    const Rational anchor_now = cost(current, anchor);
    level.anchor_monotone = anchor_now >= before_anchor;
    level.averaging_bound = AveragingStep(m, d, anchor_now);
    std::size_t best = 0;
    for (std::size_t c = 0; c < children.size(); ++c) {
      level.candidates.emplace_back(children[c], cost(current, children[c]));
      if (level.candidates[c].second > level.candidates[best].second) best = c;
    }
    level.selected = children[best];
    level.expected_distance = level.candidates[best].second;
    level.level_bound = LevelBound(m, d + 1);
    level.occupancy = Occupancy(at);
    chain.levels.push_back(std::move(level));
    chain.profiles.push_back(ToProfile(at));
    chain.chosen_path.push_back(children[best]);

    std::vector<std::size_t> next_movers;
    for (std::size_t i : movers) {
      if (at[i] == children[best]) next_movers.push_back(i);
    }
    movers = std::move(next_movers);
    anchor = children[best];
    anchor_index = anchor_index * m + best;
  }

  const LocationProfile& final_profile = chain.profiles.back();
  chain.final_max_cost = MaxCost(g, current, final_profile);
  chain.reference_cost = PowerOfTwo(static_cast<unsigned>(k - 1));
  chain.ratio_vs_reference =
      Ratio::Of(chain.final_max_cost, chain.reference_cost);
  chain.optimum = OptimalMax(g, final_profile);
  chain.ratio_vs_optimum = Ratio::Of(chain.final_max_cost, chain.optimum.value);
  chain.level_bound_ratio = LevelBound(m, k) / chain.reference_cost;
  chain.formula_bound = FormulaBound(m, k);
  return chain;
}

ChainParameters AutoParameters(std::size_t n) {
  if (n < 4) throw InvalidParameterError("automatic parameters need n >= 4");
  const double log_n = std::log2(static_cast<double>(n));
  std::size_t k = static_cast<std::size_t>(std::floor(std::sqrt(log_n)));
  if (k < 1) k = 1;
  // Shrink k until m = 2 fits.
  while (k > 1 && 2 * IntPow(2, k) > n) --k;
  std::size_t m = 2;
  while (2 * IntPow(m + 1, k) <= n) ++m;
  const std::size_t block = 2 * IntPow(m, k);
  return ChainParameters{m, k, n / block * block};
}

}  // namespace netloc
