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

// Agent, social and maximum cost of points and distributions, plus exact
// 1-median and 1-center solvers and a grid oracle for cross-checking them.

#ifndef NETLOC_COSTS_HPP_
#define NETLOC_COSTS_HPP_

#include <string>
#include <vector>

#include "netloc/distribution.hpp"
#include "netloc/metric_graph.hpp"
#include "netloc/rational.hpp"

namespace netloc {

enum class Objective { kSocial, kMax };

std::string_view ObjectiveName(Objective objective);

// E_{y~P}[d(p, y)].
Rational ExpectedCost(const MetricGraph& g, const LocationDistribution& P,
                      const Point& p);

Rational SocialCost(const MetricGraph& g, const Point& y,
                    const LocationProfile& x);
Rational SocialCost(const MetricGraph& g, const LocationDistribution& P,
                    const LocationProfile& x);
Rational MaxCost(const MetricGraph& g, const Point& y,
                 const LocationProfile& x);
// Expectation of the per-outcome maximum, not the maximum of expectations.
Rational MaxCost(const MetricGraph& g, const LocationDistribution& P,
                 const LocationProfile& x);
Rational Cost(Objective objective, const MetricGraph& g,
              const LocationDistribution& P, const LocationProfile& x);

struct Optimum {
  Point point = Point::AtVertex(0);
  Rational value;
  // Set only by the grid oracle.
  bool approximate = false;
};

// Exact optima on every topology. Trees use the median and the center;
// circles use their closed forms; general graphs use the candidate solvers
// below.
Optimum OptimalSocial(const MetricGraph& g, const LocationProfile& x);
Optimum OptimalMax(const MetricGraph& g, const LocationProfile& x);
Optimum Optimal(Objective objective, const MetricGraph& g,
                const LocationProfile& x);

// Social cost restricted to an edge is concave between agents on that edge,
// so vertices and agent locations contain a minimizer on any graph. Ties go
// to the smallest point in canonical order.
Optimum CandidateSocialOptimum(const MetricGraph& g, const LocationProfile& x);

// Every agent's distance along an edge is a minimum of lines of slope +1 or
// -1, so the maximum cost attains its minimum at an edge end or where a
// rising line meets a falling one. Exact on any graph; ties go to the
// smallest point in canonical order.
Optimum CrossingMaxOptimum(const MetricGraph& g, const LocationProfile& x);

// Brute-force minimum over GridPoints(resolution); ties go to the smallest
// point in canonical order. The result is flagged approximate.
Optimum GridOptimum(Objective objective, const MetricGraph& g,
                    const LocationProfile& x, const Rational& resolution);

// Mechanism cost over optimum; infinite when only the optimum is zero, one
// when both are.
struct Ratio {
  bool infinite = false;
  Rational value;

  static Ratio Of(const Rational& cost, const Rational& optimum);
  bool AtMost(const Rational& bound) const {
    return !infinite && value <= bound;
  }
  std::string ToString() const;
};

struct CostReport {
  Rational social_cost;
  Rational max_cost;
  std::vector<Rational> per_agent;
  Optimum opt_social;
  Optimum opt_max;
  Ratio sc_ratio;
  Ratio mc_ratio;
};

CostReport EvaluateCosts(const MetricGraph& g, const LocationDistribution& P,
                         const LocationProfile& x);

}  // namespace netloc

#endif  // NETLOC_COSTS_HPP_
