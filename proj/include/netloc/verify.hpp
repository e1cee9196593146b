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

// Deviation audits for strategyproofness and group strategyproofness, the
// circle witness search, and approximation ratios.
//
// The audits only try finitely many misreports. A clean report means no
// profitable deviation was found among the candidates, nothing more.

#ifndef NETLOC_VERIFY_HPP_
#define NETLOC_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "netloc/costs.hpp"
#include "netloc/mechanisms.hpp"
#include "netloc/metric_graph.hpp"

namespace netloc {

enum class CandidateSource { kGrid, kStructural, kExhaustive };

std::string_view CandidateSourceName(CandidateSource source);

struct CandidateSet {
  // Distinct, in canonical point order.
  std::vector<Point> points;
  std::vector<CandidateSource> sources;
};

// Agent locations, vertices, and on circles the antipodes plus the midpoints
// between circularly adjacent agents and antipodes; on lines the midpoints
// between adjacent agents. With a resolution the grid is added too.
CandidateSet DeviationCandidates(const MetricGraph& g, const LocationProfile& x,
                                 std::optional<Rational> resolution);

// A joint misreport: coalition[k] reports points[k] and gains gains[k],
// its truthful expected cost minus its expected cost after the deviation.
struct Deviation {
  std::vector<std::size_t> coalition;
  std::vector<Point> points;
  std::vector<Rational> gains;

  // Smallest member gain; the deviation is profitable iff it is positive.
  const Rational& min_gain() const;
};

struct DeviationReport {
  bool profitable = false;
  // Largest min_gain over all tried deviations, first in enumeration order
  // among ties. Empty only when nothing was tried.
  std::optional<Deviation> best_deviation;
  std::uint64_t candidates_checked = 0;
  std::vector<CandidateSource> candidate_sources;
  // False when the evaluation budget stopped the enumeration early.
  bool complete = true;
};

// Tries every agent against every candidate. Agents are audited in parallel
// (NETLOC_THREADS caps the worker count); the reduction runs in agent order
// so reports do not depend on scheduling.
DeviationReport CheckSp(const Mechanism& f, const MetricGraph& g,
                        const LocationProfile& x,
                        const CandidateSet& candidates);
DeviationReport CheckSp(const MechanismId& f, const MetricGraph& g,
                        const LocationProfile& x,
                        const CandidateSet& candidates);

// Every coalition of size 1..max_coalition and every joint report drawn from
// the candidates. A deviation counts only if every member strictly gains.
// Stops once `budget` mechanism evaluations have been spent.
DeviationReport CheckGsp(const Mechanism& f, const MetricGraph& g,
                         const LocationProfile& x, std::size_t max_coalition,
                         const CandidateSet& candidates,
                         std::uint64_t budget = 1'000'000);
DeviationReport CheckGsp(const MechanismId& f, const MetricGraph& g,
                         const LocationProfile& x, std::size_t max_coalition,
                         const CandidateSet& candidates,
                         std::uint64_t budget = 1'000'000);

// One fixed coalition against all joint reports from the candidates.
DeviationReport CheckCoalition(const Mechanism& f, const MetricGraph& g,
                               const LocationProfile& x,
                               std::span<const std::size_t> coalition,
                               const CandidateSet& candidates,
                               std::uint64_t budget = 1'000'000);

// Agent i with sum_k d(x_i, x_k) <= sum_k d(x_i, y_k).
struct GspWitness {
  std::size_t witness_index = 0;
  Rational lhs;
  Rational rhs;
};

// Tries members of nearly-antipodal pairs of x first (when x is in general
// position), then every agent. Throws NoWitnessError if no agent qualifies
// and InvalidProfileError if the sizes differ.
GspWitness GspCircleWitness(const Rational& circumference,
                            std::span<const Rational> x,
                            std::span<const Rational> y);
GspWitness GspCircleWitness(const MetricGraph& g, const LocationProfile& x,
                            const LocationProfile& y);

struct RatioReport {
  Rational cost;
  Optimum optimum;
  Ratio ratio;
};

RatioReport ApproxRatio(const Mechanism& f, const MetricGraph& g,
                        const LocationProfile& x, Objective objective);
RatioReport ApproxRatio(const MechanismId& f, const MetricGraph& g,
                        const LocationProfile& x, Objective objective);

// Worker count: NETLOC_THREADS when set to a positive integer, otherwise the
// hardware concurrency.
std::size_t WorkerCount();

// Runs body(0..count-1) on up to WorkerCount() threads.
void ParallelFor(std::size_t count,
                 const std::function<void(std::size_t)>& body);

}  // namespace netloc

#endif  // NETLOC_VERIFY_HPP_
