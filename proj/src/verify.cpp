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

#include "netloc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "netloc/circle_geometry.hpp"
#include "netloc/errors.hpp"

namespace netloc {
namespace {

void SortUnique(std::vector<Point>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

void SortUnique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

void AddCircleStructure(const MetricGraph& g, const LocationProfile& x,
                        std::vector<Point>& out) {
  const circle::Circle c = circle::Circle::Of(g);
  std::vector<Rational> marks;
  for (const Point& p : x) {
    const Rational z = g.Coordinate(p);
    marks.push_back(c.Antipode(z));
    marks.push_back(z);
  }
  SortUnique(marks);
  for (std::size_t k = 0; k < marks.size(); ++k) {
    out.push_back(g.AtCoordinate(marks[k]));
    const Rational& next = marks[(k + 1) % marks.size()];
    const Rational width =
        marks.size() == 1 ? c.circumference() : c.Clockwise(marks[k], next);
    out.push_back(g.AtCoordinate(marks[k] + width / 2));
  }
}

void AddLineStructure(const MetricGraph& g, const LocationProfile& x,
                      std::vector<Point>& out) {
  std::vector<Rational> coords;
  for (const Point& p : x) coords.push_back(g.Coordinate(p));
  SortUnique(coords);
  for (std::size_t k = 0; k + 1 < coords.size(); ++k) {
    out.push_back(g.AtCoordinate((coords[k] + coords[k + 1]) / 2));
  }
}

void AddPairCenters(const MetricGraph& g, const LocationProfile& x,
                    std::vector<Point>& out) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] != x[j]) out.push_back(g.PathCenter(x[i], x[j]));
    }
  }
}

// Enumerates every joint report of `coalition`, in odometer order over the
// candidates, until the shared budget runs out.
class CoalitionSearch {
 public:
  CoalitionSearch(const Mechanism& f, const MetricGraph& g,
                  const LocationProfile& x, const CandidateSet& candidates,
                  std::uint64_t budget, DeviationReport& report)
      : f_(f),
        g_(g),
        x_(x),
        candidates_(candidates.points),
        budget_(budget),
        report_(report) {}

  void Run(std::span<const std::size_t> coalition) {
    if (!report_.complete || candidates_.empty()) return;
    const LocationDistribution truthful_outcome = f_(g_, x_);
    std::vector<Rational> truthful;
    for (std::size_t i : coalition) {
      truthful.push_back(ExpectedCost(g_, truthful_outcome, x_[i]));
    }
    std::vector<std::size_t> choice(coalition.size(), 0);
    for (;;) {
      if (report_.candidates_checked >= budget_) {
        report_.complete = false;
        return;
      }
      ++report_.candidates_checked;
      std::vector<Point> deviated = x_.points();
      Deviation d;
      d.coalition.assign(coalition.begin(), coalition.end());
      for (std::size_t k = 0; k < coalition.size(); ++k) {
        deviated[coalition[k]] = candidates_[choice[k]];
        d.points.push_back(candidates_[choice[k]]);
      }
      const LocationDistribution outcome = f_(g_, LocationProfile(deviated));
      for (std::size_t k = 0; k < coalition.size(); ++k) {
        d.gains.push_back(truthful[k] -
                          ExpectedCost(g_, outcome, x_[coalition[k]]));
      }
      if (!report_.best_deviation.has_value() ||
          d.min_gain() > report_.best_deviation->min_gain()) {
        report_.best_deviation = std::move(d);
      }
      std::size_t k = coalition.size();
      while (k > 0 && ++choice[k - 1] == candidates_.size()) {
        choice[--k] = 0;
      }
      if (k == 0) return;
    }
  }

 private:
  const Mechanism& f_;
  const MetricGraph& g_;
  const LocationProfile& x_;
  const std::vector<Point>& candidates_;
  std::uint64_t budget_;
  DeviationReport& report_;
};

void Finish(DeviationReport& report, const CandidateSet& candidates) {
  report.candidate_sources = candidates.sources;
  report.profitable = report.best_deviation.has_value() &&
                      report.best_deviation->min_gain() > 0;
}

}  // namespace

std::string_view CandidateSourceName(CandidateSource source) {
  switch (source) {
    case CandidateSource::kGrid:
      return "grid";
    case CandidateSource::kStructural:
      return "structural";
    case CandidateSource::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

CandidateSet DeviationCandidates(const MetricGraph& g, const LocationProfile& x,
                                 std::optional<Rational> resolution) {
  ValidateProfile(g, x);
  CandidateSet out;
  out.points.assign(x.begin(), x.end());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out.points.push_back(Point::AtVertex(v));
  }
  switch (g.topology()) {
    case Topology::kCircle:
      AddCircleStructure(g, x, out.points);
      break;
    case Topology::kLine:
      AddLineStructure(g, x, out.points);
      break;
    case Topology::kTree:
    case Topology::kGeneral:
      AddPairCenters(g, x, out.points);
      break;
  }
  out.sources.push_back(CandidateSource::kStructural);
  if (resolution.has_value()) {
    for (Point& p : g.GridPoints(*resolution))
      out.points.push_back(std::move(p));
    out.sources.push_back(CandidateSource::kGrid);
  }
  SortUnique(out.points);
  return out;
}

const Rational& Deviation::min_gain() const {
  return *std::min_element(gains.begin(), gains.end());
}

DeviationReport CheckSp(const Mechanism& f, const MetricGraph& g,
                        const LocationProfile& x,
                        const CandidateSet& candidates) {
  ValidateProfile(g, x);
  if (candidates.points.empty()) {
    throw InvalidParameterError("no deviation candidates");
  }
  const LocationDistribution truthful_outcome = f(g, x);
  std::vector<std::optional<Deviation>> per_agent(x.size());
  ParallelFor(x.size(), [&](std::size_t i) {
    const Rational truthful = ExpectedCost(g, truthful_outcome, x[i]);
    std::optional<Deviation> best;
    for (const Point& c : candidates.points) {
      Rational gain =
          truthful - ExpectedCost(g, f(g, x.WithAgentAt(i, c)), x[i]);
      if (!best.has_value() || gain > best->gains[0]) {
        best = Deviation{{i}, {c}, {std::move(gain)}};
      }
    }
    per_agent[i] = std::move(best);
  });
  DeviationReport report;
  for (std::optional<Deviation>& d : per_agent) {
    if (!report.best_deviation.has_value() ||
        d->gains[0] > report.best_deviation->gains[0]) {
      report.best_deviation = std::move(d);
    }
  }
  report.candidates_checked =
      static_cast<std::uint64_t>(x.size()) * candidates.points.size();
  Finish(report, candidates);
  return report;
}

DeviationReport CheckSp(const MechanismId& f, const MetricGraph& g,
                        const LocationProfile& x,
                        const CandidateSet& candidates) {
  if (!Applicable(f, g.topology())) {
    throw TopologyMismatchError(f.Name() + " is not defined on a " +
                                std::string(TopologyName(g.topology())));
  }
  return CheckSp(AsMechanism(f), g, x, candidates);
}

DeviationReport CheckGsp(const Mechanism& f, const MetricGraph& g,
                         const LocationProfile& x, std::size_t max_coalition,
                         const CandidateSet& candidates, std::uint64_t budget) {
  ValidateProfile(g, x);
  if (max_coalition == 0 || max_coalition > x.size()) {
    throw InvalidParameterError("coalition bound must lie in [1, n]");
  }
  DeviationReport report;
  CoalitionSearch search(f, g, x, candidates, budget, report);
  for (std::size_t size = 1; size <= max_coalition && report.complete; ++size) {
    std::vector<std::size_t> coalition(size);
    for (std::size_t k = 0; k < size; ++k) coalition[k] = k;
    for (;;) {
      search.Run(coalition);
      if (!report.complete) break;
      // Next size-subset in lexicographic order.
      std::size_t k = size;
      while (k > 0 && coalition[k - 1] == x.size() - size + k - 1) --k;
      if (k == 0) break;
      ++coalition[k - 1];
      for (std::size_t j = k; j < size; ++j) {
        coalition[j] = coalition[j - 1] + 1;
      }
    }
  }
  Finish(report, candidates);
  return report;
}

DeviationReport CheckGsp(const MechanismId& f, const MetricGraph& g,
                         const LocationProfile& x, std::size_t max_coalition,
                         const CandidateSet& candidates, std::uint64_t budget) {
  if (!Applicable(f, g.topology())) {
    throw TopologyMismatchError(f.Name() + " is not defined on a " +
                                std::string(TopologyName(g.topology())));
  }
  return CheckGsp(AsMechanism(f), g, x, max_coalition, candidates, budget);
}

DeviationReport CheckCoalition(const Mechanism& f, const MetricGraph& g,
                               const LocationProfile& x,
                               std::span<const std::size_t> coalition,
                               const CandidateSet& candidates,
                               std::uint64_t budget) {
  ValidateProfile(g, x);
  for (std::size_t i : coalition) {
    if (i >= x.size())
      throw InvalidParameterError("coalition member out of range");
  }
  DeviationReport report;
  CoalitionSearch(f, g, x, candidates, budget, report).Run(coalition);
  Finish(report, candidates);
  return report;
}

GspWitness GspCircleWitness(const Rational& circumference,
                            std::span<const Rational> x,
                            std::span<const Rational> y) {
  if (x.size() != y.size() || x.empty()) {
    throw InvalidProfileError(
        "witness search needs two profiles of equal size");
  }
  const circle::Circle c(circumference);
  std::vector<std::size_t> order;
  try {
    for (const circle::NearlyAntipodalPair& pair :
         circle::NearlyAntipodalPairs(c, x).pairs) {
      order.push_back(pair.i);
      order.push_back(pair.j);
    }
  } catch (const InvalidProfileError&) {
    // Coincident or antipodal agents; fall through to the full scan.
  }
  for (std::size_t i = 0; i < x.size(); ++i) order.push_back(i);
  for (std::size_t i : order) {
    GspWitness w{i, Rational(0), Rational(0)};
    for (std::size_t k = 0; k < x.size(); ++k) {
      w.lhs += c.Distance(x[i], x[k]);
      w.rhs += c.Distance(x[i], y[k]);
    }
    if (w.lhs <= w.rhs) return w;
  }
  throw NoWitnessError("no agent satisfies the witness inequality");
}

GspWitness GspCircleWitness(const MetricGraph& g, const LocationProfile& x,
                            const LocationProfile& y) {
  const circle::Circle c = circle::Circle::Of(g);
  ValidateProfile(g, x);
  ValidateProfile(g, y);
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (const Point& p : x) xs.push_back(g.Coordinate(p));
  for (const Point& p : y) ys.push_back(g.Coordinate(p));
  return GspCircleWitness(c.circumference(), xs, ys);
}

RatioReport ApproxRatio(const Mechanism& f, const MetricGraph& g,
                        const LocationProfile& x, Objective objective) {
  ValidateProfile(g, x);
  RatioReport out;
  out.cost = Cost(objective, g, f(g, x), x);
  out.optimum = Optimal(objective, g, x);
  out.ratio = Ratio::Of(out.cost, out.optimum.value);
  return out;
}

RatioReport ApproxRatio(const MechanismId& f, const MetricGraph& g,
                        const LocationProfile& x, Objective objective) {
  if (!Applicable(f, g.topology())) {
    throw TopologyMismatchError(f.Name() + " is not defined on a " +
                                std::string(TopologyName(g.topology())));
  }
  return ApproxRatio(AsMechanism(f), g, x, objective);
}

std::size_t WorkerCount() {
  if (const char* env = std::getenv("NETLOC_THREADS")) {
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelFor(std::size_t count,
                 const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(WorkerCount(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace netloc
