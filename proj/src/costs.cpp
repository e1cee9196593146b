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

#include "netloc/costs.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "netloc/circle_geometry.hpp"
#include "netloc/errors.hpp"
#include "netloc/mechanisms.hpp"

namespace netloc {
namespace {

// Distances from every agent to every vertex, so that the distance from an
// agent to any point of an edge is a constant-time formula.
class AgentTable {
 public:
  AgentTable(const MetricGraph& g, const LocationProfile& x) : g_(g), x_(x) {
    to_vertex_.reserve(x.size());
    for (const Point& p : x) to_vertex_.push_back(g.DistancesToVertices(p));
  }

  Rational AgentDistance(std::size_t i, EdgeId e, const Rational& t) const {
    const Edge& ed = g_.edge(e);
    Rational best = to_vertex_[i][ed.u] + t;
    Rational via_v = to_vertex_[i][ed.v] + ed.length - t;
    if (via_v < best) best = std::move(via_v);
    const Point& p = x_[i];
    if (!p.is_vertex() && p.edge() == e) {
      Rational direct = AbsDiff(p.offset(), t);
      if (direct < best) best = std::move(direct);
    }
    return best;
  }

  Rational Evaluate(Objective objective, EdgeId e, const Rational& t) const {
    Rational total = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      Rational d = AgentDistance(i, e, t);
      if (objective == Objective::kSocial) {
        total += d;
      } else if (d > total) {
        total = std::move(d);
      }
    }
    return total;
  }

  // Vertex points live at offset 0 of any incident edge.
  Rational EvaluateVertex(Objective objective, VertexId v) const {
    Rational total = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      const Rational& d = to_vertex_[i][v];
      if (objective == Objective::kSocial) {
        total += d;
      } else if (d > total) {
        total = d;
      }
    }
    return total;
  }

  const std::vector<Rational>& to_vertex(std::size_t i) const {
    return to_vertex_[i];
  }

 private:
  const MetricGraph& g_;
  const LocationProfile& x_;
  std::vector<std::vector<Rational>> to_vertex_;
};

// Keeps the smallest value, breaking ties by canonical point order.
class ArgMin {
 public:
  void Offer(Point p, Rational value) {
    if (!best_.has_value() || value < best_->value ||
        (value == best_->value && p < best_->point)) {
      best_ = Optimum{std::move(p), std::move(value), false};
    }
  }
  Optimum Take() {
    if (!best_.has_value()) throw Error("no candidate offered");
    return std::move(*best_);
  }

 private:
  std::optional<Optimum> best_;
};

Optimum CircleSocialOptimum(const MetricGraph& g, const LocationProfile& x) {
  const circle::Circle c = circle::Circle::Of(g);
  std::vector<Rational> positions;
  for (const Point& p : x) positions.push_back(g.Coordinate(p));
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  std::vector<Rational> candidates = positions;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    candidates.push_back(c.Antipode(positions[k]));
    const Rational& next = positions[(k + 1) % positions.size()];
    candidates.push_back(
        c.Normalize(positions[k] + c.Clockwise(positions[k], next) / 2));
  }
  ArgMin best;
  for (const Rational& z : candidates) {
    Point p = g.AtCoordinate(z);
    Rational value = SocialCost(g, p, x);
    best.Offer(std::move(p), std::move(value));
  }
  return best.Take();
}

Optimum CircleMaxOptimum(const MetricGraph& g, const LocationProfile& x) {
  const circle::Circle c = circle::Circle::Of(g);
  std::vector<Rational> positions;
  for (const Point& p : x) positions.push_back(g.Coordinate(p));
  const circle::Arc cover =
      circle::AnalyzeSemicircle(c, positions).covering_arc;
  // Off a semicircle this is also the center of the antipodes bounding the
  // longest gap.
  return Optimum{g.AtCoordinate(cover.start + cover.length / 2),
                 cover.length / 2, false};
}

}  // namespace

std::string_view ObjectiveName(Objective objective) {
  return objective == Objective::kSocial ? "social" : "max";
}

Rational ExpectedCost(const MetricGraph& g, const LocationDistribution& P,
                      const Point& p) {
  Rational total = 0;
  for (const Outcome& o : P) total += o.probability * g.Distance(o.point, p);
  return total;
}

Rational SocialCost(const MetricGraph& g, const Point& y,
                    const LocationProfile& x) {
  Rational total = 0;
  for (const Point& p : x) total += g.Distance(y, p);
  return total;
}

Rational SocialCost(const MetricGraph& g, const LocationDistribution& P,
                    const LocationProfile& x) {
  Rational total = 0;
  for (const Outcome& o : P) total += o.probability * SocialCost(g, o.point, x);
  return total;
}

Rational MaxCost(const MetricGraph& g, const Point& y,
                 const LocationProfile& x) {
  Rational best = 0;
  for (const Point& p : x) {
    Rational d = g.Distance(y, p);
    if (d > best) best = std::move(d);
  }
  return best;
}

Rational MaxCost(const MetricGraph& g, const LocationDistribution& P,
                 const LocationProfile& x) {
  Rational total = 0;
  for (const Outcome& o : P) total += o.probability * MaxCost(g, o.point, x);
  return total;
}

Rational Cost(Objective objective, const MetricGraph& g,
              const LocationDistribution& P, const LocationProfile& x) {
  return objective == Objective::kSocial ? SocialCost(g, P, x)
                                         : MaxCost(g, P, x);
}

Optimum OptimalSocial(const MetricGraph& g, const LocationProfile& x) {
  ValidateProfile(g, x);
  switch (g.topology()) {
    case Topology::kLine:
    case Topology::kTree: {
      Point p = TreeMedian(g, x);
      Rational value = SocialCost(g, p, x);
      return Optimum{std::move(p), std::move(value), false};
    }
    case Topology::kCircle:
      return CircleSocialOptimum(g, x);
    case Topology::kGeneral:
      return CandidateSocialOptimum(g, x);
  }
  throw Error("unhandled topology");
}

Optimum OptimalMax(const MetricGraph& g, const LocationProfile& x) {
  ValidateProfile(g, x);
  switch (g.topology()) {
    case Topology::kLine:
    case Topology::kTree: {
      Point p = TreeCenter(g, x);
      Rational value = MaxCost(g, p, x);
      return Optimum{std::move(p), std::move(value), false};
    }
    case Topology::kCircle:
      return CircleMaxOptimum(g, x);
    case Topology::kGeneral:
      return CrossingMaxOptimum(g, x);
  }
  throw Error("unhandled topology");
}

Optimum Optimal(Objective objective, const MetricGraph& g,
                const LocationProfile& x) {
  return objective == Objective::kSocial ? OptimalSocial(g, x)
                                         : OptimalMax(g, x);
}

Optimum CandidateSocialOptimum(const MetricGraph& g, const LocationProfile& x) {
  ValidateProfile(g, x);
  const AgentTable table(g, x);
  ArgMin best;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    best.Offer(Point::AtVertex(v), table.EvaluateVertex(Objective::kSocial, v));
  }
  for (const Point& p : x) {
    if (p.is_vertex()) continue;
    best.Offer(p, table.Evaluate(Objective::kSocial, p.edge(), p.offset()));
  }
  return best.Take();
}

Optimum CrossingMaxOptimum(const MetricGraph& g, const LocationProfile& x) {
  ValidateProfile(g, x);
  const AgentTable table(g, x);
  ArgMin best;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    best.Offer(Point::AtVertex(v), table.EvaluateVertex(Objective::kMax, v));
  }
  std::vector<Rational> rising;
  std::vector<Rational> falling;
  std::vector<Rational> crossings;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    rising.clear();
    falling.clear();
    for (std::size_t i = 0; i < x.size(); ++i) {
      // Rising lines c + t, falling lines c - t.
      rising.push_back(table.to_vertex(i)[ed.u]);
      falling.push_back(table.to_vertex(i)[ed.v] + ed.length);
      if (!x[i].is_vertex() && x[i].edge() == e) {
        rising.push_back(-x[i].offset());
        falling.push_back(x[i].offset());
      }
    }
    std::sort(rising.begin(), rising.end());
    rising.erase(std::unique(rising.begin(), rising.end()), rising.end());
    std::sort(falling.begin(), falling.end());
    falling.erase(std::unique(falling.begin(), falling.end()), falling.end());
    crossings.clear();
    for (const Rational& r : rising) {
      for (const Rational& f : falling) {
        Rational t = (f - r) / 2;
        if (t > 0 && t < ed.length) crossings.push_back(std::move(t));
      }
    }
    std::sort(crossings.begin(), crossings.end());
    crossings.erase(std::unique(crossings.begin(), crossings.end()),
                    crossings.end());
    for (const Rational& t : crossings) {
      best.Offer(Point::Interior(e, t), table.Evaluate(Objective::kMax, e, t));
    }
  }
  return best.Take();
}

Optimum GridOptimum(Objective objective, const MetricGraph& g,
                    const LocationProfile& x, const Rational& resolution) {
  ValidateProfile(g, x);
  const AgentTable table(g, x);
  ArgMin best;
  for (const Point& p : g.GridPoints(resolution)) {
    Rational value = p.is_vertex()
                         ? table.EvaluateVertex(objective, p.vertex())
                         : table.Evaluate(objective, p.edge(), p.offset());
    best.Offer(p, std::move(value));
  }
  Optimum out = best.Take();
  out.approximate = true;
  return out;
}

Ratio Ratio::Of(const Rational& cost, const Rational& optimum) {
  if (optimum == 0) {
    return cost == 0 ? Ratio{false, Rational(1)} : Ratio{true, Rational(0)};
  }
  return Ratio{false, cost / optimum};
}

std::string Ratio::ToString() const {
  return infinite ? std::string("inf") : FormatRational(value);
}

CostReport EvaluateCosts(const MetricGraph& g, const LocationDistribution& P,
                         const LocationProfile& x) {
  CostReport report;
  report.per_agent.reserve(x.size());
  for (const Point& p : x) report.per_agent.push_back(ExpectedCost(g, P, p));
  report.social_cost = 0;
  for (const Rational& c : report.per_agent) report.social_cost += c;
  report.max_cost = MaxCost(g, P, x);
  report.opt_social = OptimalSocial(g, x);
  report.opt_max = OptimalMax(g, x);
  report.sc_ratio = Ratio::Of(report.social_cost, report.opt_social.value);
  report.mc_ratio = Ratio::Of(report.max_cost, report.opt_max.value);
  return report;
}

}  // namespace netloc
