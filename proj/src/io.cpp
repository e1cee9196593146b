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

#include "netloc/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "netloc/errors.hpp"

namespace netloc {
namespace {

std::string IdText(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("vertex ids must be integers or strings, got " + j.dump());
}

Json IdJson(const std::string& name) {
  const bool numeric = !name.empty() && name.size() < 18 &&
                       std::all_of(
                           name.begin(), name.end(),
                           [](char c) { return c >= '0' && c <= '9'; }) &&
                       (name == "0" || name[0] != '0');
  if (numeric) return Json(std::stoll(name));
  return Json(name);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "' in " + j.dump());
  }
  return j.at(key);
}

std::size_t IndexFromJson(const Json& j, const char* what) {
  if (!j.is_number_unsigned() &&
      !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

VertexId VertexByName(const MetricGraph& g, const Json& j) {
  const std::string name = IdText(j);
  const auto& names = g.vertex_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw InvalidPointError("unknown vertex '" + name + "'");
  return static_cast<VertexId>(it - names.begin());
}

Json GainList(const std::vector<Rational>& gains) {
  Json out = Json::array();
  for (const Rational& g : gains) out.push_back(RationalToJson(g));
  return out;
}

}  // namespace

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(
      "expected an exact number (fraction string or integer), got " + j.dump());
}

Json RationalToJson(const Rational& value) { return FormatRational(value); }

MetricGraph GraphFromJson(const Json& j) {
  const Json& vertices = Field(j, "vertices");
  const Json& edges = Field(j, "edges");
  if (!vertices.is_array() || !edges.is_array()) {
    throw ParseError("'vertices' and 'edges' must be arrays");
  }
  std::vector<std::string> names;
  std::map<std::string, VertexId> index;
  for (const Json& v : vertices) {
    std::string name = IdText(v);
    if (!index.emplace(name, names.size()).second) {
      throw ParseError("duplicate vertex id '" + name + "'");
    }
    names.push_back(std::move(name));
  }
  auto lookup = [&](const Json& v) {
    const auto it = index.find(IdText(v));
    if (it == index.end()) {
      throw InvalidGraphError("edge references unknown vertex " + v.dump());
    }
    return it->second;
  };
  std::vector<Edge> parsed;
  for (const Json& e : edges) {
    parsed.push_back({lookup(Field(e, "u")), lookup(Field(e, "v")),
                      RationalFromJson(Field(e, "length"))});
  }
  return MetricGraph(std::move(names), std::move(parsed));
}

Json GraphToJson(const MetricGraph& g) {
  Json vertices = Json::array();
  for (const std::string& name : g.vertex_names())
    vertices.push_back(IdJson(name));
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", IdJson(g.vertex_name(e.u))},
                     {"v", IdJson(g.vertex_name(e.v))},
                     {"length", RationalToJson(e.length)}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Point PointFromJson(const MetricGraph& g, const Json& j) {
  if (j.is_string() || j.is_number()) {
    return g.AtCoordinate(RationalFromJson(j));
  }
  if (!j.is_object()) throw ParseError("cannot read a point from " + j.dump());
  if (j.contains("vertex"))
    return Point::AtVertex(VertexByName(g, j.at("vertex")));
  if (j.contains("edge")) {
    return g.PointOn(IndexFromJson(j.at("edge"), "edge"),
                     RationalFromJson(Field(j, "offset")));
  }
  if (j.contains("position"))
    return g.AtCoordinate(RationalFromJson(j.at("position")));
  throw ParseError("a point needs 'vertex', 'edge' or 'position': " + j.dump());
}

Json PointToJson(const MetricGraph& g, const Point& p) {
  Json out = Json::object();
  if (p.is_vertex()) {
    out["vertex"] = IdJson(g.vertex_name(p.vertex()));
  } else {
    out["edge"] = p.edge();
    out["offset"] = RationalToJson(p.offset());
  }
  if (g.has_coordinates()) out["position"] = RationalToJson(g.Coordinate(p));
  return out;
}

Instance InstanceFromJson(const Json& j) {
  const Json& graph_json = j.contains("graph") ? j.at("graph") : j;
  MetricGraph g = GraphFromJson(graph_json);
  const Json& profile = Field(j, "profile");
  if (!profile.is_array()) throw ParseError("'profile' must be an array");
  std::vector<Point> points;
  for (const Json& p : profile) points.push_back(PointFromJson(g, p));
  LocationProfile x(std::move(points));
  ValidateProfile(g, x);
  return Instance{std::move(g), std::move(x)};
}

Json InstanceToJson(const Instance& instance) {
  Json profile = Json::array();
  for (const Point& p : instance.profile) {
    profile.push_back(PointToJson(instance.graph, p));
  }
  return {{"graph", GraphToJson(instance.graph)},
          {"profile", std::move(profile)}};
}

Json ParseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return InstanceFromJson(ParseJsonText(buffer.str()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

Json DistributionToJson(const MetricGraph& g, const LocationDistribution& P) {
  Json out = Json::array();
  for (const Outcome& o : P) {
    out.push_back({{"point", PointToJson(g, o.point)},
                   {"probability", RationalToJson(o.probability)}});
  }
  return out;
}

Json OptimumToJson(const MetricGraph& g, const Optimum& opt) {
  return {{"point", PointToJson(g, opt.point)},
          {"value", RationalToJson(opt.value)},
          {"approximate", opt.approximate}};
}

Json RatioToJson(const Ratio& r) { return r.ToString(); }

Json CostReportToJson(const MetricGraph& g, const CostReport& report) {
  return {{"social_cost", RationalToJson(report.social_cost)},
          {"max_cost", RationalToJson(report.max_cost)},
          {"per_agent", GainList(report.per_agent)},
          {"opt_social", OptimumToJson(g, report.opt_social)},
          {"opt_max", OptimumToJson(g, report.opt_max)},
          {"sc_ratio", RatioToJson(report.sc_ratio)},
          {"mc_ratio", RatioToJson(report.mc_ratio)}};
}

Json DeviationReportToJson(const MetricGraph& g, const DeviationReport& r) {
  Json sources = Json::array();
  for (CandidateSource s : r.candidate_sources) {
    sources.push_back(std::string(CandidateSourceName(s)));
  }
  Json out = {{"profitable", r.profitable},
              {"candidates_checked", r.candidates_checked},
              {"candidate_source", std::move(sources)},
              {"complete", r.complete}};
  if (r.best_deviation.has_value()) {
    const Deviation& d = *r.best_deviation;
    Json points = Json::array();
    for (const Point& p : d.points) points.push_back(PointToJson(g, p));
    out["best_deviation"] = {{"coalition", d.coalition},
                             {"points", std::move(points)},
                             {"gains", GainList(d.gains)},
                             {"gain", RationalToJson(d.min_gain())}};
  } else {
    out["best_deviation"] = nullptr;
  }
  const std::string scope =
      std::to_string(r.candidates_checked) + " candidate deviations";
  out["summary"] = r.profitable
                       ? "profitable deviation found among " + scope
                       : "no profitable deviation found among " + scope;
  return out;
}

Json GspWitnessToJson(const GspWitness& w) {
  return {{"witness_index", w.witness_index},
          {"lhs", RationalToJson(w.lhs)},
          {"rhs", RationalToJson(w.rhs)}};
}

Json ProfileChainToJson(const MetricGraph& g, const ProfileChain& chain) {
  Json levels = Json::array();
  for (const ChainLevel& level : chain.levels) {
    Json occupancy = Json::array();
    for (const auto& [v, count] : level.occupancy) {
      occupancy.push_back(
          {{"vertex", IdJson(g.vertex_name(v))}, {"agents", count}});
    }
    Json candidates = Json::array();
    for (const auto& [v, e] : level.candidates) {
      candidates.push_back({{"vertex", IdJson(g.vertex_name(v))},
                            {"expected_distance", RationalToJson(e)}});
    }
    Json gains = Json::array();
    for (const StepGain& s : level.gains) {
      gains.push_back({{"agent", s.agent},
                       {"from", IdJson(g.vertex_name(s.from))},
                       {"to", IdJson(g.vertex_name(s.to))},
                       {"stay_gain", RationalToJson(s.stay_gain)},
                       {"move_gain", RationalToJson(s.move_gain)},
                       {"profitable", s.profitable()}});
    }
    levels.push_back(
        {{"level", level.level},
         {"profile", std::move(occupancy)},
         {"selected_vertex", IdJson(g.vertex_name(level.selected))},
         {"expected_distance", RationalToJson(level.expected_distance)},
         {"candidates", std::move(candidates)},
         {"averaging_bound", RationalToJson(level.averaging_bound)},
         {"anchor_monotone", level.anchor_monotone},
         {"level_bound", RationalToJson(level.level_bound)},
         {"formula_value", RationalToJson(chain.formula_bound)},
         {"step_gains", std::move(gains)}});
  }
  Json path = Json::array();
  for (VertexId v : chain.chosen_path) path.push_back(IdJson(g.vertex_name(v)));
  return {{"m", chain.m},
          {"k", chain.k},
          {"n", chain.n},
          {"vertices", g.num_vertices()},
          {"mechanism", chain.mechanism},
          {"side", chain.left ? "left" : "right"},
          {"chosen_path", std::move(path)},
          {"levels", std::move(levels)},
          {"final_max_cost", RationalToJson(chain.final_max_cost)},
          {"reference_cost", RationalToJson(chain.reference_cost)},
          {"ratio_vs_reference", RatioToJson(chain.ratio_vs_reference)},
          {"optimum", OptimumToJson(g, chain.optimum)},
          {"ratio_vs_optimum", RatioToJson(chain.ratio_vs_optimum)},
          {"level_bound_ratio", RationalToJson(chain.level_bound_ratio)},
          {"formula_bound", RationalToJson(chain.formula_bound)},
          {"any_profitable_step", chain.any_profitable_step}};
}

}  // namespace netloc
