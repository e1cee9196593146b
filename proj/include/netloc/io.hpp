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

// JSON for instances and reports. Every number that is not an index or a
// count is written as an exact fraction string such as "3/10".
//
// Graph:   {"vertices": [0, 1, ...], "edges": [{"u": 0, "v": 1, "length":
// "1/2"}]} Point:   {"vertex": 0} | {"edge": 2, "offset": "1/4"} | {"position":
// "3/10"}
//          | "3/10"  (positions are line or circle coordinates)
// Instance: {"graph": <graph>, "profile": [<point>, ...]}; the graph keys may
//          also sit at the top level next to "profile".

#ifndef NETLOC_IO_HPP_
#define NETLOC_IO_HPP_

#include <json.hpp>
#include <optional>
#include <string>

#include "netloc/costs.hpp"
#include "netloc/distribution.hpp"
#include "netloc/lowerbound.hpp"
#include "netloc/metric_graph.hpp"
#include "netloc/verify.hpp"

namespace netloc {

using Json = nlohmann::ordered_json;

struct Instance {
  MetricGraph graph;
  LocationProfile profile;
};

// Strings go through ParseRational; integral JSON numbers are accepted, any
// other number is a ParseError.
Rational RationalFromJson(const Json& j);
Json RationalToJson(const Rational& value);

MetricGraph GraphFromJson(const Json& j);
Json GraphToJson(const MetricGraph& g);

Point PointFromJson(const MetricGraph& g, const Json& j);
// Canonical edge/vertex form; graphs with coordinates also get "position".
Json PointToJson(const MetricGraph& g, const Point& p);

Instance InstanceFromJson(const Json& j);
Json InstanceToJson(const Instance& instance);
// Reads and parses a file; ParseError on I/O or syntax problems.
Instance LoadInstance(const std::string& path);
Json ParseJsonText(const std::string& text);

Json DistributionToJson(const MetricGraph& g, const LocationDistribution& P);
Json OptimumToJson(const MetricGraph& g, const Optimum& opt);
Json RatioToJson(const Ratio& r);
Json CostReportToJson(const MetricGraph& g, const CostReport& report);
Json DeviationReportToJson(const MetricGraph& g, const DeviationReport& r);
Json GspWitnessToJson(const GspWitness& w);
Json ProfileChainToJson(const MetricGraph& g, const ProfileChain& chain);

}  // namespace netloc

#endif  // NETLOC_IO_HPP_
