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

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "netloc/cli.hpp"
#include "netloc/errors.hpp"
#include "netloc/instances.hpp"
#include "netloc/io.hpp"
#include "oracles.hpp"

#ifndef NETLOC_TEST_DATA
#error "NETLOC_TEST_DATA must name the test data directory"
#endif

namespace netloc {
namespace {

using oracle::Q;

std::string Data(const std::string& name) {
  return std::string(NETLOC_TEST_DATA) + "/" + name;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
  Json json() const { return ParseJsonText(out); }
};

CliResult Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "netloc");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST_CASE("rational parsing") {
  CHECK(RationalFromJson(Json("3/10")) == Q(3, 10));
  CHECK(RationalFromJson(Json("6/20")) == Q(3, 10));
  CHECK(RationalFromJson(Json("0.55")) == Q(11, 20));
  CHECK(RationalFromJson(Json(2)) == 2);
  CHECK(RationalToJson(Q(3, 10)) == Json("3/10"));
  CHECK(RationalToJson(Q(2)) == Json("2"));
  CHECK_THROWS_AS(RationalFromJson(Json("1/0")), ParseError);
  CHECK_THROWS_AS(RationalFromJson(Json("abc")), ParseError);
  CHECK_THROWS_AS(RationalFromJson(Json(true)), ParseError);
}

TEST_CASE("point forms") {
  const MetricGraph line = MetricGraph::Segment(2);
  CHECK(PointFromJson(line, Json("1/2")) == line.PointOn(0, Q(1, 2)));
  CHECK(PointFromJson(line, Json{{"vertex", 1}}) == Point::AtVertex(1));
  CHECK(PointFromJson(line, Json{{"edge", 0}, {"offset", "2"}}) ==
        Point::AtVertex(1));
  CHECK(PointFromJson(line, Json{{"position", "0"}}) == Point::AtVertex(0));
  CHECK_THROWS_AS(PointFromJson(line, Json{{"edge", 0}, {"offset", "3"}}),
                  Error);
  CHECK_THROWS_AS(PointFromJson(line, Json{{"vertex", 5}}), Error);
}

TEST_CASE("instance serialization round trips") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Rng rng(seed);
    const MetricGraph g = RandomGraph(static_cast<Topology>(seed % 4), rng);
    const Instance inst{g, RandomProfile(g, 1 + rng.Below(6), rng)};
    const Json once = InstanceToJson(inst);
    const Instance back = InstanceFromJson(ParseJsonText(once.dump()));
    CHECK(back.profile == inst.profile);
    CHECK(back.graph.edges().size() == g.edges().size());
    CHECK(InstanceToJson(back) == once);
  }
}

TEST_CASE("loading instances") {
  const Instance a = LoadInstance(Data("circle_rc.json"));
  CHECK(a.graph.topology() == Topology::kCircle);
  CHECK(a.graph.Coordinate(a.profile[2]) == Q(11, 20));
  CHECK_THROWS_AS(LoadInstance(Data("malformed.json")), Error);
  CHECK_THROWS_AS(LoadInstance(Data("missing.json")), Error);
  CHECK_THROWS_AS(ParseJsonText("{"), ParseError);
}

TEST_CASE("cli run") {
  const CliResult r = Cli({"run", "--instance", Data("circle_rd_tight.json"),
                           "--mechanism", "random-dictator", "--seed", "7"});
  REQUIRE(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j["costs"]["sc_ratio"] == "4/3");
  CHECK(j["costs"]["social_cost"] == "2/5");
  CHECK(j["distribution"].size() == 2);
  const CliResult again =
      Cli({"run", "--instance", Data("circle_rd_tight.json"), "--mechanism",
           "random-dictator", "--seed", "7"});
  CHECK(again.out == r.out);

  const CliResult lrm =
      Cli({"run", "--instance", Data("line_lrm.json"), "--mechanism", "lrm"});
  CHECK(lrm.code == kExitOk);
  CHECK(lrm.json()["costs"]["mc_ratio"] == "3/2");
}

TEST_CASE("cli exit codes") {
  CHECK(Cli({"verify-sp", "--instance", Data("line_lrm.json"), "--mechanism",
             "lrm"})
            .code == kExitOk);
  CHECK(Cli({"verify-sp", "--instance", Data("single_agent.json"),
             "--mechanism", "tree-median"})
            .code == kExitOk);
  const CliResult star =
      Cli({"verify-sp", "--instance", Data("star3.json"), "--mechanism",
           "random-dictator", "--coalition", "3"});
  CHECK(star.code == kExitFound);
  CHECK(star.json()["profitable"] == true);
  CHECK(Cli({"verify-sp", "--instance", Data("circle_rc.json"), "--mechanism",
             "random-dictator", "--coalition", "3", "--budget", "10"})
            .code == kExitBudget);
  CHECK(Cli({"run", "--instance", Data("malformed.json"), "--mechanism", "lrm"})
            .code == kExitParse);
  CHECK(Cli({"run", "--instance", Data("star3.json"), "--mechanism", "lrm"})
            .code == kExitTopology);
  CHECK(Cli({"run", "--instance", Data("star3.json"), "--mechanism", "nope"})
            .code == kExitParse);
  CHECK(Cli({"lowerbound", "--m", "3", "--k", "2", "--n", "17"}).code ==
        kExitParse);
  CHECK(Cli({"lowerbound", "--m", "3"}).code == kExitParse);
  CHECK(Cli({"frobnicate"}).code == kExitParse);
  CHECK(Cli({"gsp-circle", "--x", "0,2/5", "--y", "1/5"}).code == kExitParse);
  CHECK(Cli({"table", "--format", "xml"}).code == kExitParse);
}

TEST_CASE("cli lowerbound") {
  const CliResult r = Cli({"lowerbound", "--m", "3", "--k", "2"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.json()["n"] == 18);
  CHECK(r.json()["formula_bound"] == "5/12");
  CHECK(Cli({"lowerbound", "--n", "40", "--fine"}).code == kExitOk);
}

TEST_CASE("cli gsp-circle") {
  const CliResult r = Cli({"gsp-circle", "--x", "0,2/5", "--y", "1/5,1/5"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.json()["witness"]["lhs"] == "2/5");
  const CliResult i = Cli({"gsp-circle", "--instance", Data("circle_rc.json"),
                           "--y", "0.1,0.2,0.3"});
  CHECK(i.code == kExitOk);
  CHECK(i.json()["found"] == true);
}

TEST_CASE("cli table is deterministic") {
  const std::vector<std::string> args{"table", "--trials", "25", "--max-n",
                                      "5",     "--seed",   "9"};
  const CliResult a = Cli(args);
  const CliResult b = Cli(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.json()["rows"].size() == 13);
  CHECK(a.json()["pass"] == true);
  CHECK(Cli({"table", "--trials", "5", "--format", "text"})
            .out.find("all cells pass") != std::string::npos);
}

}  // namespace
}  // namespace netloc
