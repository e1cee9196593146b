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

#include "netloc/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "netloc/circle_geometry.hpp"
#include "netloc/costs.hpp"
#include "netloc/errors.hpp"
#include "netloc/io.hpp"
#include "netloc/lowerbound.hpp"
#include "netloc/mechanisms.hpp"
#include "netloc/rng.hpp"
#include "netloc/table.hpp"
#include "netloc/verify.hpp"

namespace netloc {
namespace {

struct RunArgs {
  std::string instance;
  std::string mechanism;
  std::optional<std::uint64_t> seed;
};

struct VerifyArgs {
  std::string instance;
  std::string mechanism;
  std::string resolution;
  std::size_t coalition = 1;
  std::uint64_t budget = 1'000'000;
};

struct LowerBoundArgs {
  std::optional<std::size_t> m;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::string mechanism = "tree-center-lottery";
  bool fine = false;
};

struct TableArgs {
  std::string suite = "table1";
  std::size_t trials = 1000;
  std::size_t max_n = 8;
  std::uint64_t seed = 1;
  std::string format = "json";
};

struct GspArgs {
  std::string instance;
  std::string circumference = "1";
  std::string x;
  std::string y;
};

std::vector<Rational> ParseList(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw ParseError("empty list entry");
    out.push_back(ParseRational(item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw ParseError("empty position list");
  return out;
}

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int CmdRun(const RunArgs& a, std::ostream& out) {
  const Instance inst = LoadInstance(a.instance);
  const MechanismId id = MechanismId::Parse(a.mechanism);
  const LocationDistribution P = RunMechanism(id, inst.graph, inst.profile);
  Json report = {
      {"mechanism", id.Name()},
      {"topology", std::string(TopologyName(inst.graph.topology()))},
      {"n", inst.profile.size()},
      {"distribution", DistributionToJson(inst.graph, P)},
      {"costs", CostReportToJson(inst.graph,
                                 EvaluateCosts(inst.graph, P, inst.profile))}};
  if (a.seed.has_value()) {
    Rng rng(*a.seed);
    report["sample"] = {{"seed", *a.seed},
                        {"generator", "splitmix64"},
                        {"point", PointToJson(inst.graph, Sample(P, rng))}};
  }
  Emit(out, report);
  return kExitOk;
}

int CmdVerify(const VerifyArgs& a, std::ostream& out) {
  const Instance inst = LoadInstance(a.instance);
  const MechanismId id = MechanismId::Parse(a.mechanism);
  if (!Applicable(id, inst.graph.topology())) {
    throw TopologyMismatchError(
        id.Name() + " is not defined on a " +
        std::string(TopologyName(inst.graph.topology())));
  }
  // Joint deviations grow as candidates^k, so coalitions default to the
  // structural points alone.
  std::optional<Rational> resolution;
  if (!a.resolution.empty()) {
    resolution = ParseRational(a.resolution);
    if (*resolution <= 0)
      throw InvalidParameterError("resolution must be positive");
  } else if (a.coalition <= 1) {
    resolution = inst.graph.longest_edge() / 1000;
  }
  const CandidateSet candidates =
      DeviationCandidates(inst.graph, inst.profile, resolution);
  const DeviationReport report =
      a.coalition <= 1 ? CheckSp(id, inst.graph, inst.profile, candidates)
                       : CheckGsp(id, inst.graph, inst.profile, a.coalition,
                                  candidates, a.budget);
  Json j = DeviationReportToJson(inst.graph, report);
  j["mechanism"] = id.Name();
  j["coalition_bound"] = a.coalition;
  if (resolution.has_value()) j["resolution"] = RationalToJson(*resolution);
  Emit(out, j);
  if (report.profitable) return kExitFound;
  return report.complete ? kExitOk : kExitBudget;
}

int CmdLowerBound(const LowerBoundArgs& a, std::ostream& out) {
  ChainParameters p;
  if (a.m.has_value() && a.k.has_value()) {
    p.m = *a.m;
    p.k = *a.k;
    if (a.n.has_value()) {
      p.n = *a.n;
    } else {
      p.n = 2;
      for (std::size_t d = 0; d < p.k; ++d) p.n *= p.m;
    }
  } else if (a.m.has_value() || a.k.has_value()) {
    throw InvalidParameterError("--m and --k must be given together");
  } else if (a.n.has_value()) {
    p = AutoParameters(*a.n);
  } else {
    throw InvalidParameterError(
        "give --m and --k, or --n for automatic parameters");
  }
  const LowerBoundInstance inst = BuildTree(p.m, p.k);
  const ProfileChain chain =
      BuildProfileChain(inst, p.n, MechanismId::Parse(a.mechanism),
                        a.fine ? ChainMode::kFine : ChainMode::kBlock);
  Emit(out, ProfileChainToJson(inst.graph, chain));
  return kExitOk;
}

std::string Describe(const Ratio& r) { return r.ToString(); }

int CmdTable(const TableArgs& a, std::ostream& out) {
  if (a.suite != "table1")
    throw InvalidParameterError("unknown suite '" + a.suite + "'");
  if (a.format != "json" && a.format != "text") {
    throw InvalidParameterError("format must be json or text");
  }
  const TableResult result = RunTable1({a.trials, a.max_n, a.seed});
  if (a.format == "text") {
    out << std::left << std::setw(9) << "topology" << std::setw(8) << "cost"
        << std::setw(21) << "mechanism" << std::setw(11) << "bound"
        << std::setw(12) << "worst" << std::setw(10) << "planted"
        << "status\n";
    for (const TableRow& row : result.rows) {
      out << std::setw(9) << TopologyName(row.topology) << std::setw(8)
          << ObjectiveName(row.objective) << std::setw(21) << row.mechanism
          << std::setw(11) << row.bound << std::setw(12)
          << Describe(row.worst_ratio) << std::setw(10)
          << (row.planted_ratio ? Describe(*row.planted_ratio) : "-")
          << (row.pass ? "pass" : "FAIL") << "\n";
    }
    out << (result.pass ? "all cells pass" : "some cells FAIL") << "\n";
  } else {
    Json rows = Json::array();
    for (const TableRow& row : result.rows) {
      Json r = {{"topology", std::string(TopologyName(row.topology))},
                {"objective", std::string(ObjectiveName(row.objective))},
                {"mechanism", row.mechanism},
                {"bound", row.bound},
                {"trials", row.trials},
                {"worst_ratio", RatioToJson(row.worst_ratio)},
                {"worst_n", row.worst_n},
                {"violations", row.violations},
                {"pass", row.pass}};
      if (row.planted_ratio) {
        r["planted_ratio"] = RatioToJson(*row.planted_ratio);
        r["planted_expected"] = RationalToJson(*row.planted_expected);
      }
      rows.push_back(std::move(r));
    }
    Emit(out, {{"suite", a.suite},
               {"seed", a.seed},
               {"trials", a.trials},
               {"max_n", a.max_n},
               {"rows", std::move(rows)},
               {"pass", result.pass}});
  }
  return result.pass ? kExitOk : kExitFound;
}

int CmdGsp(const GspArgs& a, std::ostream& out) {
  Rational c;
  std::vector<Rational> x;
  if (!a.instance.empty()) {
    const Instance inst = LoadInstance(a.instance);
    c = circle::Circle::Of(inst.graph).circumference();
    for (const Point& p : inst.profile) x.push_back(inst.graph.Coordinate(p));
  } else {
    c = ParseRational(a.circumference);
    if (a.x.empty()) throw InvalidParameterError("give --instance or --x");
    x = ParseList(a.x);
  }
  const std::vector<Rational> y = ParseList(a.y);
  Json xs = Json::array();
  Json ys = Json::array();
  for (const Rational& v : x) xs.push_back(RationalToJson(v));
  for (const Rational& v : y) ys.push_back(RationalToJson(v));
  Json j = {{"circumference", RationalToJson(c)}, {"x", xs}, {"y", ys}};
  try {
    const GspWitness w = GspCircleWitness(c, x, y);
    j["found"] = true;
    j["witness"] = GspWitnessToJson(w);
    Emit(out, j);
    return kExitOk;
  } catch (const NoWitnessError& e) {
    j["found"] = false;
    j["witness"] = nullptr;
    Emit(out, j);
    return kExitFound;
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Strategyproof facility location on metric networks"};
  app.require_subcommand(1);

  RunArgs run;
  CLI::App* run_cmd =
      app.add_subcommand("run", "Run a mechanism and report exact costs");
  run_cmd->add_option("--instance", run.instance, "Instance JSON file")
      ->required();
  run_cmd->add_option("--mechanism", run.mechanism, "Mechanism name")
      ->required();
  run_cmd->add_option("--seed", run.seed, "Draw one outcome with this seed");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-sp", "Search for profitable (joint) misreports");
  verify_cmd->add_option("--instance", verify.instance, "Instance JSON file")
      ->required();
  verify_cmd->add_option("--mechanism", verify.mechanism, "Mechanism name")
      ->required();
  verify_cmd->add_option(
      "--resolution", verify.resolution,
      "Grid spacing as a fraction; default longest edge / 1000 "
      "for single agents, structural points only for coalitions");
  verify_cmd
      ->add_option("--coalition", verify.coalition, "Largest coalition size")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--budget", verify.budget,
                         "Maximum mechanism evaluations");

  LowerBoundArgs lb;
  CLI::App* lb_cmd =
      app.add_subcommand("lowerbound", "Trace the lower-bound profile chain");
  lb_cmd->add_option("--m", lb.m, "Branching factor");
  lb_cmd->add_option("--k", lb.k, "Depth");
  lb_cmd->add_option("--n", lb.n,
                     "Agents; alone it selects m and k automatically");
  lb_cmd->add_option("--mechanism", lb.mechanism, "Mechanism name");
  lb_cmd->add_flag("--fine", lb.fine,
                   "Move agents one at a time and audit each step");

  TableArgs table;
  CLI::App* table_cmd =
      app.add_subcommand("table", "Empirical approximation-ratio table");
  table_cmd->add_option("--suite", table.suite, "Suite name (table1)");
  table_cmd->add_option("--trials", table.trials, "Random instances per cell");
  table_cmd->add_option("--max-n", table.max_n, "Largest agent count");
  table_cmd->add_option("--seed", table.seed, "Base seed");
  table_cmd->add_option("--format", table.format, "json or text");

  GspArgs gsp;
  CLI::App* gsp_cmd = app.add_subcommand(
      "gsp-circle", "Find the witness agent for a joint circle deviation");
  gsp_cmd->add_option("--instance", gsp.instance,
                      "Circle instance holding the truthful profile");
  gsp_cmd->add_option("--circumference", gsp.circumference,
                      "Circumference without --instance");
  gsp_cmd->add_option("--x", gsp.x, "Truthful positions, comma separated");
  gsp_cmd->add_option("--y", gsp.y, "Reported positions, comma separated")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*run_cmd) return CmdRun(run, out);
    if (*verify_cmd) return CmdVerify(verify, out);
    if (*lb_cmd) return CmdLowerBound(lb, out);
    if (*table_cmd) return CmdTable(table, out);
    if (*gsp_cmd) return CmdGsp(gsp, out);
  } catch (const TopologyMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kExitTopology;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace netloc
