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

// Empirical reproduction of the upper-bound summary table: for each
// (topology, objective, mechanism) cell, the worst ratio over random
// instances against the proven bound.

#ifndef NETLOC_TABLE_HPP_
#define NETLOC_TABLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netloc/costs.hpp"
#include "netloc/mechanisms.hpp"
#include "netloc/metric_graph.hpp"

namespace netloc {

struct TableOptions {
  std::size_t trials = 1000;
  std::size_t max_n = 8;
  std::uint64_t seed = 1;
};

struct TableRow {
  Topology topology = Topology::kLine;
  Objective objective = Objective::kSocial;
  std::string mechanism;
  // Human-readable bound, e.g. "2-2/n".
  std::string bound;
  std::size_t trials = 0;
  // Largest observed ratio and the agent count where it occurred.
  Ratio worst_ratio;
  std::size_t worst_n = 0;
  // Instances whose ratio exceeded the bound for their n.
  std::size_t violations = 0;
  // Ratio on the planted instance, when the cell has one, and the exact
  // value it must equal.
  std::optional<Ratio> planted_ratio;
  std::optional<Rational> planted_expected;
  bool pass = false;
};

struct TableResult {
  std::vector<TableRow> rows;
  bool pass = false;
};

// Optima come from the candidate and crossing solvers, independent of the
// mechanisms being scored.
TableResult RunTable1(const TableOptions& options);

}  // namespace netloc

#endif  // NETLOC_TABLE_HPP_
