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

// The netloc command line. Reports go to `out` as JSON; diagnostics go to
// `err`.
//
// Exit codes:
//   0  success, or no profitable deviation found
//   1  profitable deviation found, table cell failed, or no GSP witness
//   2  malformed input or invalid parameters (including divisibility)
//   3  mechanism not defined on the instance's topology
//   4  deviation budget exhausted before the search finished

#ifndef NETLOC_CLI_HPP_
#define NETLOC_CLI_HPP_

#include <ostream>

namespace netloc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFound = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitTopology = 3;
inline constexpr int kExitBudget = 4;

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace netloc

#endif  // NETLOC_CLI_HPP_
