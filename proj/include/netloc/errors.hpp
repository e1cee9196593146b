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

#ifndef NETLOC_ERRORS_HPP_
#define NETLOC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace netloc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (fractions, JSON instances, CLI arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Graph construction failed: unknown endpoints, non-positive lengths,
// disconnected, or a multigraph that is not a single cycle.
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

// A point refers to an unknown edge or an offset outside the edge.
class InvalidPointError : public Error {
 public:
  using Error::Error;
};

// Empty profile, bad agent index, or a profile that violates an operation's
// precondition (e.g. duplicate points where distinct ones are required).
class InvalidProfileError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked on a graph of the wrong shape.
class TopologyMismatchError : public Error {
 public:
  using Error::Error;
};

// The center of two antipodal circle points was requested without an arc.
class AmbiguousCenterError : public Error {
 public:
  using Error::Error;
};

// Numeric parameters out of range (lower-bound construction, resolutions).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// No agent satisfies the circle group-strategyproofness inequality. Never
// expected to fire; a throw would be a counterexample to the witness property.
class NoWitnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace netloc

#endif  // NETLOC_ERRORS_HPP_
