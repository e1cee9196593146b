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

#ifndef NETLOC_RATIONAL_HPP_
#define NETLOC_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace netloc {

// Every length, coordinate and probability in the library is exact.
using Rational = mpq_class;

// Accepts "p/q", integers, and finite decimal literals such as "0.275"
// (converted exactly). Throws ParseError on anything else or a zero
// denominator.
Rational ParseRational(std::string_view text);

// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string FormatRational(const Rational& value);

inline std::strong_ordering Compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline Rational AbsDiff(const Rational& a, const Rational& b) {
  return a < b ? Rational(b - a) : Rational(a - b);
}

// num / den in lowest terms; den must be nonzero.
inline Rational Fraction(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// 2^exponent for exponent >= 0.
Rational PowerOfTwo(unsigned exponent);

}  // namespace netloc

#endif  // NETLOC_RATIONAL_HPP_
