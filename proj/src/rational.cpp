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

#include "netloc/rational.hpp"

#include <algorithm>
#include <cctype>

#include "netloc/errors.hpp"

namespace netloc {
namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = Trim(text);
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) {
      throw ParseError("not a fraction: '" + original + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: '" + original + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !AllDigits(whole)) || !AllDigits(frac)) {
      throw ParseError("not a decimal: '" + original + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const std::string digits = std::string(whole) + std::string(frac);
    result = Rational(mpz_class(digits, 10), scale);
  } else {
    if (!AllDigits(s)) throw ParseError("not a number: '" + original + "'");
    result = Rational(mpz_class(std::string(s), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string FormatRational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

Rational PowerOfTwo(unsigned exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, exponent);
  return Rational(p);
}

}  // namespace netloc
