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

#include "netloc/circle_geometry.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "netloc/errors.hpp"

namespace netloc::circle {

Circle::Circle(Rational circumference)
    : circumference_(std::move(circumference)) {
  if (circumference_ <= 0) {
    throw InvalidParameterError("circumference must be positive");
  }
}

Circle Circle::Of(const MetricGraph& g) {
  if (g.topology() != Topology::kCircle) {
    throw TopologyMismatchError("expected a circle, got " +
                                std::string(TopologyName(g.topology())));
  }
  return Circle(g.chain_length());
}

Rational Circle::Normalize(const Rational& position) const {
  if (position >= 0 && position < circumference_) return position;
  Rational q = position / circumference_;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return position - Rational(f) * circumference_;
}

Rational Circle::Antipode(const Rational& position) const {
  return Normalize(position + circumference_ / 2);
}

Rational Circle::Clockwise(const Rational& a, const Rational& b) const {
  return Normalize(b - a);
}

Rational Circle::Distance(const Rational& a, const Rational& b) const {
  Rational cw = Clockwise(a, b);
  Rational ccw = circumference_ - cw;
  return cw <= ccw ? cw : ccw;
}

Rational Circle::Center(const Rational& a, const Rational& b,
                        std::optional<ArcSelector> arc) const {
  const Rational cw = Clockwise(a, b);
  const Rational half = circumference_ / 2;
  if (cw < half) return Normalize(a + cw / 2);
  if (cw > half) return Normalize(a - (circumference_ - cw) / 2);
  if (!arc.has_value()) {
    throw AmbiguousCenterError("antipodal points have two centers");
  }
  const Rational quarter = circumference_ / 4;
  return Normalize(*arc == ArcSelector::kClockwise ? Rational(a + quarter)
                                                   : Rational(a - quarter));
}

Rational Arc::End(const Circle& circle) const {
  return circle.Normalize(clockwise ? Rational(start + length)
                                    : Rational(start - length));
}

bool Arc::Contains(const Circle& circle, const Rational& position) const {
  const Rational t = clockwise ? circle.Clockwise(start, position)
                               : circle.Clockwise(position, start);
  if (t == 0) return start_closed || (length == 0 && end_closed);
  if (t < length) return true;
  if (t == length) return end_closed;
  return false;
}

Arc ShortArc(const Circle& circle, const Rational& a, const Rational& b,
             bool closed) {
  const Rational cw = circle.Clockwise(a, b);
  const Rational half = circle.circumference() / 2;
  if (cw == half) {
    throw AmbiguousCenterError("short arc between antipodal points");
  }
  if (cw < half) return Arc{circle.Normalize(a), cw, true, closed, closed};
  return Arc{circle.Normalize(a), circle.circumference() - cw, false, closed,
             closed};
}

SemicircleAnalysis AnalyzeSemicircle(const Circle& circle,
                                     std::span<const Rational> positions) {
  if (positions.empty()) {
    throw InvalidProfileError("semicircle analysis needs at least one agent");
  }
  std::vector<Rational> sorted;
  sorted.reserve(positions.size());
  for (const Rational& p : positions) sorted.push_back(circle.Normalize(p));
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const Rational& c = circle.circumference();
  SemicircleAnalysis out;
  if (sorted.size() == 1) {
    out.longest_gap = c;
    out.covering_arc = Arc{sorted.front(), Rational(0), true, true, true};
    out.on_semicircle = true;
    return out;
  }
  // Gap k runs clockwise from sorted[k] to sorted[k+1]; the covering arc
  // starts at sorted[k+1]. Scanning k so that starts increase makes the
  // first strict maximum the tie-break winner.
  const std::size_t n = sorted.size();
  std::size_t best = n;
  Rational best_gap;
  Rational best_start;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t next = (k + 1) % n;
    Rational gap = next == 0 ? Rational(sorted[0] + c - sorted[k])
                             : Rational(sorted[next] - sorted[k]);
    if (best == n || gap > best_gap ||
        (gap == best_gap && sorted[next] < best_start)) {
      best = k;
      best_gap = std::move(gap);
      best_start = sorted[next];
    }
  }
  out.longest_gap = best_gap;
  out.covering_arc = Arc{best_start, c - best_gap, true, true, true};
  out.on_semicircle = out.covering_arc.length * 2 <= c;
  return out;
}

namespace {

void RequireGeneralPosition(const Circle& circle, std::span<const Rational> x) {
  if (x.size() < 2) {
    throw InvalidProfileError("nearly-antipodal pairs need at least 2 points");
  }
  std::vector<Rational> sorted;
  for (const Rational& p : x) sorted.push_back(circle.Normalize(p));
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidProfileError("nearly-antipodal pairs need distinct points");
  }
  for (const Rational& p : sorted) {
    if (std::binary_search(sorted.begin(), sorted.end(), circle.Antipode(p))) {
      throw InvalidProfileError(
          "nearly-antipodal pairs need pairwise non-antipodal points");
    }
  }
}

struct Marker {
  Rational position;
  bool antipode;
  std::size_t index;
};

}  // namespace

NearlyAntipodalStructure NearlyAntipodalPairs(
    const Circle& circle, std::span<const Rational> x,
    std::optional<std::span<const Rational>> y) {
  RequireGeneralPosition(circle, x);
  const std::size_t n = x.size();
  std::vector<Marker> markers;
  markers.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    markers.push_back({circle.Normalize(x[i]), false, i});
    markers.push_back({circle.Antipode(x[i]), true, i});
  }
  std::sort(
      markers.begin(), markers.end(),
      [](const Marker& a, const Marker& b) { return a.position < b.position; });
  std::set<std::pair<std::size_t, std::size_t>> found;
  for (std::size_t k = 0; k < markers.size(); ++k) {
    const Marker& a = markers[k];
    const Marker& b = markers[(k + 1) % markers.size()];
    if (a.antipode == b.antipode || a.index == b.index) continue;
    found.insert(std::minmax(a.index, b.index));
  }

  NearlyAntipodalStructure out;
  const Rational& c = circle.circumference();
  for (const auto& [i, j] : found) {
    // crit = G minus carc[x^_i, x^_j]: the long open arc.
    const Rational ai = circle.Antipode(x[i]);
    const Rational aj = circle.Antipode(x[j]);
    const Rational cw = circle.Clockwise(ai, aj);
    Arc crit = cw * 2 < c ? Arc{aj, c - cw, true, false, false}
                          : Arc{ai, cw, true, false, false};
    out.pairs.push_back({i, j, std::move(crit)});
  }
  out.membership_x = CriticalMembershipCounts(circle, out, x);
  if (y.has_value()) {
    out.membership_y = CriticalMembershipCounts(circle, out, *y);
  }
  return out;
}

std::vector<std::size_t> CriticalMembershipCounts(
    const Circle& circle, const NearlyAntipodalStructure& structure,
    std::span<const Rational> points) {
  std::vector<std::size_t> counts;
  counts.reserve(structure.pairs.size());
  for (const NearlyAntipodalPair& pair : structure.pairs) {
    std::size_t count = 0;
    for (const Rational& p : points) {
      if (pair.critical_arc.Contains(circle, p)) ++count;
    }
    counts.push_back(count);
  }
  return counts;
}

Rational CenterLotteryCost(std::span<const Rational> breakpoints) {
  Rational total = 0;
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    const Rational width = breakpoints[k + 1] - breakpoints[k];
    if (width < 0) {
      throw InvalidParameterError("breakpoints must be nondecreasing");
    }
    total += width * (breakpoints[k] - breakpoints[0] + width / 2);
  }
  return total;
}

}  // namespace netloc::circle
