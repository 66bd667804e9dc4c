// Copyright 2026 The TVDP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tvdp/curves.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "tvdp/log_math.h"

namespace tvdp {
namespace {

constexpr double kIdentitySlack = 1e-12;

double Clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Twice the signed area of (o, a, b); positive for a counter-clockwise turn.
long double Cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<long double>(a.x - o.x) * (b.y - o.y) -
         static_cast<long double>(a.y - o.y) * (b.x - o.x);
}

// Lower convex hull by monotone chain. Equal x keeps the lowest y.
std::vector<Point> LowerHull(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<Point> hull;
  hull.reserve(points.size());
  for (const Point& p : points) {
    if (!hull.empty() && hull.back().x == p.x) continue;
    while (hull.size() >= 2 && Cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  for (Point& p : hull) p.y = Clamp01(p.y);
  return hull;
}

// Value of the piecewise-linear function through sorted `v` at t in [0, 1].
double Interpolate(const std::vector<Point>& v, double t) {
  auto it = std::lower_bound(v.begin(), v.end(), t,
                             [](const Point& p, double x) { return p.x < x; });
  if (it == v.end()) return v.back().y;
  if (it->x == t || it == v.begin()) return it->y;
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  const double w = (t - lo.x) / (hi.x - lo.x);
  return lo.y + w * (hi.y - lo.y);
}

// Upper envelope of lines sorted by slope with distinct slopes. Returns the
// lines that are maximal somewhere on the real line, in slope order.
std::vector<Line> EnvelopeStack(std::vector<Line> lines) {
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return a.slope < b.slope || (a.slope == b.slope && a.intercept > b.intercept);
  });
  std::vector<Line> stack;
  stack.reserve(lines.size());
  for (const Line& l : lines) {
    if (!stack.empty() && stack.back().slope == l.slope) continue;
    while (stack.size() >= 2) {
      const Line& l1 = stack[stack.size() - 2];
      const Line& l2 = stack.back();
      // l2 is dominated when l3 overtakes l1 no later than l2 does.
      const long double lhs =
          static_cast<long double>(l1.intercept - l.intercept) *
          (l2.slope - l1.slope);
      const long double rhs =
          static_cast<long double>(l1.intercept - l2.intercept) *
          (l.slope - l1.slope);
      if (lhs <= rhs) {
        stack.pop_back();
      } else {
        break;
      }
    }
    stack.push_back(l);
  }
  return stack;
}

}  // namespace

absl::StatusOr<TradeoffCurve> TradeoffCurve::Create(std::vector<Point> vertices) {
  if (vertices.size() < 2) {
    return absl::InvalidArgumentError("a curve needs at least two vertices");
  }
  if (vertices.front().x != 0.0 || vertices.back().x != 1.0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("curve must span x = 0 to x = 1, got [%g, %g]",
                        vertices.front().x, vertices.back().x));
  }
  double prev_slope = -kInf;
  for (size_t i = 0; i < vertices.size(); ++i) {
    const Point& p = vertices[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.y < 0.0 || p.y > 1.0) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "vertex %d = (%g, %g) lies outside [0, 1]^2", i, p.x, p.y));
    }
    if (p.y > 1.0 - p.x + kIdentitySlack) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "vertex %d = (%g, %g) lies above the identity 1 - x", i, p.x, p.y));
    }
    if (i == 0) continue;
    const Point& q = vertices[i - 1];
    if (!(p.x > q.x)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("x must be strictly increasing at vertex %d", i));
    }
    const double slope = (p.y - q.y) / (p.x - q.x);
    if (slope > kGeometryTolerance) {
      return absl::InvalidArgumentError(
          absl::StrFormat("curve increases on segment %d", i));
    }
    if (slope < prev_slope - kGeometryTolerance) {
      return absl::InvalidArgumentError(
          absl::StrFormat("curve is not convex at vertex %d", i - 1));
    }
    prev_slope = slope;
  }
  return TradeoffCurve(std::move(vertices));
}

TradeoffCurve TradeoffCurve::Identity() {
  return TradeoffCurve({{0.0, 1.0}, {1.0, 0.0}});
}

TradeoffCurve TradeoffCurve::FromLines(std::span<const Line> lines) {
  std::vector<Line> all(lines.begin(), lines.end());
  all.push_back(Line{0.0, 0.0});
  const std::vector<Line> stack = EnvelopeStack(std::move(all));

  // breaks[i] separates stack[i] from stack[i + 1]; increasing.
  std::vector<double> breaks(stack.size() - 1);
  for (size_t i = 0; i + 1 < stack.size(); ++i) {
    breaks[i] = (stack[i].intercept - stack[i + 1].intercept) /
                (stack[i + 1].slope - stack[i].slope);
  }
  auto value_at = [&](double t) {
    const size_t i = std::lower_bound(breaks.begin(), breaks.end(), t) -
                     breaks.begin();
    double v = stack[i].At(t);
    if (i > 0) v = std::max(v, stack[i - 1].At(t));
    if (i + 1 < stack.size()) v = std::max(v, stack[i + 1].At(t));
    return v;
  };
  std::vector<Point> points;
  points.reserve(breaks.size() + 2);
  points.push_back({0.0, value_at(0.0)});
  for (double b : breaks) {
    if (b > 0.0 && b < 1.0) points.push_back({b, value_at(b)});
  }
  points.push_back({1.0, value_at(1.0)});
  return TradeoffCurve(LowerHull(std::move(points)));
}

TradeoffCurve TradeoffCurve::FromPoints(std::vector<Point> points) {
  return TradeoffCurve(LowerHull(std::move(points)));
}

absl::StatusOr<double> TradeoffCurve::Eval(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("t must lie in [0, 1], got %g", t));
  }
  return Interpolate(vertices_, t);
}

double TradeoffCurve::ValueAt(double t) const {
  return Interpolate(vertices_, std::clamp(t, 0.0, 1.0));
}

std::vector<Line> TradeoffCurve::SupportingLines() const {
  std::vector<Line> lines;
  lines.reserve(vertices_.size());
  for (size_t i = 1; i < vertices_.size(); ++i) {
    const Point& a = vertices_[i - 1];
    const Point& b = vertices_[i];
    const double slope = (b.y - a.y) / (b.x - a.x);
    // Anchor at the left end, where |slope| * x stays below the total drop.
    lines.push_back(Line{a.y - slope * a.x, slope});
  }
  return lines;
}

std::string TradeoffCurve::DebugString() const {
  return absl::StrCat(
      "[", absl::StrJoin(vertices_, ", ",
                         [](std::string* out, const Point& p) {
                           absl::StrAppendFormat(out, "(%.12g, %.12g)", p.x,
                                                 p.y);
                         }),
      "]");
}

absl::StatusOr<TradeoffCurve> CurveFromBudget(const PrivacyBudget& budget) {
  if (absl::Status s = ValidateBudget(budget); !s.ok()) return s;
  const double eps = std::min(budget.epsilon, kMaxCurveEpsilon);
  const double d = budget.delta;
  const Line lines[] = {
      {1.0 - d, -std::exp(eps)},
      {(1.0 - d) * std::exp(-eps), -std::exp(-eps)},
      {1.0 - budget.eta, -1.0},
  };
  return TradeoffCurve::FromLines(lines);
}

double TvOfCurve(const TradeoffCurve& curve) {
  double best = kInf;
  for (const Point& p : curve.vertices()) best = std::min(best, p.x + p.y);
  return Clamp01(1.0 - best);
}

bool CheckBudget(const TradeoffCurve& curve, const PrivacyBudget& budget) {
  const double eps = std::min(budget.epsilon, kMaxCurveEpsilon);
  const double e = std::exp(eps);
  const double d = budget.delta;
  for (const Point& p : curve.vertices()) {
    const double floor =
        std::max({1.0 - d - e * p.x, (1.0 - d - p.x) / e, 1.0 - budget.eta - p.x});
    if (p.y < floor - kGeometryTolerance) return false;
  }
  return true;
}

absl::StatusOr<TradeoffCurve> Intersect(std::span<const TradeoffCurve> curves) {
  if (curves.empty()) {
    return absl::InvalidArgumentError("intersect needs at least one curve");
  }
  if (curves.size() == 1) return curves.front();
  // A convex piecewise-linear function is the envelope of its segment lines,
  // so the pointwise maximum is the envelope of all of them.
  std::vector<Line> lines;
  for (const TradeoffCurve& c : curves) {
    std::vector<Line> own = c.SupportingLines();
    lines.insert(lines.end(), own.begin(), own.end());
  }
  return TradeoffCurve::FromLines(lines);
}

absl::StatusOr<TradeoffCurve> UnionOfRegions(
    std::span<const TradeoffCurve> curves) {
  if (curves.empty()) {
    return absl::InvalidArgumentError("union needs at least one curve");
  }
  std::vector<Point> points;
  for (const TradeoffCurve& c : curves) {
    points.insert(points.end(), c.vertices().begin(), c.vertices().end());
  }
  return TradeoffCurve::FromPoints(std::move(points));
}

absl::StatusOr<TradeoffCurve> CurveFromMasses(std::span<const double> p0,
                                              std::span<const double> p1) {
  if (p0.size() != p1.size() || p0.empty()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "mass vectors must be non-empty and of equal length: %d vs %d",
        p0.size(), p1.size()));
  }
  std::vector<size_t> order;
  order.reserve(p0.size());
  for (size_t i = 0; i < p0.size(); ++i) {
    if (p0[i] < 0.0 || p1[i] < 0.0 || !std::isfinite(p0[i]) ||
        !std::isfinite(p1[i])) {
      return absl::InvalidArgumentError(
          absl::StrFormat("masses must be finite and >= 0 at index %d", i));
    }
    if (p0[i] > 0.0 || p1[i] > 0.0) order.push_back(i);
  }
  // P1/P0 descending, compared as cross products; P0 = 0 sorts first.
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return static_cast<long double>(p1[a]) * p0[b] >
           static_cast<long double>(p1[b]) * p0[a];
  });
  const size_t n = order.size();
  std::vector<long double> prefix0(n + 1, 0.0L);
  std::vector<long double> suffix1(n + 1, 0.0L);
  for (size_t i = 0; i < n; ++i) prefix0[i + 1] = prefix0[i] + p0[order[i]];
  for (size_t i = n; i-- > 0;) suffix1[i] = suffix1[i + 1] + p1[order[i]];
  const long double total0 = prefix0[n];
  const long double total1 = suffix1[0];
  if (!(total0 > 0.0L) || !(total1 > 0.0L)) {
    return absl::InvalidArgumentError("both mass vectors need positive total");
  }
  std::vector<Point> points;
  points.reserve(n + 2);
  for (size_t i = 0; i <= n; ++i) {
    points.push_back({static_cast<double>(prefix0[i] / total0),
                      static_cast<double>(suffix1[i] / total1)});
  }
  points.front().x = 0.0;
  points.back() = {1.0, 0.0};
  return TradeoffCurve::FromPoints(std::move(points));
}

TradeoffCurve CurveFromPair(const DiscretePair& pair) {
  return *CurveFromMasses(pair.p0(), pair.p1());
}

double SupDistance(const TradeoffCurve& a, const TradeoffCurve& b) {
  double worst = 0.0;
  for (const Point& p : a.vertices()) {
    worst = std::max(worst, std::abs(p.y - b.ValueAt(p.x)));
  }
  for (const Point& p : b.vertices()) {
    worst = std::max(worst, std::abs(p.y - a.ValueAt(p.x)));
  }
  return worst;
}

double DeltaForEpsilon(const TradeoffCurve& curve, double epsilon) {
  const double e = std::exp(std::min(epsilon, kMaxCurveEpsilon));
  double delta = 0.0;
  for (const Point& p : curve.vertices()) {
    delta = std::max({delta, 1.0 - e * p.x - p.y, 1.0 - p.x - e * p.y});
  }
  return Clamp01(delta);
}

TradeoffCurve Mirror(const TradeoffCurve& curve) {
  std::vector<Point> points;
  points.reserve(curve.vertices().size() + 2);
  for (const Point& p : curve.vertices()) points.push_back({p.y, p.x});
  points.push_back({0.0, 1.0});
  points.push_back({1.0, 0.0});
  return TradeoffCurve::FromPoints(std::move(points));
}

}  // namespace tvdp
