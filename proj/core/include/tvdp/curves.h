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

// Tradeoff (ROC) curves and privacy regions.
//
// A curve maps the type-I error x = P0(reject) of a test to the smallest
// achievable type-II error y = P1(accept). The privacy region is the set of
// points on or above the curve. Curves are convex, non-increasing and lie on
// or below the identity loss y = 1 - x; they are stored as vertex lists and
// interpolated linearly.

#ifndef TVDP_CURVES_H_
#define TVDP_CURVES_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "tvdp/budget.h"
#include "tvdp/distribution.h"

namespace tvdp {

// Absolute tolerance of the geometric predicates on curves.
inline constexpr double kGeometryTolerance = 1e-9;

// Largest epsilon that enters a curve as a slope -e^eps. Larger values are
// clamped; the resulting region differs from the exact one only on
// x < e^-50.
inline constexpr double kMaxCurveEpsilon = 50.0;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// The line y = intercept + slope * t.
struct Line {
  double intercept = 0.0;
  double slope = 0.0;

  double At(double t) const { return intercept + slope * t; }
};

class TradeoffCurve {
 public:
  // Validates the vertex list: x strictly increasing from 0 to 1, y in [0, 1],
  // slopes non-positive and non-decreasing (within kGeometryTolerance), and
  // y <= 1 - x + 1e-12.
  static absl::StatusOr<TradeoffCurve> Create(std::vector<Point> vertices);

  // f(t) = 1 - t: the region of a mechanism that leaks nothing.
  static TradeoffCurve Identity();

  // Upper envelope over [0, 1] of `lines` and y = 0. Every line must have a
  // finite non-positive slope and an intercept at most 1, and no line may
  // exceed 1 - t on [0, 1].
  static TradeoffCurve FromLines(std::span<const Line> lines);

  // Lower convex envelope of `points`, which must include x = 0 and x = 1.
  static TradeoffCurve FromPoints(std::vector<Point> points);

  const std::vector<Point>& vertices() const { return vertices_; }

  // Value at t; out-of-range t is an error.
  absl::StatusOr<double> Eval(double t) const;
  // Value at t clamped into [0, 1].
  double ValueAt(double t) const;

  // One line per segment; the curve is their upper envelope on [0, 1].
  std::vector<Line> SupportingLines() const;

  std::string DebugString() const;

 private:
  explicit TradeoffCurve(std::vector<Point> vertices)
      : vertices_(std::move(vertices)) {}

  std::vector<Point> vertices_;
};

// Boundary of the region allowed by (eps, delta)-DP together with eta-TV:
// max(0, 1 - delta - e^eps t, (1 - delta - t) e^-eps, 1 - eta - t).
absl::StatusOr<TradeoffCurve> CurveFromBudget(const PrivacyBudget& budget);

// 1 - min_t (t + f(t)): the smallest eta satisfied by the curve.
double TvOfCurve(const TradeoffCurve& curve);

// True iff the curve satisfies all three constraints of `budget` at every
// vertex, within kGeometryTolerance.
bool CheckBudget(const TradeoffCurve& curve, const PrivacyBudget& budget);

// Pointwise maximum; the intersection of the privacy regions.
absl::StatusOr<TradeoffCurve> Intersect(std::span<const TradeoffCurve> curves);

// Lower convex envelope of the pointwise minimum; the region reachable by
// randomizing over the given experiments.
absl::StatusOr<TradeoffCurve> UnionOfRegions(
    std::span<const TradeoffCurve> curves);

// Exact curve of a pair by Neyman-Pearson: outcomes are added to the reject
// region in order of decreasing P1/P0, outcomes with P0 = 0 first.
TradeoffCurve CurveFromPair(const DiscretePair& pair);

// Same on non-negative masses of equal length that need not be normalized;
// each side is rescaled by its total. Both totals must be positive.
absl::StatusOr<TradeoffCurve> CurveFromMasses(std::span<const double> p0,
                                              std::span<const double> p1);

// max_t |a(t) - b(t)|, exact for piecewise-linear inputs.
double SupDistance(const TradeoffCurve& a, const TradeoffCurve& b);

// Smallest delta such that the curve satisfies (eps, delta)-DP in both
// directions.
double DeltaForEpsilon(const TradeoffCurve& curve, double epsilon);

// The curve reflected across y = x: the curve of the swapped pair.
TradeoffCurve Mirror(const TradeoffCurve& curve);

}  // namespace tvdp

#endif  // TVDP_CURVES_H_
