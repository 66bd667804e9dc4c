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

#include "tvdp/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/strings/str_format.h"
#include "tvdp/normal.h"

namespace tvdp {
namespace {

// P0 of the three-symbol pure pair, scaled by `scale`.
std::vector<double> PureMasses(double epsilon, double alpha, double scale) {
  // e^eps / (1 + e^eps) written to stay finite for large eps.
  const double hi = 1.0 / (1.0 + std::exp(-epsilon));
  const double lo = 1.0 / (1.0 + std::exp(epsilon));
  return {scale * (1.0 - alpha) * hi, scale * alpha, scale * (1.0 - alpha) * lo};
}

absl::Status ValidateStaircase(const StaircaseSpec& spec) {
  if (!(spec.gamma > 0.0) || !std::isfinite(spec.gamma)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("staircase gamma must be > 0, got %g", spec.gamma));
  }
  if (!(spec.epsilon > 0.0) || !std::isfinite(spec.epsilon)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "staircase eps must be finite and > 0, got %g", spec.epsilon));
  }
  if (!(spec.sensitivity > 0.0) || !std::isfinite(spec.sensitivity)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "staircase sensitivity must be > 0, got %g", spec.sensitivity));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<double> AlphaFromBudget(const PrivacyBudget& budget) {
  if (absl::Status s = ValidateCompositionBudget(budget); !s.ok()) return s;
  if (!(budget.epsilon > 0.0)) {
    return absl::InvalidArgumentError(
        "alpha is undefined at eps = 0: the dominating pair degenerates");
  }
  if (budget.delta >= 1.0) {
    return absl::InvalidArgumentError("alpha is undefined at delta = 1");
  }
  const double informative = (budget.eta - budget.delta) /
                             ((1.0 - budget.delta) * std::tanh(budget.epsilon / 2.0));
  return std::clamp(1.0 - informative, 0.0, 1.0);
}

absl::StatusOr<DiscretePair> DominatingPure(double epsilon, double eta) {
  absl::StatusOr<double> alpha = AlphaFromBudget({epsilon, 0.0, eta});
  if (!alpha.ok()) return alpha.status();
  std::vector<double> p0 = PureMasses(epsilon, *alpha, 1.0);
  std::vector<double> p1(p0.rbegin(), p0.rend());
  return DiscretePair::Create(std::move(p0), std::move(p1));
}

absl::StatusOr<DiscretePair> DominatingApprox(const PrivacyBudget& budget) {
  if (absl::Status s = ValidateCompositionBudget(budget); !s.ok()) return s;
  const double d = budget.delta;
  double alpha = 1.0;
  if (budget.epsilon == 0.0) {
    if (std::abs(budget.eta - d) > kFeasibilityTolerance) {
      return absl::InvalidArgumentError(
          "at eps = 0 the dominating pair requires eta = delta");
    }
  } else {
    absl::StatusOr<double> a = AlphaFromBudget(budget);
    if (!a.ok()) return a.status();
    alpha = *a;
  }
  const std::vector<double> mid = PureMasses(budget.epsilon, alpha, 1.0 - d);
  std::vector<double> p0 = {d, mid[0], mid[1], mid[2], 0.0};
  std::vector<double> p1(p0.rbegin(), p0.rend());
  return DiscretePair::Create(std::move(p0), std::move(p1));
}

absl::StatusOr<double> LaplaceTv(double epsilon) {
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("laplace eps must be > 0, got %g", epsilon));
  }
  return -std::expm1(-epsilon / 2.0);
}

double GaussianDelta(double mu, double epsilon) {
  mu = std::abs(mu);
  if (mu == 0.0) return 0.0;
  const double a = NormalCdf(-epsilon / mu + mu / 2.0);
  const double b = NormalCdf(-epsilon / mu - mu / 2.0);
  return std::max(0.0, a - std::exp(epsilon) * b);
}

double GaussianTv(double mu) { return GaussianDelta(mu, 0.0); }

absl::StatusOr<double> StaircaseNormalizer(const StaircaseSpec& spec) {
  if (absl::Status s = ValidateStaircase(spec); !s.ok()) return s;
  const double c = std::exp(-spec.epsilon);
  return -std::expm1(-spec.epsilon) /
         (2.0 * spec.sensitivity * (spec.gamma + c * (1.0 - spec.gamma)));
}

absl::StatusOr<double> StaircaseTv(const StaircaseSpec& spec) {
  absl::StatusOr<double> a = StaircaseNormalizer(spec);
  if (!a.ok()) return a.status();
  const double base = *a * spec.sensitivity;
  if (spec.gamma >= 0.5) return base;
  const double c = std::exp(-spec.epsilon);
  return base * (2.0 * spec.gamma * (1.0 - c) + c);
}

absl::StatusOr<double> StaircaseGammaForAlpha(double epsilon, double alpha) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps must be finite and > 0, got %g", epsilon));
  }
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("alpha must lie in [0, 1), got %g", alpha));
  }
  const double peak = std::tanh(epsilon / 2.0);
  const double target = (1.0 - alpha) * peak;
  if (target > peak) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "target TV %.12g exceeds the staircase maximum %.12g", target, peak));
  }
  if (alpha == 0.0) return 0.5;
  const double c = std::exp(-epsilon);
  const double one_minus_c = -std::expm1(-epsilon);
  // Both branches are Moebius in gamma, so each inverts in closed form.
  if (target >= one_minus_c / 2.0) {
    return c * (one_minus_c - 2.0 * target) /
           (2.0 * one_minus_c * (target - one_minus_c));
  }
  return (one_minus_c / (2.0 * target) - c) / one_minus_c;
}

absl::StatusOr<TradeoffCurve> StaircaseCurve(const StaircaseSpec& spec) {
  absl::StatusOr<double> a_or = StaircaseNormalizer(spec);
  if (!a_or.ok()) return a_or.status();
  const double a = *a_or;
  const double g = spec.gamma;
  const double w = spec.sensitivity;
  const double c = std::exp(-spec.epsilon);
  // Mass of the density on [0, x] for 0 <= x <= max(gamma, 1) * w.
  auto center_mass = [&](double x) {
    if (x <= g * w) return a * x;
    return a * g * w + a * c * (x - g * w);
  };
  // P0(X >= x), anchored at the center of symmetry.
  auto tail = [&](double x) {
    return x >= 0.0 ? 0.5 - center_mass(x) : 0.5 + center_mass(-x);
  };
  // Rejecting when X >= t gives type I error tail(t) and type II error
  // P0(X < t - w) = tail(w - t).
  std::vector<Point> points = {{0.0, 1.0}, {1.0, 0.0}};
  for (double t : {(1.0 - g) * w, g * w}) {
    points.push_back({std::clamp(tail(t), 0.0, 1.0),
                      std::clamp(tail(w - t), 0.0, 1.0)});
  }
  return TradeoffCurve::FromPoints(std::move(points));
}

}  // namespace tvdp
