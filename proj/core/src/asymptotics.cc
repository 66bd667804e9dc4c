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

#include "tvdp/asymptotics.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tvdp/composition.h"
#include "tvdp/log_math.h"
#include "tvdp/normal.h"

namespace tvdp {

double KlFunctional(double epsilon, double eta) { return epsilon * eta; }

double Kappa2(double epsilon, double eta) {
  if (epsilon == 0.0) return 0.0;
  return eta * epsilon * epsilon / std::tanh(epsilon / 2.0);
}

double Kappa3(double epsilon, double eta) {
  return epsilon * Kappa2(epsilon, eta);
}

double GMu(double mu, double alpha) {
  if (alpha <= 0.0) return 1.0;
  if (alpha >= 1.0) return 0.0;
  // Phi^-1(1 - alpha) = -Phi^-1(alpha) keeps precision for small alpha.
  return NormalCdf(-NormalQuantile(alpha) - mu);
}

TradeoffCurve GaussianCurve(double mu, int intervals) {
  intervals = std::max(intervals, 1);
  std::vector<Point> points;
  points.reserve(intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    const double t = static_cast<double>(i) / intervals;
    points.push_back({t, GMu(mu, t)});
  }
  return TradeoffCurve::FromPoints(std::move(points));
}

double CltMu(std::span<const ScheduleStep> schedule) {
  std::vector<double> terms;
  terms.reserve(schedule.size());
  for (const ScheduleStep& s : schedule) terms.push_back(s.epsilon * s.eta);
  return std::sqrt(2.0 * PairwiseSum(terms));
}

double SupGapToGaussian(const TradeoffCurve& curve, double mu) {
  double worst = 0.0;
  for (int i = 0; i <= kGaussianGridIntervals; ++i) {
    const double t = static_cast<double>(i) / kGaussianGridIntervals;
    worst = std::max(worst, std::abs(curve.ValueAt(t) - GMu(mu, t)));
  }
  for (const Point& p : curve.vertices()) {
    worst = std::max(worst, std::abs(p.y - GMu(mu, p.x)));
  }
  return worst;
}

absl::StatusOr<double> CltGap(double epsilon, double eta, int k) {
  absl::StatusOr<CompositionLedger> ledger =
      ComposeExact(PrivacyBudget{epsilon, 0.0, eta}, k);
  if (!ledger.ok()) return ledger.status();
  const double mu = std::sqrt(2.0 * k * epsilon * eta);
  return SupGapToGaussian(LedgerToCurve(*ledger), mu);
}

}  // namespace tvdp
