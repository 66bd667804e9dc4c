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

#include "tvdp/dpsgd.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_format.h"
#include "tvdp/amplification.h"
#include "tvdp/mechanisms.h"

namespace tvdp {

absl::Status ValidateSgdConfig(const SgdConfig& config) {
  if (config.dataset_size < 1 || config.batch_size < 1 ||
      config.batch_size > config.dataset_size) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need 1 <= batch <= n, got batch=%d n=%d", config.batch_size,
        config.dataset_size));
  }
  if (!(config.epochs > 0.0) || !std::isfinite(config.epochs)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epochs must be > 0, got %g", config.epochs));
  }
  if (!(config.step_mu > 0.0) || !std::isfinite(config.step_mu)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("mu must be > 0, got %g", config.step_mu));
  }
  if (config.epsilon_grid.empty()) {
    return absl::InvalidArgumentError("eps grid must be non-empty");
  }
  for (size_t i = 0; i < config.epsilon_grid.size(); ++i) {
    const double e = config.epsilon_grid[i];
    if (!(e > 0.0) || !std::isfinite(e)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("eps grid values must be finite and > 0, got %g", e));
    }
    if (i > 0 && !(e > config.epsilon_grid[i - 1])) {
      return absl::InvalidArgumentError("eps grid must be strictly increasing");
    }
  }
  const double steps = std::round(config.epochs * config.dataset_size /
                                  config.batch_size);
  if (steps < 1.0 || steps > std::numeric_limits<int>::max()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("step count %g is out of range", steps));
  }
  if (!(config.types_tol > 0.0)) {
    return absl::InvalidArgumentError("types tolerance must be > 0");
  }
  return absl::OkStatus();
}

int64_t SgdSteps(const SgdConfig& config) {
  return static_cast<int64_t>(std::llround(
      config.epochs * static_cast<double>(config.dataset_size) /
      static_cast<double>(config.batch_size)));
}

absl::StatusOr<StepBudget> MakeStepBudget(double step_mu, double epsilon) {
  if (!(step_mu > 0.0) || !(epsilon > 0.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "step budget needs mu > 0 and eps > 0, got mu=%g eps=%g", step_mu,
        epsilon));
  }
  StepBudget out;
  out.budget.epsilon = epsilon;
  out.budget.delta = GaussianDelta(step_mu, epsilon);
  out.budget.eta = GaussianTv(step_mu);
  const double cap = MaxEta(epsilon, out.budget.delta);
  if (out.budget.eta > cap) {
    out.budget.eta = cap;
    out.eta_clamped = true;
  }
  return out;
}

absl::StatusOr<SgdRegion> ComputeSgdRegion(const SgdConfig& config,
                                           SgdAccountant accountant) {
  if (absl::Status s = ValidateSgdConfig(config); !s.ok()) return s;
  SgdRegion region;
  region.steps = SgdSteps(config);
  region.sampling_rate = static_cast<double>(config.batch_size) /
                         static_cast<double>(config.dataset_size);
  const int k = static_cast<int>(region.steps);
  std::vector<TradeoffCurve> curves;
  curves.reserve(config.epsilon_grid.size());
  for (double eps : config.epsilon_grid) {
    SgdGridEntry entry;
    entry.step_epsilon = eps;
    absl::StatusOr<StepBudget> step = MakeStepBudget(config.step_mu, eps);
    if (!step.ok()) return step.status();
    entry.step = *step;
    absl::StatusOr<PrivacyBudget> sub =
        Subsample(step->budget, region.sampling_rate);
    if (!sub.ok()) return sub.status();
    entry.subsampled = *sub;
    absl::StatusOr<CompositionLedger> ledger =
        accountant == SgdAccountant::kRefined
            ? ComposeTypesApprox(*sub, k, config.types_tol)
            : ComposeKairouz(sub->epsilon, sub->delta, k);
    if (!ledger.ok()) return ledger.status();
    entry.ledger = *std::move(ledger);
    curves.push_back(LedgerToCurve(entry.ledger));
    region.entries.push_back(std::move(entry));
  }
  absl::StatusOr<TradeoffCurve> curve = Intersect(curves);
  if (!curve.ok()) return curve.status();
  region.curve = *std::move(curve);
  return region;
}

absl::StatusOr<SgdReport> CompareSgd(const SgdConfig& config,
                                     std::vector<double> reference_epsilons) {
  absl::StatusOr<SgdRegion> refined =
      ComputeSgdRegion(config, SgdAccountant::kRefined);
  if (!refined.ok()) return refined.status();
  absl::StatusOr<SgdRegion> baseline =
      ComputeSgdRegion(config, SgdAccountant::kBaseline);
  if (!baseline.ok()) return baseline.status();
  SgdReport report;
  report.steps = refined->steps;
  report.sampling_rate = refined->sampling_rate;
  reference_epsilons.push_back(report.annotation_epsilon);
  std::sort(reference_epsilons.begin(), reference_epsilons.end());
  reference_epsilons.erase(
      std::unique(reference_epsilons.begin(), reference_epsilons.end()),
      reference_epsilons.end());
  for (double eps : reference_epsilons) {
    report.points.push_back({eps, DeltaForEpsilon(refined->curve, eps),
                             DeltaForEpsilon(baseline->curve, eps)});
  }
  report.refined = std::move(refined->curve);
  report.baseline = std::move(baseline->curve);
  return report;
}

}  // namespace tvdp
