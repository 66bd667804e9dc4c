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

// Whole-run accounting for noisy SGD whose per-step update is mu-GDP on its
// minibatch. Every step is summarized by a family of (eps, delta(eps), eta)
// budgets, amplified by minibatch subsampling, composed over the run, and
// the resulting regions are intersected.

#ifndef TVDP_DPSGD_H_
#define TVDP_DPSGD_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "tvdp/budget.h"
#include "tvdp/composition.h"
#include "tvdp/curves.h"

namespace tvdp {

struct SgdConfig {
  int64_t dataset_size = 0;
  int64_t batch_size = 0;
  double epochs = 0.0;
  // Per-step GDP parameter on the minibatch.
  double step_mu = 0.0;
  // Per-step eps values, before subsampling; sorted and positive.
  std::vector<double> epsilon_grid;
  // Truncation tolerance of the types composition.
  double types_tol = 1e-9;
};

absl::Status ValidateSgdConfig(const SgdConfig& config);

// round(epochs * n / m).
int64_t SgdSteps(const SgdConfig& config);

struct StepBudget {
  PrivacyBudget budget;
  // True when the Gaussian TV exceeded the feasibility cap at this eps and
  // eta was lowered to the cap.
  bool eta_clamped = false;
};

// (eps, GaussianDelta(mu, eps), GaussianTv(mu)). Requires mu > 0, eps > 0.
absl::StatusOr<StepBudget> MakeStepBudget(double step_mu, double epsilon);

enum class SgdAccountant {
  // Joint (eps, delta, eta) composition.
  kRefined,
  // (eps, delta) composition without the TV constraint.
  kBaseline,
};

struct SgdGridEntry {
  double step_epsilon = 0.0;
  StepBudget step;
  // The step budget after subsampling with rate m / n.
  PrivacyBudget subsampled;
  CompositionLedger ledger;
};

struct SgdRegion {
  int64_t steps = 0;
  double sampling_rate = 0.0;
  std::vector<SgdGridEntry> entries;
  // Intersection of the per-entry composed regions.
  TradeoffCurve curve = TradeoffCurve::Identity();
};

absl::StatusOr<SgdRegion> ComputeSgdRegion(
    const SgdConfig& config,
    SgdAccountant accountant = SgdAccountant::kRefined);

struct SgdReferencePoint {
  double epsilon = 0.0;
  double refined_delta = 0.0;
  double baseline_delta = 0.0;
};

struct SgdReport {
  int64_t steps = 0;
  double sampling_rate = 0.0;
  std::vector<SgdReferencePoint> points;
  // A published moments-accountant guarantee for the same configuration,
  // carried for comparison only.
  double annotation_epsilon = 1.19;
  double annotation_delta = 1e-5;
  TradeoffCurve refined = TradeoffCurve::Identity();
  TradeoffCurve baseline = TradeoffCurve::Identity();
};

// Runs both accountants and reports the delta each implies at every
// reference eps (the annotation eps is always included).
absl::StatusOr<SgdReport> CompareSgd(const SgdConfig& config,
                                     std::vector<double> reference_epsilons);

}  // namespace tvdp

#endif  // TVDP_DPSGD_H_
