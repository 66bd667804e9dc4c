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

#include "tvdp/budget.h"

#include <cmath>

#include "absl/strings/str_format.h"

namespace tvdp {

std::string PrivacyBudget::DebugString() const {
  return absl::StrFormat("(eps=%.12g, delta=%.12g, eta=%.12g)", epsilon, delta,
                         eta);
}

double MaxEta(double epsilon, double delta) {
  // (e^eps - 1) / (e^eps + 1) == tanh(eps / 2), which stays finite for any
  // epsilon including +inf.
  return delta + (1.0 - delta) * std::tanh(epsilon / 2.0);
}

absl::Status ValidateBudget(const PrivacyBudget& budget) {
  if (std::isnan(budget.epsilon) || budget.epsilon < 0.0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps must be >= 0, got %g", budget.epsilon));
  }
  if (std::isnan(budget.delta) || budget.delta < 0.0 || budget.delta > 1.0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("delta must lie in [0, 1], got %g", budget.delta));
  }
  if (std::isnan(budget.eta) || budget.eta < 0.0 || budget.eta > 1.0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eta must lie in [0, 1], got %g", budget.eta));
  }
  const double cap = MaxEta(budget.epsilon, budget.delta);
  if (budget.eta > cap + kFeasibilityTolerance) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "eta exceeds delta + (1-delta)(e^eps-1)/(e^eps+1): eta=%.12g > %.12g",
        budget.eta, cap));
  }
  return absl::OkStatus();
}

absl::Status ValidateCompositionBudget(const PrivacyBudget& budget) {
  if (absl::Status status = ValidateBudget(budget); !status.ok()) {
    return status;
  }
  if (budget.eta < budget.delta - kFeasibilityTolerance) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "eta must be >= delta for composition: eta=%.12g < delta=%.12g",
        budget.eta, budget.delta));
  }
  return absl::OkStatus();
}

}  // namespace tvdp
