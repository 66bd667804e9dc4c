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

#ifndef TVDP_BUDGET_H_
#define TVDP_BUDGET_H_

#include <string>

#include "absl/status/status.h"

namespace tvdp {

// Slack allowed on the feasibility inequalities of a budget.
inline constexpr double kFeasibilityTolerance = 1e-12;

// A joint guarantee: (epsilon, delta)-DP together with eta-TV. Epsilon is in
// nats.
struct PrivacyBudget {
  double epsilon = 0.0;
  double delta = 0.0;
  double eta = 0.0;

  std::string DebugString() const;
};

// The largest total variation compatible with (epsilon, delta)-DP:
// delta + (1 - delta) * (e^eps - 1) / (e^eps + 1).
double MaxEta(double epsilon, double delta);

// Checks epsilon >= 0, delta and eta in [0, 1], and eta <= MaxEta. The error
// message names the violated inequality.
absl::Status ValidateBudget(const PrivacyBudget& budget);

// ValidateBudget plus eta >= delta, which the composition results require.
absl::Status ValidateCompositionBudget(const PrivacyBudget& budget);

}  // namespace tvdp

#endif  // TVDP_BUDGET_H_
