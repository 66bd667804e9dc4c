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

// Concrete mechanisms: the dominating pairs for (eps, delta, eta) budgets and
// the total variation of the Laplace, Gaussian and staircase mechanisms.

#ifndef TVDP_MECHANISMS_H_
#define TVDP_MECHANISMS_H_

#include "absl/status/statusor.h"
#include "tvdp/budget.h"
#include "tvdp/curves.h"
#include "tvdp/distribution.h"

namespace tvdp {

// Mass parked on the uninformative symbol of the dominating pair:
// 1 - (eta - delta)(e^eps + 1) / ((1 - delta)(e^eps - 1)). Requires eps > 0,
// delta < 1 and delta <= eta <= MaxEta(eps, delta).
absl::StatusOr<double> AlphaFromBudget(const PrivacyBudget& budget);

// Three-symbol pair for (eps, 0)-DP and eta-TV:
// P0 = [(1-a) e^eps / (1+e^eps), a, (1-a) / (1+e^eps)], P1 = reversed P0.
absl::StatusOr<DiscretePair> DominatingPure(double epsilon, double eta);

// Five-symbol pair for (eps, delta)-DP and eta-TV:
// P0 = [delta, (1-delta) P0pure, 0], P1 = reversed P0. At eps = 0 only
// eta = delta is accepted and the pair puts all informative mass on the
// delta symbols.
absl::StatusOr<DiscretePair> DominatingApprox(const PrivacyBudget& budget);

// 1 - e^(-eps/2); eps must be positive.
absl::StatusOr<double> LaplaceTv(double epsilon);

// Privacy profile of mu-GDP:
// Phi(-eps/mu + mu/2) - e^eps Phi(-eps/mu - mu/2), clamped at 0. The sign of
// mu is irrelevant; mu = 0 gives 0.
double GaussianDelta(double mu, double epsilon);

// GaussianDelta(mu, 0) = 2 Phi(|mu|/2) - 1.
double GaussianTv(double mu);

// Staircase noise with steps of width `sensitivity`, the first of which is
// a fraction `gamma` at full height.
struct StaircaseSpec {
  double gamma = 0.5;
  double epsilon = 1.0;
  double sensitivity = 1.0;
};

// a(gamma) = (1 - e^-eps) / (2 sensitivity (gamma + e^-eps (1 - gamma))).
absl::StatusOr<double> StaircaseNormalizer(const StaircaseSpec& spec);

// Half the L1 distance between the staircase density and its shift by the
// sensitivity. For gamma > 1 the density as parameterized carries total mass
// below one.
absl::StatusOr<double> StaircaseTv(const StaircaseSpec& spec);

// The gamma whose staircase TV equals (1 - alpha) tanh(eps / 2). Targets
// reachable with gamma < 1/2 use that branch; otherwise gamma >= 1/2.
// Requires eps > 0 and alpha in [0, 1).
absl::StatusOr<double> StaircaseGammaForAlpha(double epsilon, double alpha);

// Region of the staircase pair: the lower convex envelope of the Neyman-
// Pearson points of the threshold rules x >= (1 - gamma) sensitivity and
// x >= gamma sensitivity.
absl::StatusOr<TradeoffCurve> StaircaseCurve(const StaircaseSpec& spec);

}  // namespace tvdp

#endif  // TVDP_MECHANISMS_H_
