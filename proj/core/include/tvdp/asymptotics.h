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

// Central-limit behavior of many small (eps, 0)-DP, eta-TV compositions.
// The composed curve approaches the Gaussian tradeoff G_mu with
// mu^2 = 2 sum eps_i eta_i.

#ifndef TVDP_ASYMPTOTICS_H_
#define TVDP_ASYMPTOTICS_H_

#include <span>

#include "absl/status/statusor.h"
#include "tvdp/curves.h"

namespace tvdp {

// Number of uniform grid intervals used by SupGapToGaussian.
inline constexpr int kGaussianGridIntervals = 10000;

// -int_0^1 log|f'(t)| dt for the (eps, 0, eta) curve: eps * eta.
double KlFunctional(double epsilon, double eta);
// int_0^1 log^2|f'(t)| dt: eta eps^2 (e^eps + 1) / (e^eps - 1); 0 at eps = 0.
double Kappa2(double epsilon, double eta);
// int_0^1 |log|f'(t)||^3 dt: eps * Kappa2.
double Kappa3(double epsilon, double eta);

// Gaussian tradeoff Phi(Phi^-1(1 - alpha) - mu), with G(0) = 1, G(1) = 0.
double GMu(double mu, double alpha);

// Chords of G_mu between the points i / intervals.
TradeoffCurve GaussianCurve(double mu, int intervals = kGaussianGridIntervals);

struct ScheduleStep {
  double epsilon = 0.0;
  double eta = 0.0;
};

// sqrt(2 sum eps_i eta_i); 0 for an empty schedule.
double CltMu(std::span<const ScheduleStep> schedule);

// sup_t |f(t) - G_mu(t)| over the uniform grid of kGaussianGridIntervals
// intervals and the vertices of f, with G_mu evaluated exactly.
double SupGapToGaussian(const TradeoffCurve& curve, double mu);

// SupGapToGaussian of the exact k-fold composed (eps, 0, eta) curve against
// G_mu with mu = sqrt(2 k eps eta).
absl::StatusOr<double> CltGap(double epsilon, double eta, int k);

}  // namespace tvdp

#endif  // TVDP_ASYMPTOTICS_H_
