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

// f-divergences D_f(P0 || P1) = sum_y P1(y) f(P0(y) / P1(y)) between discrete
// distributions. Natural logarithms throughout. Divergences that are infinite
// (for example KL when P0 puts mass where P1 does not) are returned as +inf,
// not as errors.

#ifndef TVDP_DIVERGENCES_H_
#define TVDP_DIVERGENCES_H_

#include <functional>
#include <span>
#include <string>
#include <variant>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "tvdp/distribution.h"
#include "tvdp/log_math.h"

namespace tvdp {

// f(t) = max(0, t - 1).
struct TotalVariationSpec {};
// f(t) = t log t.
struct KullbackLeiblerSpec {};
// f(t) = (t - 1)^2.
struct ChiSquaredSpec {};
// f(t) = beta (1 - beta) (t - 1)^2 / (beta t + 1 - beta), beta in (0, 1).
struct LeCamSpec {
  double beta = 0.5;
};
// A caller-supplied convex generator with f(1) = 0. Terms where P1(y) = 0 <
// P0(y) contribute P0(y) * slope_at_infinity, the limit of f(t) / t.
struct CustomSpec {
  std::function<double(double)> f;
  double slope_at_infinity = kInf;
};

using DivergenceSpec = std::variant<TotalVariationSpec, KullbackLeiblerSpec,
                                    ChiSquaredSpec, LeCamSpec, CustomSpec>;

std::string SpecName(const DivergenceSpec& spec);

// Rejects LeCam beta outside (0, 1) and custom generators with f(1) != 0.
absl::Status ValidateSpec(const DivergenceSpec& spec);

// The generator f evaluated at t >= 0.
absl::StatusOr<double> EvaluateGenerator(const DivergenceSpec& spec, double t);

absl::StatusOr<double> FDivergence(const DiscretePair& pair,
                                   const DivergenceSpec& spec);
// Same, on raw masses of equal length (not re-validated).
absl::StatusOr<double> FDivergence(std::span<const double> p0,
                                   std::span<const double> p1,
                                   const DivergenceSpec& spec);

double TvDistance(std::span<const double> p0, std::span<const double> p1);
double KlDivergence(std::span<const double> p0, std::span<const double> p1);
double ChiSquaredDivergence(std::span<const double> p0,
                            std::span<const double> p1);

inline double TvDistance(const DiscretePair& pair) {
  return TvDistance(pair.p0(), pair.p1());
}
inline double KlDivergence(const DiscretePair& pair) {
  return KlDivergence(pair.p0(), pair.p1());
}
inline double ChiSquaredDivergence(const DiscretePair& pair) {
  return ChiSquaredDivergence(pair.p0(), pair.p1());
}

// Le Cam divergence LC_beta; beta must lie strictly inside (0, 1).
absl::StatusOr<double> LeCamDivergence(const DiscretePair& pair, double beta);
absl::StatusOr<double> LeCamDivergence(std::span<const double> p0,
                                       std::span<const double> p1,
                                       double beta);

}  // namespace tvdp

#endif  // TVDP_DIVERGENCES_H_
