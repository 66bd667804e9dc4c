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

#include "tvdp/divergences.h"

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <vector>

#include "absl/strings/str_format.h"

namespace tvdp {
namespace {

constexpr double kGeneratorTolerance = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

absl::Status CheckBeta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("LeCam beta must lie in (0, 1), got %g", beta));
  }
  return absl::OkStatus();
}

// Contribution of one outcome with masses (a, b) under P0 and P1.
double Term(const DivergenceSpec& spec, double a, double b) {
  if (a == 0.0 && b == 0.0) return 0.0;
  return std::visit(
      Overloaded{
          [&](const TotalVariationSpec&) { return std::max(0.0, a - b); },
          [&](const KullbackLeiblerSpec&) {
            if (a == 0.0) return 0.0;
            if (b == 0.0) return kInf;
            return a * std::log(a / b);
          },
          [&](const ChiSquaredSpec&) {
            if (b == 0.0) return kInf;
            return (a - b) * (a - b) / b;
          },
          [&](const LeCamSpec& s) {
            const double beta = s.beta;
            const double d = a - b;
            return beta * (1.0 - beta) * d * d / (beta * a + (1.0 - beta) * b);
          },
          [&](const CustomSpec& s) {
            if (b == 0.0) return a * s.slope_at_infinity;
            return b * s.f(a / b);
          },
      },
      spec);
}

}  // namespace

std::string SpecName(const DivergenceSpec& spec) {
  return std::visit(
      Overloaded{
          [](const TotalVariationSpec&) -> std::string { return "tv"; },
          [](const KullbackLeiblerSpec&) -> std::string { return "kl"; },
          [](const ChiSquaredSpec&) -> std::string { return "chi2"; },
          [](const LeCamSpec& s) -> std::string {
            return absl::StrFormat("lecam(%g)", s.beta);
          },
          [](const CustomSpec&) -> std::string { return "custom"; },
      },
      spec);
}

absl::Status ValidateSpec(const DivergenceSpec& spec) {
  if (const auto* lc = std::get_if<LeCamSpec>(&spec)) return CheckBeta(lc->beta);
  if (const auto* custom = std::get_if<CustomSpec>(&spec)) {
    if (!custom->f) return absl::InvalidArgumentError("custom f is empty");
    const double at_one = custom->f(1.0);
    if (!(std::abs(at_one) <= kGeneratorTolerance)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("custom f must satisfy f(1) = 0, got f(1) = %g",
                          at_one));
    }
    if (std::isnan(custom->slope_at_infinity)) {
      return absl::InvalidArgumentError("custom slope_at_infinity is NaN");
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<double> EvaluateGenerator(const DivergenceSpec& spec,
                                         double t) {
  if (absl::Status s = ValidateSpec(spec); !s.ok()) return s;
  if (!(t >= 0.0) || std::isinf(t)) {
    return absl::OutOfRangeError(
        absl::StrFormat("generator argument must be finite and >= 0, got %g",
                        t));
  }
  // Term(a = t, b = 1) is exactly f(t).
  return Term(spec, t, 1.0);
}

absl::StatusOr<double> FDivergence(std::span<const double> p0,
                                   std::span<const double> p1,
                                   const DivergenceSpec& spec) {
  if (p0.size() != p1.size()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("pmf sizes differ: %d vs %d", p0.size(), p1.size()));
  }
  if (absl::Status s = ValidateSpec(spec); !s.ok()) return s;
  std::vector<double> terms(p0.size());
  for (size_t i = 0; i < p0.size(); ++i) {
    terms[i] = Term(spec, p0[i], p1[i]);
    if (terms[i] == kInf) return kInf;
  }
  return PairwiseSum(terms);
}

absl::StatusOr<double> FDivergence(const DiscretePair& pair,
                                   const DivergenceSpec& spec) {
  return FDivergence(pair.p0(), pair.p1(), spec);
}

double TvDistance(std::span<const double> p0, std::span<const double> p1) {
  return *FDivergence(p0, p1, TotalVariationSpec{});
}

double KlDivergence(std::span<const double> p0, std::span<const double> p1) {
  return *FDivergence(p0, p1, KullbackLeiblerSpec{});
}

double ChiSquaredDivergence(std::span<const double> p0,
                            std::span<const double> p1) {
  return *FDivergence(p0, p1, ChiSquaredSpec{});
}

absl::StatusOr<double> LeCamDivergence(std::span<const double> p0,
                                       std::span<const double> p1,
                                       double beta) {
  if (absl::Status s = CheckBeta(beta); !s.ok()) return s;
  return FDivergence(p0, p1, LeCamSpec{beta});
}

absl::StatusOr<double> LeCamDivergence(const DiscretePair& pair, double beta) {
  return LeCamDivergence(pair.p0(), pair.p1(), beta);
}

}  // namespace tvdp
