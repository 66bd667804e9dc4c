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

#include "tvdp/amplification.h"

#include <cmath>
#include <vector>

#include "absl/strings/str_format.h"
#include "tvdp/mechanisms.h"

namespace tvdp {
namespace {

absl::Status CheckRate(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("sampling rate p must lie in (0, 1], got %g", p));
  }
  return absl::OkStatus();
}

std::vector<double> Mix(std::span<const double> a, std::span<const double> b,
                        double p) {
  std::vector<double> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = p * a[i] + (1.0 - p) * b[i];
  return out;
}

}  // namespace

absl::StatusOr<PrivacyBudget> Subsample(const PrivacyBudget& budget, double p) {
  if (absl::Status s = CheckRate(p); !s.ok()) return s;
  if (absl::Status s = ValidateBudget(budget); !s.ok()) return s;
  if (p == 1.0) return budget;
  return PrivacyBudget{std::log1p(p * std::expm1(budget.epsilon)),
                       p * budget.delta, p * budget.eta};
}

absl::StatusOr<std::pair<DiscretePair, DiscretePair>> SubsampleTightnessPairs(
    const PrivacyBudget& budget, double p) {
  if (absl::Status s = CheckRate(p); !s.ok()) return s;
  absl::StatusOr<DiscretePair> base = DominatingApprox(budget);
  if (!base.ok()) return base.status();
  const auto p0 = base->p0();
  const auto p1 = base->p1();
  absl::StatusOr<DiscretePair> first =
      DiscretePair::Create(Mix(p0, p1, p), {p1.begin(), p1.end()});
  if (!first.ok()) return first.status();
  absl::StatusOr<DiscretePair> second =
      DiscretePair::Create({p0.begin(), p0.end()}, Mix(p1, p0, p));
  if (!second.ok()) return second.status();
  return std::make_pair(*std::move(first), *std::move(second));
}

absl::StatusOr<DiscretePair> ErasePair(const DiscretePair& pair, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("erasure alpha must lie in [0, 1], got %g", alpha));
  }
  std::vector<double> p0;
  std::vector<double> p1;
  for (double v : pair.p0()) p0.push_back((1.0 - alpha) * v);
  for (double v : pair.p1()) p1.push_back((1.0 - alpha) * v);
  p0.push_back(alpha);
  p1.push_back(alpha);
  return DiscretePair::Create(std::move(p0), std::move(p1));
}

}  // namespace tvdp
