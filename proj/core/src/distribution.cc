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

#include "tvdp/distribution.h"

#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "tvdp/log_math.h"

namespace tvdp {

absl::Status ValidatePmf(std::span<const double> pmf) {
  if (pmf.empty()) return absl::InvalidArgumentError("pmf must be non-empty");
  for (size_t i = 0; i < pmf.size(); ++i) {
    if (!std::isfinite(pmf[i]) || pmf[i] < 0.0) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "pmf entry %d must be finite and >= 0, got %g", i, pmf[i]));
    }
  }
  const double total = PairwiseSum(pmf);
  if (std::abs(total - 1.0) > kPmfTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("pmf must sum to 1, got %.17g", total));
  }
  return absl::OkStatus();
}

absl::StatusOr<DiscretePair> DiscretePair::Create(std::vector<double> p0,
                                                  std::vector<double> p1) {
  if (p0.size() != p1.size()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "p0 and p1 must share an alphabet: sizes %d and %d", p0.size(),
        p1.size()));
  }
  if (absl::Status s = ValidatePmf(p0); !s.ok()) {
    return absl::InvalidArgumentError(absl::StrCat("p0: ", s.message()));
  }
  if (absl::Status s = ValidatePmf(p1); !s.ok()) {
    return absl::InvalidArgumentError(absl::StrCat("p1: ", s.message()));
  }
  return DiscretePair(std::move(p0), std::move(p1));
}

}  // namespace tvdp
