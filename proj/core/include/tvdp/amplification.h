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

#ifndef TVDP_AMPLIFICATION_H_
#define TVDP_AMPLIFICATION_H_

#include <utility>

#include "absl/status/statusor.h"
#include "tvdp/budget.h"
#include "tvdp/distribution.h"

namespace tvdp {

// Budget after running the mechanism on a uniformly chosen fixed-size
// subsample with rate p = m / n in (0, 1]:
// (log(1 + p (e^eps - 1)), p delta, p eta).
absl::StatusOr<PrivacyBudget> Subsample(const PrivacyBudget& budget, double p);

// Mixture pairs that attain the subsampled budget, built from the
// dominating pair (P0, P1) of the input budget:
//   first  = (p P0 + (1-p) P1, P1)
//   second = (P0, p P1 + (1-p) P0)
// The two are mirror images. The union of their regions, not the
// intersection, is the subsampled budget region.
absl::StatusOr<std::pair<DiscretePair, DiscretePair>> SubsampleTightnessPairs(
    const PrivacyBudget& budget, double p);

// Appends an erasure symbol reached with probability alpha under both
// hypotheses; the other masses are scaled by 1 - alpha. Every f-divergence
// scales by 1 - alpha.
absl::StatusOr<DiscretePair> ErasePair(const DiscretePair& pair, double alpha);

}  // namespace tvdp

#endif  // TVDP_AMPLIFICATION_H_
