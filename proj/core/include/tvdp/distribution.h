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

#ifndef TVDP_DISTRIBUTION_H_
#define TVDP_DISTRIBUTION_H_

#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace tvdp {

// Tolerance on the total mass of a probability vector.
inline constexpr double kPmfTolerance = 1e-12;

// Checks that `pmf` is non-empty, finite, non-negative and sums to one.
absl::Status ValidatePmf(std::span<const double> pmf);

// Output distributions of a mechanism on two neighboring inputs, over one
// finite alphabet: p0 under the null hypothesis, p1 under the alternative.
class DiscretePair {
 public:
  static absl::StatusOr<DiscretePair> Create(std::vector<double> p0,
                                             std::vector<double> p1);

  std::span<const double> p0() const { return p0_; }
  std::span<const double> p1() const { return p1_; }
  size_t alphabet_size() const { return p0_.size(); }

  // The same experiment with the hypotheses exchanged.
  DiscretePair Swapped() const { return DiscretePair(p1_, p0_); }

 private:
  DiscretePair(std::vector<double> p0, std::vector<double> p1)
      : p0_(std::move(p0)), p1_(std::move(p1)) {}

  std::vector<double> p0_;
  std::vector<double> p1_;
};

}  // namespace tvdp

#endif  // TVDP_DISTRIBUTION_H_
