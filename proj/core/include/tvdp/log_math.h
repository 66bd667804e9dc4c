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

#ifndef TVDP_LOG_MATH_H_
#define TVDP_LOG_MATH_H_

#include <limits>
#include <span>

namespace tvdp {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Pairwise (cascade) summation. The result does not depend on anything but
// the order of `values`, and its rounding error grows as O(log n).
double PairwiseSum(std::span<const double> values);

// log(sum_i exp(log_values[i])), computed with a max shift and pairwise
// summation. Returns -inf for an empty input or when every entry is -inf.
double LogSumExp(std::span<const double> log_values);

// log(n choose r) through log-gamma. Requires 0 <= r <= n.
double LogBinomial(int n, int r);

// log(1 - exp(-x)) for x > 0, accurate for both small and large x.
double Log1mExpNeg(double x);

// Streaming log-sum-exp accumulator.
class LogAccumulator {
 public:
  void Add(double log_value);
  // log of the accumulated sum; -inf when nothing was added.
  double Result() const;

 private:
  double max_ = kNegInf;
  double scaled_sum_ = 0.0;
};

}  // namespace tvdp

#endif  // TVDP_LOG_MATH_H_
