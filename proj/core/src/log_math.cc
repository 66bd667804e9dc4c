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

#include "tvdp/log_math.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tvdp {
namespace {

constexpr size_t kPairwiseBlock = 8;

}  // namespace

double PairwiseSum(std::span<const double> values) {
  if (values.size() <= kPairwiseBlock) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  const size_t half = values.size() / 2;
  return PairwiseSum(values.first(half)) + PairwiseSum(values.subspan(half));
}

double LogSumExp(std::span<const double> log_values) {
  if (log_values.empty()) return kNegInf;
  const double max = *std::max_element(log_values.begin(), log_values.end());
  if (max == kNegInf) return kNegInf;
  if (max == kInf) return kInf;
  std::vector<double> shifted;
  shifted.reserve(log_values.size());
  for (double v : log_values) shifted.push_back(std::exp(v - max));
  return max + std::log(PairwiseSum(shifted));
}

double LogBinomial(int n, int r) {
  if (r == 0 || r == n) return 0.0;
  return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

double Log1mExpNeg(double x) {
  // Switch point log(2) as in Maechler's note on log1mexp.
  if (x <= 0.6931471805599453) return std::log(-std::expm1(-x));
  return std::log1p(-std::exp(-x));
}

void LogAccumulator::Add(double log_value) {
  if (log_value == kNegInf) return;
  if (log_value > max_) {
    scaled_sum_ = scaled_sum_ * std::exp(max_ - log_value) + 1.0;
    max_ = log_value;
  } else {
    scaled_sum_ += std::exp(log_value - max_);
  }
}

double LogAccumulator::Result() const {
  if (max_ == kNegInf) return kNegInf;
  return max_ + std::log(scaled_sum_);
}

}  // namespace tvdp
