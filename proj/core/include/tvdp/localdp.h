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

// Local privacy channels. A channel Q maps an input symbol x to a
// distribution Q(.|x) over outputs; it is eps-LDP when every output ratio
// Q(y|x) / Q(y|x') is at most e^eps and eta-TV when every pair of rows is
// within total variation eta. The (eps, eta) class is nonempty exactly when
// eta <= (e^eps - 1) / (e^eps + 1).

#ifndef TVDP_LOCALDP_H_
#define TVDP_LOCALDP_H_

#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "tvdp/distribution.h"
#include "tvdp/divergences.h"

namespace tvdp {

class Channel {
 public:
  // Rows must be non-empty, of equal length and each a pmf within
  // kPmfTolerance.
  static absl::StatusOr<Channel> Create(
      const std::vector<std::vector<double>>& matrix);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  std::span<const double> row(size_t x) const {
    return {data_.data() + x * cols_, cols_};
  }
  double at(size_t x, size_t y) const { return data_[x * cols_ + y]; }
  std::vector<std::vector<double>> ToMatrix() const;

 private:
  Channel(size_t rows, size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  size_t rows_;
  size_t cols_;
  std::vector<double> data_;
};

// Checks eps >= 0 and 0 <= eta <= (e^eps - 1) / (e^eps + 1).
absl::Status ValidateLocalBudget(double epsilon, double eta);

// max over y and x, x' of log(Q(y|x) / Q(y|x')); +inf when some output is
// possible under one input and impossible under another.
double LdpEpsilon(const Channel& channel);

// Largest total variation between two rows.
double Dobrushin(const Channel& channel);

// The 2x3 dominating channel with rows
// [eta e^eps / (e^eps - 1), eta / (e^eps - 1), 1 - eta (e^eps + 1) / (e^eps - 1)]
// and its first two entries swapped. Requires eps > 0.
absl::StatusOr<Channel> QStar(double epsilon, double eta);

// |Y| x 3 channel sending y to row 0 of QStar when P0(y) >= P1(y) and to
// row 1 otherwise.
absl::StatusOr<Channel> BinaryErasureMechanism(const DiscretePair& pair,
                                               double epsilon, double eta);

// Output pmf sum_x prior(x) Q(.|x). `prior` must be a pmf over the inputs.
absl::StatusOr<std::vector<double>> PushForward(const Channel& channel,
                                                std::span<const double> prior);

// sup of D_f between two rows over all (eps, eta) channels:
// eta (f(e^eps) + e^eps f(e^-eps)) / (e^eps - 1); 0 at eps = 0.
absl::StatusOr<double> MaxFDivergence(double epsilon, double eta,
                                      const DivergenceSpec& spec);

// sup of the KL contraction coefficient over (eps, eta) channels:
// eta (e^eps - 1) / (e^eps + 1).
absl::StatusOr<double> KlContractionBound(double epsilon, double eta);

struct EtaKlEstimate {
  double value = 0.0;
  double beta = 0.5;
  size_t row_a = 0;
  size_t row_b = 0;
};

// Max over row pairs and over beta_i = i / (grid_size + 1), i = 1..grid_size,
// of the Le Cam divergence LC_beta between the rows. Lower-bounds the KL
// contraction coefficient. Requires grid_size >= 3.
absl::StatusOr<EtaKlEstimate> EstimateEtaKl(const Channel& channel,
                                            int grid_size);

// 4 eta (e^eps - 1)(e^-eps + 1) tv_in^2: a bound on chi^2 between the
// outputs of an (eps, eta) channel whose inputs are tv_in apart.
absl::StatusOr<double> Chi2OutputBound(double epsilon, double eta,
                                       double tv_in);

// eta (e^eps + 1) / (e^eps - 1), the utility retained when converting an
// eps-LDP channel to an (eps, eta) one by erasure. Requires eps > 0.
absl::StatusOr<double> OptConversionFactor(double epsilon, double eta);

// M-ary randomized response: e^eps / (e^eps + M - 1) on the diagonal and
// 1 / (e^eps + M - 1) elsewhere. Requires M >= 2.
absl::StatusOr<Channel> RandomizedResponse(double epsilon, int m);

// eta / (2 (e^eps - 1)(e^-eps + 1)): lower bound on the ratio of the KL
// utility of the binary erasure mechanism to the optimum. Requires eps > 0.
absl::StatusOr<double> BeRatioLowerBound(double epsilon, double eta);

// Appends an erasure output reached with probability alpha from every input.
absl::StatusOr<Channel> EraseChannel(const Channel& channel, double alpha);

}  // namespace tvdp

#endif  // TVDP_LOCALDP_H_
