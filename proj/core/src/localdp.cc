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

#include "tvdp/localdp.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "tvdp/budget.h"
#include "tvdp/log_math.h"

namespace tvdp {

absl::StatusOr<Channel> Channel::Create(
    const std::vector<std::vector<double>>& matrix) {
  if (matrix.empty() || matrix.front().empty()) {
    return absl::InvalidArgumentError("channel matrix must be non-empty");
  }
  const size_t cols = matrix.front().size();
  std::vector<double> data;
  data.reserve(matrix.size() * cols);
  for (size_t x = 0; x < matrix.size(); ++x) {
    if (matrix[x].size() != cols) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "channel row %d has %d entries, expected %d", x, matrix[x].size(),
          cols));
    }
    if (absl::Status s = ValidatePmf(matrix[x]); !s.ok()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("channel row %d: %s", x, s.message()));
    }
    data.insert(data.end(), matrix[x].begin(), matrix[x].end());
  }
  return Channel(matrix.size(), cols, std::move(data));
}

std::vector<std::vector<double>> Channel::ToMatrix() const {
  std::vector<std::vector<double>> out;
  out.reserve(rows_);
  for (size_t x = 0; x < rows_; ++x) {
    out.emplace_back(row(x).begin(), row(x).end());
  }
  return out;
}

absl::Status ValidateLocalBudget(double epsilon, double eta) {
  if (!std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps must be finite, got %g", epsilon));
  }
  return ValidateBudget(PrivacyBudget{epsilon, 0.0, eta});
}

double LdpEpsilon(const Channel& channel) {
  double eps = 0.0;
  for (size_t y = 0; y < channel.cols(); ++y) {
    double lo = kInf;
    double hi = 0.0;
    for (size_t x = 0; x < channel.rows(); ++x) {
      lo = std::min(lo, channel.at(x, y));
      hi = std::max(hi, channel.at(x, y));
    }
    if (hi == 0.0) continue;
    if (lo == 0.0) return kInf;
    eps = std::max(eps, std::log(hi) - std::log(lo));
  }
  return eps;
}

double Dobrushin(const Channel& channel) {
  double worst = 0.0;
  for (size_t a = 0; a < channel.rows(); ++a) {
    for (size_t b = a + 1; b < channel.rows(); ++b) {
      worst = std::max(worst, TvDistance(channel.row(a), channel.row(b)));
    }
  }
  return worst;
}

absl::StatusOr<Channel> QStar(double epsilon, double eta) {
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("QStar needs eps > 0, got %g", epsilon));
  }
  if (absl::Status s = ValidateLocalBudget(epsilon, eta); !s.ok()) return s;
  const double em1 = std::expm1(epsilon);
  const double hi = eta * std::exp(epsilon) / em1;
  const double lo = eta / em1;
  const double erase = std::max(0.0, 1.0 - eta / std::tanh(epsilon / 2.0));
  return Channel::Create({{hi, lo, erase}, {lo, hi, erase}});
}

absl::StatusOr<Channel> BinaryErasureMechanism(const DiscretePair& pair,
                                               double epsilon, double eta) {
  absl::StatusOr<Channel> q = QStar(epsilon, eta);
  if (!q.ok()) return q.status();
  std::vector<std::vector<double>> matrix;
  matrix.reserve(pair.alphabet_size());
  for (size_t y = 0; y < pair.alphabet_size(); ++y) {
    const size_t pick = pair.p1()[y] > pair.p0()[y] ? 1 : 0;
    matrix.emplace_back(q->row(pick).begin(), q->row(pick).end());
  }
  return Channel::Create(matrix);
}

absl::StatusOr<std::vector<double>> PushForward(const Channel& channel,
                                                std::span<const double> prior) {
  if (prior.size() != channel.rows()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "prior has %d entries but the channel has %d inputs", prior.size(),
        channel.rows()));
  }
  if (absl::Status s = ValidatePmf(prior); !s.ok()) return s;
  std::vector<double> out(channel.cols(), 0.0);
  std::vector<double> terms(channel.rows());
  for (size_t y = 0; y < channel.cols(); ++y) {
    for (size_t x = 0; x < channel.rows(); ++x) {
      terms[x] = prior[x] * channel.at(x, y);
    }
    out[y] = PairwiseSum(terms);
  }
  return out;
}

absl::StatusOr<double> MaxFDivergence(double epsilon, double eta,
                                      const DivergenceSpec& spec) {
  if (absl::Status s = ValidateLocalBudget(epsilon, eta); !s.ok()) return s;
  if (absl::Status s = ValidateSpec(spec); !s.ok()) return s;
  if (epsilon == 0.0) return 0.0;
  absl::StatusOr<double> up = EvaluateGenerator(spec, std::exp(epsilon));
  if (!up.ok()) return up.status();
  absl::StatusOr<double> down = EvaluateGenerator(spec, std::exp(-epsilon));
  if (!down.ok()) return down.status();
  return eta * (*up + std::exp(epsilon) * *down) / std::expm1(epsilon);
}

absl::StatusOr<double> KlContractionBound(double epsilon, double eta) {
  if (absl::Status s = ValidateLocalBudget(epsilon, eta); !s.ok()) return s;
  return eta * std::tanh(epsilon / 2.0);
}

absl::StatusOr<EtaKlEstimate> EstimateEtaKl(const Channel& channel,
                                            int grid_size) {
  if (grid_size < 3) {
    return absl::InvalidArgumentError(
        absl::StrFormat("beta grid size must be >= 3, got %d", grid_size));
  }
  EtaKlEstimate best;
  best.value = -1.0;
  for (size_t a = 0; a < channel.rows(); ++a) {
    for (size_t b = a + 1; b < channel.rows(); ++b) {
      for (int i = 1; i <= grid_size; ++i) {
        const double beta = static_cast<double>(i) / (grid_size + 1);
        absl::StatusOr<double> lc =
            LeCamDivergence(channel.row(a), channel.row(b), beta);
        if (!lc.ok()) return lc.status();
        if (*lc > best.value) best = {*lc, beta, a, b};
      }
    }
  }
  if (best.value < 0.0) best = {0.0, 0.5, 0, 0};
  return best;
}

absl::StatusOr<double> Chi2OutputBound(double epsilon, double eta,
                                       double tv_in) {
  if (absl::Status s = ValidateLocalBudget(epsilon, eta); !s.ok()) return s;
  if (!(tv_in >= 0.0 && tv_in <= 1.0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("input TV must lie in [0, 1], got %g", tv_in));
  }
  return 4.0 * eta * std::expm1(epsilon) * (std::exp(-epsilon) + 1.0) * tv_in *
         tv_in;
}

absl::StatusOr<double> OptConversionFactor(double epsilon, double eta) {
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError(
        "the conversion factor is defined only for eps > 0");
  }
  if (absl::Status s = ValidateLocalBudget(epsilon, eta); !s.ok()) return s;
  return std::min(1.0, eta / std::tanh(epsilon / 2.0));
}

absl::StatusOr<Channel> RandomizedResponse(double epsilon, int m) {
  if (m < 2) {
    return absl::InvalidArgumentError(
        absl::StrFormat("randomized response needs M >= 2, got %d", m));
  }
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps must be finite and >= 0, got %g", epsilon));
  }
  const double denom = std::exp(epsilon) + m - 1;
  const double on = std::exp(epsilon) / denom;
  const double off = 1.0 / denom;
  std::vector<std::vector<double>> matrix(m, std::vector<double>(m, off));
  for (int i = 0; i < m; ++i) matrix[i][i] = on;
  return Channel::Create(matrix);
}

absl::StatusOr<double> BeRatioLowerBound(double epsilon, double eta) {
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError("the ratio bound needs eps > 0");
  }
  if (absl::Status s = ValidateLocalBudget(epsilon, eta); !s.ok()) return s;
  return eta / (2.0 * std::expm1(epsilon) * (std::exp(-epsilon) + 1.0));
}

absl::StatusOr<Channel> EraseChannel(const Channel& channel, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("erasure alpha must lie in [0, 1], got %g", alpha));
  }
  std::vector<std::vector<double>> matrix = channel.ToMatrix();
  for (std::vector<double>& r : matrix) {
    for (double& v : r) v *= 1.0 - alpha;
    r.push_back(alpha);
  }
  return Channel::Create(matrix);
}

}  // namespace tvdp
