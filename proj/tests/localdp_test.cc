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


#include <cmath>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/generators.h"
#include "support/status_matchers.h"
#include "tvdp/budget.h"
#include "tvdp/distribution.h"
#include "tvdp/divergences.h"
#include "tvdp/localdp.h"

namespace tvdp {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;
using ::tvdp::testing::IsOk;
using ::tvdp::testing::MakeRng;
using ::tvdp::testing::RandomEpsEtaChannel;
using ::tvdp::testing::RandomLdpChannel;
using ::tvdp::testing::RandomPmf;
using ::tvdp::testing::StatusIs;
using ::tvdp::testing::Uniform;

double LocalMaxEta(double eps) { return std::tanh(eps / 2); }

double Kl(std::span<const double> p, std::span<const double> q) {
  long double total = 0.0L;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return kInf;
    total += p[i] * std::log(p[i] / q[i]);
  }
  return static_cast<double>(total);
}

double Chi2(std::span<const double> p, std::span<const double> q) {
  long double total = 0.0L;
  for (size_t i = 0; i < p.size(); ++i) {
    if (q[i] == 0.0) {
      if (p[i] > 0.0) return kInf;
      continue;
    }
    total += (p[i] - q[i]) * (p[i] - q[i]) / q[i];
  }
  return static_cast<double>(total);
}

double Tv(std::span<const double> p, std::span<const double> q) {
  double total = 0.0;
  for (size_t i = 0; i < p.size(); ++i) total += std::abs(p[i] - q[i]);
  return total / 2;
}

TEST(ChannelTest, RejectsMalformedMatrices) {
  EXPECT_THAT(Channel::Create({}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(Channel::Create({{0.5, 0.5}, {1.0}}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(Channel::Create({{0.5, 0.6}}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  absl::StatusOr<Channel> c = Channel::Create({{0.25, 0.75}, {0.5, 0.5}});
  ASSERT_THAT(c, IsOk());
  EXPECT_EQ(c->rows(), 2u);
  EXPECT_EQ(c->cols(), 2u);
  EXPECT_EQ(c->at(1, 0), 0.5);
  EXPECT_EQ(c->ToMatrix()[0][1], 0.75);
}

TEST(LdpEpsilonTest, RatiosAndZeros) {
  EXPECT_NEAR(LdpEpsilon(*Channel::Create({{0.75, 0.25}, {0.25, 0.75}})),
              std::log(3.0), 1e-15);
  EXPECT_EQ(LdpEpsilon(*Channel::Create({{1.0, 0.0}, {0.5, 0.5}})), kInf);
  EXPECT_EQ(LdpEpsilon(*Channel::Create({{1.0, 0.0}, {1.0, 0.0}})), 0.0);
  EXPECT_NEAR(Dobrushin(*Channel::Create({{1.0, 0.0}, {0.5, 0.5}})), 0.5,
              1e-15);
}

TEST(QStarTest, WorkedExample) {
  const double eta = 0.3;
  absl::StatusOr<Channel> q = QStar(1.0, eta);
  ASSERT_THAT(q, IsOk());
  const double e = std::exp(1.0);
  EXPECT_THAT(q->ToMatrix()[0],
              ElementsAre(DoubleNear(eta * e / (e - 1), 1e-15),
                          DoubleNear(eta / (e - 1), 1e-15),
                          DoubleNear(1 - eta * (e + 1) / (e - 1), 1e-15)));
  EXPECT_NEAR(q->at(0, 0), 0.474593, 5e-7);
  EXPECT_NEAR(q->at(0, 1), 0.174593, 5e-7);
  EXPECT_NEAR(q->at(0, 2), 0.350814, 5e-7);
  EXPECT_NEAR(LdpEpsilon(*q), 1.0, 1e-12);
  EXPECT_NEAR(Dobrushin(*q), eta, 1e-15);
}

TEST(QStarTest, Validation) {
  EXPECT_THAT(QStar(0.0, 0.0), StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_FALSE(QStar(1.0, 0.5).ok());
  EXPECT_THAT(QStar(1.0, LocalMaxEta(1.0)), IsOk());
}

TEST(QStarTest, EtaKlEstimateMatchesClosedForm) {
  absl::StatusOr<EtaKlEstimate> est = EstimateEtaKl(*QStar(1.0, 0.3), 2001);
  ASSERT_THAT(est, IsOk());
  EXPECT_NEAR(est->value, 0.3 * std::tanh(0.5), 1e-9);
  EXPECT_NEAR(est->value, 0.138635, 5e-7);
  EXPECT_NEAR(est->beta, 0.5, 1e-12);
  EXPECT_NE(est->row_a, est->row_b);
  EXPECT_THAT(EstimateEtaKl(*QStar(1.0, 0.3), 2),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(MaxFDivergenceTest, AttainedByQStar) {
  auto rng = MakeRng(91);
  for (int i = 0; i < 200; ++i) {
    const double eps = Uniform(rng, 0.05, 4.0);
    const double eta = Uniform(rng, 0.0, LocalMaxEta(eps));
    const Channel q = *QStar(eps, eta);
    EXPECT_NEAR(*MaxFDivergence(eps, eta, KullbackLeiblerSpec{}),
                Kl(q.row(0), q.row(1)), 1e-12);
    EXPECT_NEAR(*MaxFDivergence(eps, eta, ChiSquaredSpec{}),
                Chi2(q.row(0), q.row(1)), 1e-10);
    EXPECT_NEAR(*MaxFDivergence(eps, eta, TotalVariationSpec{}), eta, 1e-12);
    EXPECT_NEAR(*MaxFDivergence(eps, eta, KullbackLeiblerSpec{}), eta * eps,
                1e-12);
    EXPECT_NEAR(*MaxFDivergence(eps, eta, ChiSquaredSpec{}),
                eta * std::expm1(eps) * (1 + std::exp(-eps)), 1e-10);
  }
  EXPECT_EQ(*MaxFDivergence(0.0, 0.0, KullbackLeiblerSpec{}), 0.0);
}

// Random members of the class respect every upper bound.
TEST(LocalClassTest, RandomChannelsRespectBounds) {
  auto rng = MakeRng(92);
  for (int i = 0; i < 150; ++i) {
    const double eps = Uniform(rng, 0.1, 3.0);
    const double eta = Uniform(rng, 0.01, LocalMaxEta(eps));
    const int rows = 2 + static_cast<int>(Uniform(rng, 0, 3));
    const int cols = 2 + static_cast<int>(Uniform(rng, 0, 4));
    const Channel q = RandomEpsEtaChannel(rng, rows, cols, eps, eta);
    ASSERT_LE(LdpEpsilon(q), eps + 1e-9);
    ASSERT_LE(Dobrushin(q), eta + 1e-9);

    const double max_kl = *MaxFDivergence(eps, eta, KullbackLeiblerSpec{});
    const double max_chi2 = *MaxFDivergence(eps, eta, ChiSquaredSpec{});
    for (size_t a = 0; a < q.rows(); ++a) {
      for (size_t b = 0; b < q.rows(); ++b) {
        EXPECT_LE(Kl(q.row(a), q.row(b)), max_kl + 1e-12);
        EXPECT_LE(Chi2(q.row(a), q.row(b)), max_chi2 + 1e-10);
      }
    }

    const double contraction = *KlContractionBound(eps, eta);
    EXPECT_LE(EstimateEtaKl(q, 51)->value, contraction + 1e-12);

    const std::vector<double> p0 = RandomPmf(rng, rows);
    const std::vector<double> p1 = RandomPmf(rng, rows);
    const std::vector<double> out0 = *PushForward(q, p0);
    const std::vector<double> out1 = *PushForward(q, p1);
    EXPECT_LE(Kl(out0, out1), contraction * Kl(p0, p1) + 1e-12);
    EXPECT_LE(Chi2(out0, out1), *Chi2OutputBound(eps, eta, Tv(p0, p1)) + 1e-12);
    EXPECT_LE(Tv(out0, out1), eta * Tv(p0, p1) + 1e-12);
  }
}

TEST(BinaryErasureTest, ScalesTotalVariation) {
  auto rng = MakeRng(93);
  for (int i = 0; i < 200; ++i) {
    const DiscretePair pair = testing::RandomPair(rng, 6, 0.2);
    const double eps = Uniform(rng, 0.1, 3.0);
    const double eta = Uniform(rng, 0.0, LocalMaxEta(eps));
    absl::StatusOr<Channel> be = BinaryErasureMechanism(pair, eps, eta);
    ASSERT_THAT(be, IsOk());
    EXPECT_EQ(be->rows(), pair.alphabet_size());
    EXPECT_EQ(be->cols(), 3u);
    EXPECT_LE(LdpEpsilon(*be), eps + 1e-12);
    const std::vector<double> out0 = *PushForward(*be, pair.p0());
    const std::vector<double> out1 = *PushForward(*be, pair.p1());
    EXPECT_NEAR(Tv(out0, out1), eta * Tv(pair.p0(), pair.p1()), 1e-12);
  }
}

TEST(BinaryErasureTest, TiesUseFirstRow) {
  const DiscretePair pair = *DiscretePair::Create({0.5, 0.5}, {0.5, 0.5});
  const Channel be = *BinaryErasureMechanism(pair, 1.0, 0.3);
  const Channel q = *QStar(1.0, 0.3);
  EXPECT_EQ(be.at(0, 0), q.at(0, 0));
  EXPECT_EQ(be.at(1, 0), q.at(0, 0));
}

TEST(PushForwardTest, ValidatesPrior) {
  const Channel q = *QStar(1.0, 0.3);
  EXPECT_FALSE(PushForward(q, std::vector<double>{1.0}).ok());
  EXPECT_FALSE(PushForward(q, std::vector<double>{0.7, 0.7}).ok());
  EXPECT_THAT(*PushForward(q, std::vector<double>{1.0, 0.0}),
              ElementsAre(q.at(0, 0), q.at(0, 1), q.at(0, 2)));
}

TEST(RandomizedResponseTest, IsPureLdp) {
  for (int m : {2, 3, 10}) {
    for (double eps : {0.0, 0.5, 2.0}) {
      absl::StatusOr<Channel> rr = RandomizedResponse(eps, m);
      ASSERT_THAT(rr, IsOk());
      EXPECT_NEAR(LdpEpsilon(*rr), eps, 1e-12);
      EXPECT_NEAR(Dobrushin(*rr), std::expm1(eps) / (std::exp(eps) + m - 1),
                  1e-12);
    }
  }
  EXPECT_THAT(RandomizedResponse(1.0, 1),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(EraseChannelTest, ScalesDobrushin) {
  const Channel rr = *RandomizedResponse(1.0, 3);
  absl::StatusOr<Channel> erased = EraseChannel(rr, 0.4);
  ASSERT_THAT(erased, IsOk());
  EXPECT_EQ(erased->cols(), 4u);
  EXPECT_NEAR(Dobrushin(*erased), 0.6 * Dobrushin(rr), 1e-15);
  EXPECT_NEAR(LdpEpsilon(*erased), LdpEpsilon(rr), 1e-12);
  EXPECT_THAT(EraseChannel(rr, 1.5), StatusIs(absl::StatusCode::kOutOfRange));
}

TEST(ScalarBoundsTest, ClosedForms) {
  const double eps = 1.0;
  const double eta = 0.3;
  const double e = std::exp(eps);
  EXPECT_NEAR(*KlContractionBound(eps, eta), eta * (e - 1) / (e + 1), 1e-15);
  EXPECT_NEAR(*Chi2OutputBound(eps, eta, 0.2),
              4 * eta * (e - 1) * (1 / e + 1) * 0.04, 1e-15);
  EXPECT_NEAR(*OptConversionFactor(eps, eta), eta * (e + 1) / (e - 1), 1e-15);
  EXPECT_NEAR(*BeRatioLowerBound(eps, eta),
              eta / (2 * (e - 1) * (1 / e + 1)), 1e-15);
  EXPECT_THAT(Chi2OutputBound(eps, eta, 1.5),
              StatusIs(absl::StatusCode::kOutOfRange));
  EXPECT_FALSE(OptConversionFactor(0.0, 0.0).ok());
  EXPECT_FALSE(BeRatioLowerBound(0.0, 0.0).ok());
  EXPECT_FALSE(KlContractionBound(1.0, 0.9).ok());
}

// Erasing an eps-LDP channel at the optimal rate lands in the class.
TEST(ScalarBoundsTest, ConversionKeepsClassMembership) {
  auto rng = MakeRng(94);
  for (int i = 0; i < 50; ++i) {
    const double eps = Uniform(rng, 0.1, 3.0);
    const double eta = Uniform(rng, 0.0, LocalMaxEta(eps));
    const Channel ldp = RandomLdpChannel(rng, 3, 4, eps);
    const double keep = *OptConversionFactor(eps, eta);
    const Channel erased = *EraseChannel(ldp, 1 - keep);
    EXPECT_LE(Dobrushin(erased), eta + 1e-12);
    EXPECT_LE(LdpEpsilon(erased), eps + 1e-9);
  }
}

}  // namespace
}  // namespace tvdp
