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
#include "tvdp/distribution.h"
#include "tvdp/divergences.h"
#include "tvdp/localdp.h"
#include "tvdp/mechanisms.h"

namespace tvdp {
namespace {

using ::testing::HasSubstr;
using ::tvdp::testing::IsOk;
using ::tvdp::testing::MakeRng;
using ::tvdp::testing::RandomPair;
using ::tvdp::testing::RandomPmf;
using ::tvdp::testing::StatusIs;
using ::tvdp::testing::Uniform;

constexpr double kEta = 0.323482;

const std::vector<DivergenceSpec>& BuiltIns() {
  static const auto* specs = new std::vector<DivergenceSpec>{
      TotalVariationSpec{}, KullbackLeiblerSpec{}, ChiSquaredSpec{},
      LeCamSpec{0.3}};
  return *specs;
}

// Direct summation of sum_y p1 f(p0 / p1) on full-support pairs.
double DirectSum(const DiscretePair& pair, double (*f)(double)) {
  long double s = 0.0L;
  for (size_t y = 0; y < pair.alphabet_size(); ++y) {
    s += pair.p1()[y] * f(pair.p0()[y] / pair.p1()[y]);
  }
  return static_cast<double>(s);
}

std::vector<double> Mix(const std::vector<double>& a,
                        const std::vector<double>& b, double lambda) {
  std::vector<double> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = lambda * a[i] + (1.0 - lambda) * b[i];
  }
  return out;
}

TEST(FDivergenceTest, ZeroOnEqualDistributions) {
  absl::StatusOr<DiscretePair> pair =
      DiscretePair::Create({0.25, 0.25, 0.25, 0.25}, {0.25, 0.25, 0.25, 0.25});
  ASSERT_THAT(pair, IsOk());
  for (const DivergenceSpec& spec : BuiltIns()) {
    EXPECT_EQ(*FDivergence(*pair, spec), 0.0) << SpecName(spec);
  }
}

TEST(FDivergenceTest, DominatingPureValues) {
  absl::StatusOr<DiscretePair> pair = DominatingPure(1.0, kEta);
  ASSERT_THAT(pair, IsOk());
  EXPECT_NEAR(KlDivergence(*pair), kEta * 1.0, 1e-9);
  EXPECT_NEAR(TvDistance(*pair), kEta, 1e-12);
  double direct_tv = 0.0;
  for (size_t y = 0; y < 3; ++y) {
    direct_tv += std::max(0.0, pair->p0()[y] - pair->p1()[y]);
  }
  EXPECT_NEAR(TvDistance(*pair), direct_tv, 1e-15);
  EXPECT_NEAR(KlDivergence(*pair),
              DirectSum(*pair, [](double t) { return t * std::log(t); }),
              1e-14);
  EXPECT_NEAR(ChiSquaredDivergence(*pair),
              DirectSum(*pair, [](double t) { return (t - 1) * (t - 1); }),
              1e-14);
}

TEST(FDivergenceTest, BoundaryConventions) {
  const std::vector<double> p0 = {0.5, 0.5, 0.0};
  const std::vector<double> p1 = {0.5, 0.0, 0.5};
  EXPECT_EQ(KlDivergence(p0, p1), kInf);
  EXPECT_EQ(ChiSquaredDivergence(p0, p1), kInf);
  EXPECT_DOUBLE_EQ(TvDistance(p0, p1), 0.5);
  const double beta = 0.25;
  // (1 - beta) p0 where p1 = 0 and beta p1 where p0 = 0.
  EXPECT_NEAR(*LeCamDivergence(p0, p1, beta),
              (1 - beta) * 0.5 + beta * 0.5, 1e-15);
  // Custom generator with a finite slope at infinity.
  CustomSpec custom{[](double t) { return std::abs(t - 1.0) / 2.0; }, 0.5};
  EXPECT_NEAR(*FDivergence(p0, p1, custom), 0.5, 1e-15);
}

TEST(FDivergenceTest, CustomGeneratorAgreesWithBuiltIn) {
  auto rng = MakeRng(41);
  CustomSpec kl{[](double t) { return t == 0.0 ? 0.0 : t * std::log(t); }};
  for (int i = 0; i < 200; ++i) {
    const DiscretePair pair = RandomPair(rng, 8);
    EXPECT_NEAR(*FDivergence(pair, kl), KlDivergence(pair), 1e-13);
  }
}

TEST(FDivergenceTest, RejectsInvalidSpecs) {
  CustomSpec bad{[](double t) { return t; }};
  EXPECT_THAT(ValidateSpec(bad), StatusIs(absl::StatusCode::kInvalidArgument,
                                          HasSubstr("f(1) = 0")));
  EXPECT_THAT(ValidateSpec(CustomSpec{}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  absl::StatusOr<DiscretePair> pair = DiscretePair::Create({1.0}, {1.0});
  ASSERT_THAT(pair, IsOk());
  EXPECT_THAT(LeCamDivergence(*pair, 0.0),
              StatusIs(absl::StatusCode::kOutOfRange));
  EXPECT_THAT(LeCamDivergence(*pair, 1.0),
              StatusIs(absl::StatusCode::kOutOfRange));
  EXPECT_THAT(FDivergence(std::vector<double>{1.0},
                          std::vector<double>{0.5, 0.5}, KullbackLeiblerSpec{}),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(FDivergenceTest, SpecNames) {
  EXPECT_EQ(SpecName(TotalVariationSpec{}), "tv");
  EXPECT_EQ(SpecName(KullbackLeiblerSpec{}), "kl");
  EXPECT_EQ(SpecName(ChiSquaredSpec{}), "chi2");
  EXPECT_EQ(SpecName(LeCamSpec{0.5}), "lecam(0.5)");
}

TEST(EvaluateGeneratorTest, BuiltInGenerators) {
  EXPECT_NEAR(*EvaluateGenerator(KullbackLeiblerSpec{}, 2.0), 2 * std::log(2.0),
              1e-15);
  EXPECT_DOUBLE_EQ(*EvaluateGenerator(ChiSquaredSpec{}, 3.0), 4.0);
  EXPECT_DOUBLE_EQ(*EvaluateGenerator(TotalVariationSpec{}, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(*EvaluateGenerator(TotalVariationSpec{}, 1.5), 0.5);
  EXPECT_NEAR(*EvaluateGenerator(LeCamSpec{0.5}, 3.0), 0.25 * 4.0 / 2.0, 1e-15);
  EXPECT_THAT(EvaluateGenerator(ChiSquaredSpec{}, -1.0),
              StatusIs(absl::StatusCode::kOutOfRange));
}

TEST(LeCamTest, DominatingPureSupremumAtOneHalf) {
  absl::StatusOr<DiscretePair> pair = DominatingPure(1.0, kEta);
  ASSERT_THAT(pair, IsOk());
  const double expect = kEta * std::tanh(0.5);
  EXPECT_NEAR(*LeCamDivergence(*pair, 0.5), expect, 1e-14);
  EXPECT_NEAR(expect, 0.149487, 1e-6);
  double best = -1.0;
  double argmax = 0.0;
  for (int i = 1; i <= 1001; ++i) {
    const double beta = i / 1002.0;
    const double v = *LeCamDivergence(*pair, beta);
    if (v > best) {
      best = v;
      argmax = beta;
    }
  }
  EXPECT_NEAR(best, 0.149487, 1e-6);
  EXPECT_NEAR(argmax, 0.5, 1e-3);
}

TEST(LeCamTest, MatchesClosedForm) {
  auto rng = MakeRng(42);
  for (int i = 0; i < 200; ++i) {
    const DiscretePair pair = RandomPair(rng, 8);
    const double beta = Uniform(rng, 0.01, 0.99);
    long double s = 0.0L;
    for (size_t y = 0; y < pair.alphabet_size(); ++y) {
      const long double r = pair.p0()[y] / pair.p1()[y];
      s += pair.p1()[y] * beta * (1 - beta) * (r - 1) * (r - 1) /
           (beta * r + 1 - beta);
    }
    EXPECT_NEAR(*LeCamDivergence(pair, beta), static_cast<double>(s), 1e-14);
  }
}

TEST(DivergencePropertyTest, DataProcessingInequality) {
  auto rng = MakeRng(43);
  for (int i = 0; i < 500; ++i) {
    const DiscretePair pair = RandomPair(rng, 6, 0.1);
    const int outputs = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<std::vector<double>> w;
    for (size_t x = 0; x < pair.alphabet_size(); ++x) {
      w.push_back(RandomPmf(rng, outputs, 0.2));
    }
    const Channel channel = *Channel::Create(w);
    const std::vector<double> m0 = *PushForward(channel, pair.p0());
    const std::vector<double> m1 = *PushForward(channel, pair.p1());
    for (const DivergenceSpec& spec : BuiltIns()) {
      const double before = *FDivergence(pair, spec);
      const double after = *FDivergence(m0, m1, spec);
      EXPECT_LE(after, before + 1e-9) << SpecName(spec);
    }
  }
}

TEST(DivergencePropertyTest, PinskerAndChiSquaredBound) {
  auto rng = MakeRng(44);
  for (int i = 0; i < 1000; ++i) {
    const DiscretePair pair = RandomPair(rng, 10);
    const double tv = TvDistance(pair);
    const double kl = KlDivergence(pair);
    EXPECT_GE(kl, 2.0 * tv * tv - 1e-9);
    EXPECT_LE(kl, std::log1p(ChiSquaredDivergence(pair)) + 1e-9);
  }
}

TEST(DivergencePropertyTest, JointConvexity) {
  auto rng = MakeRng(45);
  for (int i = 0; i < 500; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const std::vector<double> p = RandomPmf(rng, n);
    const std::vector<double> q = RandomPmf(rng, n);
    const std::vector<double> p2 = RandomPmf(rng, n);
    const std::vector<double> q2 = RandomPmf(rng, n);
    const double lambda = Uniform(rng, 0.0, 1.0);
    for (const DivergenceSpec& spec : BuiltIns()) {
      const double mixed =
          *FDivergence(Mix(p, p2, lambda), Mix(q, q2, lambda), spec);
      const double split = lambda * *FDivergence(p, q, spec) +
                           (1 - lambda) * *FDivergence(p2, q2, spec);
      EXPECT_LE(mixed, split + 1e-9) << SpecName(spec);
    }
  }
}

}  // namespace
}  // namespace tvdp
