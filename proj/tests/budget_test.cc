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
#include "tvdp/log_math.h"

namespace tvdp {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::tvdp::testing::IsOk;
using ::tvdp::testing::MakeRng;
using ::tvdp::testing::StatusIs;

TEST(MaxEtaTest, ClosedForm) {
  EXPECT_NEAR(MaxEta(1.0, 0.0), (std::exp(1.0) - 1) / (std::exp(1.0) + 1),
              1e-15);
  EXPECT_NEAR(MaxEta(1.0, 0.0), 0.462117, 1e-6);
  EXPECT_DOUBLE_EQ(MaxEta(0.0, 0.25), 0.25);
  EXPECT_DOUBLE_EQ(MaxEta(kInf, 0.3), 1.0);
  EXPECT_NEAR(MaxEta(1.0, 0.1), 0.1 + 0.9 * 0.4621171572600098, 1e-15);
}

TEST(ValidateBudgetTest, AcceptsTheFeasibleRange) {
  EXPECT_THAT(ValidateBudget({1.0, 0.0, 0.323482}), IsOk());
  EXPECT_THAT(ValidateBudget({0.0, 0.0, 0.0}), IsOk());
  EXPECT_THAT(ValidateBudget({1.0, 0.0, MaxEta(1.0, 0.0)}), IsOk());
  // eta < delta is a valid single-mechanism budget.
  EXPECT_THAT(ValidateBudget({1.0, 0.2, 0.1}), IsOk());
}

TEST(ValidateBudgetTest, NamesTheViolatedInequality) {
  EXPECT_THAT(ValidateBudget({1.0, 0.0, 0.5}),
              StatusIs(absl::StatusCode::kInvalidArgument,
                       HasSubstr("eta exceeds delta + (1-delta)(e^eps-1)/"
                                 "(e^eps+1)")));
  EXPECT_THAT(ValidateBudget({-1.0, 0.0, 0.0}),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("eps")));
  EXPECT_THAT(ValidateBudget({1.0, 1.5, 0.0}),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("delta")));
  EXPECT_THAT(ValidateBudget({1.0, 0.0, std::nan("")}),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("eta")));
}

TEST(ValidateBudgetTest, ToleranceIsOneTimesTenToTheMinusTwelve) {
  const double cap = MaxEta(1.0, 0.0);
  EXPECT_THAT(ValidateBudget({1.0, 0.0, cap + 5e-13}), IsOk());
  EXPECT_THAT(ValidateBudget({1.0, 0.0, cap + 1e-11}),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(ValidateCompositionBudgetTest, RequiresEtaAtLeastDelta) {
  EXPECT_THAT(ValidateCompositionBudget({1.0, 0.2, 0.1}),
              StatusIs(absl::StatusCode::kInvalidArgument,
                       HasSubstr("eta must be >= delta")));
  EXPECT_THAT(ValidateCompositionBudget({1.0, 0.2, 0.2}), IsOk());
}

TEST(BudgetPropertyTest, RandomBudgetsAreFeasible) {
  auto rng = MakeRng(21);
  for (int i = 0; i < 1000; ++i) {
    const PrivacyBudget b = testing::RandomBudget(rng);
    ASSERT_THAT(ValidateCompositionBudget(b), IsOk()) << b.DebugString();
  }
}

TEST(ValidatePmfTest, ChecksMassSignAndFiniteness) {
  EXPECT_THAT(ValidatePmf(std::vector<double>{0.5, 0.5}), IsOk());
  EXPECT_THAT(ValidatePmf(std::vector<double>{}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ValidatePmf(std::vector<double>{1.5, -0.5}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ValidatePmf(std::vector<double>{0.5, 0.4}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ValidatePmf(std::vector<double>{kInf, 0.0}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ValidatePmf(std::vector<double>{0.5, 0.5 + 5e-13}), IsOk());
}

TEST(DiscretePairTest, CreateAndSwap) {
  absl::StatusOr<DiscretePair> pair =
      DiscretePair::Create({0.25, 0.75}, {0.5, 0.5});
  ASSERT_THAT(pair, IsOk());
  EXPECT_EQ(pair->alphabet_size(), 2u);
  const DiscretePair swapped = pair->Swapped();
  EXPECT_THAT(std::vector<double>(swapped.p0().begin(), swapped.p0().end()),
              ElementsAre(0.5, 0.5));
  EXPECT_THAT(std::vector<double>(swapped.p1().begin(), swapped.p1().end()),
              ElementsAre(0.25, 0.75));
}

TEST(DiscretePairTest, RejectsMismatchedOrInvalidSides) {
  EXPECT_THAT(DiscretePair::Create({1.0}, {0.5, 0.5}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(DiscretePair::Create({0.5, 0.5}, {0.5, 0.6}),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("p1")));
}

}  // namespace
}  // namespace tvdp
