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

// k-fold composition of mechanisms that are (eps, delta)-DP and eta-TV.
//
// The composed guarantee is a ledger of (j eps, delta'_j) pairs, one per
// j in {0, ..., k}, together with the composed total variation. All ledgers
// are computed from the privacy-loss distribution of the dominating pair:
// one step moves the loss by +eps, 0 or -eps with probabilities
// (1-a) e^eps / (1+e^eps), a and (1-a) / (1+e^eps), and
// delta_j = E[(1 - e^(j eps - L))_+] over the k-step loss L.

#ifndef TVDP_COMPOSITION_H_
#define TVDP_COMPOSITION_H_

#include <vector>

#include "absl/status/statusor.h"
#include "tvdp/budget.h"
#include "tvdp/curves.h"
#include "tvdp/distribution.h"

namespace tvdp {

struct LedgerEntry {
  int j = 0;
  double epsilon = 0.0;
  // 1 - (1 - delta)^k (1 - delta_j).
  double delta = 0.0;
  // True when rounding pushed the value past 1 and it was clamped.
  bool clamped = false;
};

struct CompositionLedger {
  int k = 0;
  PrivacyBudget base;
  // Increasing j; delta non-increasing.
  std::vector<LedgerEntry> entries;
  // Composed total variation 1 - (1 - delta)^k (1 - delta_0).
  double eta = 0.0;
};

// Exact ledger for every j in {0, ..., k}. Requires k >= 1, eps > 0 and
// delta <= eta <= MaxEta(eps, delta); eps = 0 is accepted only with
// eta = delta and yields the single entry j = 0.
absl::StatusOr<CompositionLedger> ComposeExact(const PrivacyBudget& budget,
                                               int k);

// Baseline without a TV constraint: the (eps, delta)-DP optimal composition,
// reported for j in {k, k-2, ...}. Its eta is the composed TV of the
// (eps, delta)-DP dominating pair.
absl::StatusOr<CompositionLedger> ComposeKairouz(double epsilon, double delta,
                                                 int k);

// Same ledger as ComposeExact with the multinomial type probabilities
// evaluated as exp(-k D(T || P)) times a Stirling correction whose series is
// truncated once terms fall below tol * 1e-3. Requires tol > 0.
absl::StatusOr<CompositionLedger> ComposeTypesApprox(
    const PrivacyBudget& budget, int k, double tol);

// Upper envelope of both DP lines of every entry. Entries whose eps exceeds
// kMaxCurveEpsilon are skipped, which can only lower the curve.
TradeoffCurve LedgerToCurve(const CompositionLedger& ledger);

// The composed total variation: ComposeExact(budget, k)->eta.
absl::StatusOr<double> ComposedTv(const PrivacyBudget& budget, int k);

enum class OracleMode {
  // Direct when it fits, typed otherwise.
  kAuto,
  // Enumerates the product alphabet; requires alphabet^k <= 1e7.
  kDirect,
  // Collapses outcomes into likelihood-ratio classes. Requires at most
  // three classes with finite positive ratio whose log-ratios share an
  // integer lattice.
  kTyped,
};

// Exact curve of the k-fold product pair (P0^k, P1^k).
absl::StatusOr<TradeoffCurve> OracleCompose(const DiscretePair& pair, int k,
                                            OracleMode mode = OracleMode::kAuto);

}  // namespace tvdp

#endif  // TVDP_COMPOSITION_H_
