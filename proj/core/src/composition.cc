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

#include "tvdp/composition.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "absl/strings/str_format.h"
#include "tvdp/log_math.h"
#include "tvdp/mechanisms.h"

namespace tvdp {
namespace {

constexpr double kAlphaSnap = 1e-12;
constexpr double kMaxDirectOutcomes = 1e7;
constexpr double kRatioTieTolerance = 1e-12;
constexpr double kLatticeTolerance = 1e-9;
constexpr int kMaxLatticeMultiple = 16;
constexpr int kExactResidualCutoff = 32;

double Softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

// Log-probabilities of one step of the dominating privacy-loss walk.
struct StepLaw {
  double log_up = kNegInf;
  double log_stay = kNegInf;
  double log_down = kNegInf;
};

StepLaw LawFor(double epsilon, double alpha) {
  StepLaw law;
  if (alpha < 1.0) {
    const double informative = std::log1p(-alpha);
    law.log_up = informative - Softplus(-epsilon);
    law.log_down = informative - Softplus(epsilon);
  }
  if (alpha > 0.0) law.log_stay = std::log(alpha);
  return law;
}

std::vector<double> LogFactorials(int k) {
  std::vector<double> table(k + 1);
  for (int n = 0; n <= k; ++n) table[n] = std::lgamma(n + 1.0);
  return table;
}

// log P(L = m eps) for m = 0..k under the walk, where `log_coef(stays,
// downs)` gives the log multinomial coefficient of the type. Only m >= 1
// matters for the ledger; bin 0 is left at -inf.
template <class LogCoef>
std::vector<double> LossMasses(const StepLaw& law, int k, LogCoef log_coef) {
  std::vector<LogAccumulator> bins(k + 1);
  const int max_stays = law.log_stay == kNegInf ? 0 : k;
  if (law.log_up != kNegInf) {
    for (int a = 0; a <= max_stays; ++a) {
      const int n = k - a;
      const double stay_part = a == 0 ? 0.0 : a * law.log_stay;
      // Downs l with n - 2l >= 1.
      for (int l = 0; 2 * l + 1 <= n; ++l) {
        const double down_part = l == 0 ? 0.0 : l * law.log_down;
        bins[n - 2 * l].Add(log_coef(a, l) + stay_part + (n - l) * law.log_up +
                            down_part);
      }
    }
  }
  std::vector<double> out(k + 1, kNegInf);
  for (int m = 1; m <= k; ++m) out[m] = bins[m].Result();
  return out;
}

// delta_j = sum_{m > j} P(m) (1 - e^{-(m - j) eps}) for j = 0..k.
std::vector<double> InnerDeltas(const std::vector<double>& log_mass,
                                double epsilon, int k) {
  std::vector<double> inner(k + 1, 0.0);
  double shift = kNegInf;
  for (int m = 1; m <= k; ++m) shift = std::max(shift, log_mass[m]);
  if (shift == kNegInf || epsilon == 0.0) return inner;
  std::vector<double> scaled(k + 1, 0.0);
  for (int m = 1; m <= k; ++m) scaled[m] = std::exp(log_mass[m] - shift);
  std::vector<double> gap(k + 1, 0.0);
  for (int d = 1; d <= k; ++d) gap[d] = -std::expm1(-d * epsilon);
  const double scale = std::exp(shift);
  for (int j = 0; j < k; ++j) {
    long double acc = 0.0L;
    for (int m = j + 1; m <= k; ++m) acc += scaled[m] * gap[m - j];
    inner[j] = static_cast<double>(acc * scale);
  }
  return inner;
}

// Wraps inner deltas with the (1 - delta)^k factor. `step` selects which j
// appear in the ledger, starting from `first_j`.
CompositionLedger BuildLedger(const PrivacyBudget& base, int k,
                              const std::vector<double>& inner, int first_j,
                              int step) {
  CompositionLedger ledger;
  ledger.k = k;
  ledger.base = base;
  const double survive = std::pow(1.0 - base.delta, k);
  auto wrap = [&](double d, bool* clamped) {
    double v = 1.0 - survive * (1.0 - d);
    *clamped = v > 1.0;
    return std::clamp(v, 0.0, 1.0);
  };
  bool unused = false;
  ledger.eta = wrap(inner[0], &unused);
  double running = 1.0;
  for (int j = first_j; j <= k; j += step) {
    LedgerEntry e;
    e.j = j;
    e.epsilon = j * base.epsilon;
    e.delta = std::min(running, wrap(inner[j], &e.clamped));
    running = e.delta;
    ledger.entries.push_back(e);
  }
  return ledger;
}

absl::Status CheckSteps(int k) {
  if (k < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("k must be >= 1, got %d", k));
  }
  return absl::OkStatus();
}

// Validates `budget` for composition and resolves alpha. Sets
// `*degenerate` for the eps = 0, eta = delta case.
absl::StatusOr<double> ResolveAlpha(const PrivacyBudget& budget,
                                    bool* degenerate) {
  if (absl::Status s = ValidateCompositionBudget(budget); !s.ok()) return s;
  *degenerate = false;
  if (budget.epsilon == 0.0) {
    if (std::abs(budget.eta - budget.delta) > kFeasibilityTolerance) {
      return absl::InvalidArgumentError(
          "eps = 0 requires eta = delta: the composed guarantee is then "
          "1 - (1-delta)^k");
    }
    *degenerate = true;
    return 1.0;
  }
  if (!std::isfinite(budget.epsilon)) {
    return absl::InvalidArgumentError("eps must be finite for composition");
  }
  absl::StatusOr<double> alpha = AlphaFromBudget(budget);
  if (!alpha.ok()) return alpha.status();
  double a = *alpha;
  if (a < kAlphaSnap) a = 0.0;
  if (a > 1.0 - kAlphaSnap) a = 1.0;
  return a;
}

CompositionLedger DegenerateLedger(const PrivacyBudget& budget, int k) {
  CompositionLedger ledger;
  ledger.k = k;
  ledger.base = budget;
  ledger.eta = 1.0 - std::pow(1.0 - budget.delta, k);
  ledger.entries.push_back({0, 0.0, ledger.eta, false});
  return ledger;
}

// log(n!) - n log n + n.
double StirlingResidual(int n, double tol,
                        const std::vector<double>& small_table) {
  if (n < kExactResidualCutoff) return small_table[n];
  static constexpr double kCoefficients[] = {
      1.0 / 12.0,       -1.0 / 360.0,     1.0 / 1260.0,
      -1.0 / 1680.0,    1.0 / 1188.0,     -691.0 / 360360.0,
      1.0 / 156.0,      -3617.0 / 122400.0};
  const double x = static_cast<double>(n);
  double r = 0.5 * std::log(2.0 * std::numbers::pi * x);
  const double inv2 = 1.0 / (x * x);
  double power = 1.0 / x;
  for (double c : kCoefficients) {
    const double term = c * power;
    if (std::abs(term) < tol * 1e-3) break;
    r += term;
    power *= inv2;
  }
  return r;
}

}  // namespace

absl::StatusOr<CompositionLedger> ComposeExact(const PrivacyBudget& budget,
                                               int k) {
  if (absl::Status s = CheckSteps(k); !s.ok()) return s;
  bool degenerate = false;
  absl::StatusOr<double> alpha = ResolveAlpha(budget, &degenerate);
  if (!alpha.ok()) return alpha.status();
  if (degenerate) return DegenerateLedger(budget, k);
  const StepLaw law = LawFor(budget.epsilon, *alpha);
  const std::vector<double> lf = LogFactorials(k);
  const std::vector<double> log_mass =
      LossMasses(law, k, [&](int a, int l) {
        return lf[k] - lf[a] - lf[l] - lf[k - a - l];
      });
  return BuildLedger(budget, k, InnerDeltas(log_mass, budget.epsilon, k), 0,
                     1);
}

absl::StatusOr<CompositionLedger> ComposeKairouz(double epsilon, double delta,
                                                 int k) {
  if (absl::Status s = CheckSteps(k); !s.ok()) return s;
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps must be finite and >= 0, got %g", epsilon));
  }
  const PrivacyBudget budget{epsilon, delta, MaxEta(epsilon, delta)};
  if (absl::Status s = ValidateBudget(budget); !s.ok()) return s;
  const StepLaw law = LawFor(epsilon, 0.0);
  const std::vector<double> lf = LogFactorials(k);
  const std::vector<double> log_mass = LossMasses(
      law, k, [&](int a, int l) { return lf[k] - lf[a] - lf[l] - lf[k - a - l]; });
  return BuildLedger(budget, k, InnerDeltas(log_mass, epsilon, k), k % 2, 2);
}

absl::StatusOr<CompositionLedger> ComposeTypesApprox(
    const PrivacyBudget& budget, int k, double tol) {
  if (!(tol > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("tol must be > 0, got %g", tol));
  }
  if (absl::Status s = CheckSteps(k); !s.ok()) return s;
  bool degenerate = false;
  absl::StatusOr<double> alpha = ResolveAlpha(budget, &degenerate);
  if (!alpha.ok()) return alpha.status();
  if (degenerate) return DegenerateLedger(budget, k);

  std::vector<double> small(kExactResidualCutoff, 0.0);
  double log_fact = 0.0;
  for (int n = 1; n < kExactResidualCutoff; ++n) {
    log_fact += std::log(static_cast<double>(n));
    small[n] = log_fact - n * std::log(static_cast<double>(n)) + n;
  }
  // n log n and the Stirling residual for every count.
  std::vector<double> nlogn(k + 1, 0.0);
  std::vector<double> residual(k + 1, 0.0);
  for (int n = 1; n <= k; ++n) {
    nlogn[n] = n * std::log(static_cast<double>(n));
    residual[n] = StirlingResidual(n, tol, small);
  }
  // log multinomial = k log k - sum n_i log n_i + R(k) - sum R(n_i); adding
  // the step masses gives -k D(T || P) + R(k) - sum R(n_i).
  const StepLaw law = LawFor(budget.epsilon, *alpha);
  const std::vector<double> log_mass = LossMasses(law, k, [&](int a, int l) {
    const int u = k - a - l;
    return nlogn[k] - nlogn[a] - nlogn[l] - nlogn[u] + residual[k] -
           residual[a] - residual[l] - residual[u];
  });
  return BuildLedger(budget, k, InnerDeltas(log_mass, budget.epsilon, k), 0,
                     1);
}

TradeoffCurve LedgerToCurve(const CompositionLedger& ledger) {
  std::vector<Line> lines;
  lines.reserve(2 * ledger.entries.size());
  for (const LedgerEntry& e : ledger.entries) {
    if (e.epsilon > kMaxCurveEpsilon) continue;
    const double up = std::exp(e.epsilon);
    const double down = std::exp(-e.epsilon);
    lines.push_back({1.0 - e.delta, -up});
    lines.push_back({(1.0 - e.delta) * down, -down});
  }
  return TradeoffCurve::FromLines(lines);
}

absl::StatusOr<double> ComposedTv(const PrivacyBudget& budget, int k) {
  absl::StatusOr<CompositionLedger> ledger = ComposeExact(budget, k);
  if (!ledger.ok()) return ledger.status();
  return ledger->eta;
}

namespace {

absl::StatusOr<TradeoffCurve> OracleDirect(std::span<const double> p0,
                                           std::span<const double> p1, int k) {
  const double outcomes = std::pow(static_cast<double>(p0.size()), k);
  if (outcomes > kMaxDirectOutcomes) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "direct oracle needs %g outcomes (limit 1e7); use typed mode",
        outcomes));
  }
  std::vector<double> q0 = {1.0};
  std::vector<double> q1 = {1.0};
  for (int step = 0; step < k; ++step) {
    std::vector<double> n0;
    std::vector<double> n1;
    n0.reserve(q0.size() * p0.size());
    n1.reserve(q1.size() * p1.size());
    for (size_t i = 0; i < q0.size(); ++i) {
      for (size_t s = 0; s < p0.size(); ++s) {
        n0.push_back(q0[i] * p0[s]);
        n1.push_back(q1[i] * p1[s]);
      }
    }
    q0 = std::move(n0);
    q1 = std::move(n1);
  }
  return CurveFromMasses(q0, q1);
}

struct RatioClass {
  double log_ratio = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
};

absl::StatusOr<TradeoffCurve> OracleTyped(std::span<const double> p0,
                                          std::span<const double> p1, int k) {
  double z0 = 0.0;  // P0 mass where P1 = 0.
  double z1 = 0.0;  // P1 mass where P0 = 0.
  std::vector<RatioClass> classes;
  for (size_t i = 0; i < p0.size(); ++i) {
    if (p1[i] == 0.0) {
      z0 += p0[i];
      continue;
    }
    if (p0[i] == 0.0) {
      z1 += p1[i];
      continue;
    }
    const double r = std::log(p1[i]) - std::log(p0[i]);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const RatioClass& c) {
      return std::abs(c.log_ratio - r) <= kRatioTieTolerance;
    });
    if (it == classes.end()) {
      classes.push_back({r, p0[i], p1[i]});
    } else {
      it->p0 += p0[i];
      it->p1 += p1[i];
    }
  }
  if (classes.size() > 3) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "typed oracle supports at most 3 likelihood-ratio classes, got %d; "
        "use direct mode",
        classes.size()));
  }
  double base = 0.0;
  for (const RatioClass& c : classes) {
    if (c.log_ratio != 0.0 && (base == 0.0 || std::abs(c.log_ratio) < base)) {
      base = std::abs(c.log_ratio);
    }
  }
  if (base == 0.0) base = 1.0;
  std::vector<int> multiple(classes.size());
  for (size_t g = 0; g < classes.size(); ++g) {
    const double q = classes[g].log_ratio / base;
    multiple[g] = static_cast<int>(std::lround(q));
    if (std::abs(q - multiple[g]) > kLatticeTolerance ||
        std::abs(multiple[g]) > kMaxLatticeMultiple) {
      return absl::ResourceExhaustedError(
          "typed oracle needs log-likelihood ratios on a common integer "
          "lattice; use direct mode");
    }
  }
  while (classes.size() < 3) {
    classes.push_back({0.0, 0.0, 0.0});
    multiple.push_back(0);
  }
  const int offset = k * kMaxLatticeMultiple;
  std::vector<LogAccumulator> bin0(2 * offset + 1);
  std::vector<LogAccumulator> bin1(2 * offset + 1);
  const std::vector<double> lf = LogFactorials(k);
  double lp0[3];
  double lp1[3];
  for (int g = 0; g < 3; ++g) {
    lp0[g] = classes[g].p0 > 0.0 ? std::log(classes[g].p0) : kNegInf;
    lp1[g] = classes[g].p1 > 0.0 ? std::log(classes[g].p1) : kNegInf;
  }
  auto power = [](int n, double lp) { return n == 0 ? 0.0 : n * lp; };
  for (int n0 = 0; n0 <= k; ++n0) {
    if (n0 > 0 && lp0[0] == kNegInf) break;
    for (int n1 = 0; n0 + n1 <= k; ++n1) {
      if (n1 > 0 && lp0[1] == kNegInf) break;
      const int n2 = k - n0 - n1;
      if (n2 > 0 && lp0[2] == kNegInf) continue;
      const double coef = lf[k] - lf[n0] - lf[n1] - lf[n2];
      const int m = n0 * multiple[0] + n1 * multiple[1] + n2 * multiple[2];
      bin0[m + offset].Add(coef + power(n0, lp0[0]) + power(n1, lp0[1]) +
                           power(n2, lp0[2]));
      bin1[m + offset].Add(coef + power(n0, lp1[0]) + power(n1, lp1[1]) +
                           power(n2, lp1[2]));
    }
  }
  std::vector<double> m0 = {0.0};
  std::vector<double> m1 = {-std::expm1(k * std::log1p(-std::min(z1, 1.0)))};
  for (size_t b = 0; b < bin0.size(); ++b) {
    const double a0 = std::exp(bin0[b].Result());
    const double a1 = std::exp(bin1[b].Result());
    if (a0 > 0.0 || a1 > 0.0) {
      m0.push_back(a0);
      m1.push_back(a1);
    }
  }
  m0.push_back(-std::expm1(k * std::log1p(-std::min(z0, 1.0))));
  m1.push_back(0.0);
  return CurveFromMasses(m0, m1);
}

}  // namespace

absl::StatusOr<TradeoffCurve> OracleCompose(const DiscretePair& pair, int k,
                                            OracleMode mode) {
  if (absl::Status s = CheckSteps(k); !s.ok()) return s;
  std::vector<double> p0;
  std::vector<double> p1;
  for (size_t i = 0; i < pair.alphabet_size(); ++i) {
    if (pair.p0()[i] > 0.0 || pair.p1()[i] > 0.0) {
      p0.push_back(pair.p0()[i]);
      p1.push_back(pair.p1()[i]);
    }
  }
  const bool fits =
      std::pow(static_cast<double>(p0.size()), k) <= kMaxDirectOutcomes;
  if (mode == OracleMode::kDirect || (mode == OracleMode::kAuto && fits)) {
    return OracleDirect(p0, p1, k);
  }
  return OracleTyped(p0, p1, k);
}

}  // namespace tvdp
