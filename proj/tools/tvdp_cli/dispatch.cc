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

#include "tvdp_cli/dispatch.h"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_replace.h"
#include "tvdp/amplification.h"
#include "tvdp/asymptotics.h"
#include "tvdp/budget.h"
#include "tvdp/composition.h"
#include "tvdp/curves.h"
#include "tvdp/divergences.h"
#include "tvdp/dpsgd.h"
#include "tvdp/localdp.h"
#include "tvdp/mechanisms.h"
#include "tvdp_cli/serialize.h"

namespace tvdp::cli {
namespace {

enum class InfPolicy { kReject, kCapEpsilon };

absl::StatusOr<double> ParseReal(const std::string& flag,
                                 const std::string& text,
                                 InfPolicy inf = InfPolicy::kReject) {
  const std::string lower = absl::AsciiStrToLower(text);
  if (lower == "inf" || lower == "+inf" || lower == "infinity") {
    if (inf == InfPolicy::kCapEpsilon) return MaxEpsilonFromEnv();
    return absl::InvalidArgumentError(
        absl::StrCat(flag, " must be finite, got '", text, "'"));
  }
  double value = 0.0;
  if (!absl::SimpleAtod(text, &value) || !std::isfinite(value)) {
    return absl::InvalidArgumentError(
        absl::StrCat(flag, " is not a finite number: '", text, "'"));
  }
  return value;
}

absl::StatusOr<int64_t> ParseInteger(const std::string& flag,
                                     const std::string& text) {
  int64_t value = 0;
  if (!absl::SimpleAtoi(text, &value)) {
    return absl::InvalidArgumentError(
        absl::StrCat(flag, " is not an integer: '", text, "'"));
  }
  return value;
}

absl::StatusOr<int> ParseCount(const std::string& flag,
                               const std::string& text) {
  absl::StatusOr<int64_t> v = ParseInteger(flag, text);
  if (!v.ok()) return v.status();
  if (*v < 1 || *v > 1'000'000) {
    return absl::InvalidArgumentError(
        absl::StrCat(flag, " must lie in [1, 1000000], got ", *v));
  }
  return static_cast<int>(*v);
}

// Evaluates `expr` (a StatusOr) into `lhs` or returns its status.
#define TVDP_ASSIGN_OR_RETURN(lhs, expr)     \
  auto lhs##_or = (expr);                    \
  if (!lhs##_or.ok()) return lhs##_or.status(); \
  auto lhs = *std::move(lhs##_or)

std::string Line(const Json& json) { return json.dump() + "\n"; }

// Flags shared by the budget-taking subcommands. Values stay strings until
// the subcommand runs so parse failures produce one diagnostic format.
struct BudgetFlags {
  std::string eps;
  std::string delta = "0";
  std::string eta = "max";

  void Register(CLI::App* app, bool with_delta = true) {
    app->add_option("--eps", eps,
                    "Privacy loss bound eps in nats; 'inf' selects "
                    "$TVDP_MAX_EPS (default 50)")
        ->required();
    if (with_delta) {
      app->add_option("--delta", delta, "Additive slack delta in [0, 1]")
          ->capture_default_str();
    }
    app->add_option("--eta", eta,
                    "Total variation bound eta, or 'max' for the largest "
                    "value implied by (eps, delta)")
        ->capture_default_str();
  }

  absl::StatusOr<PrivacyBudget> Parse() const {
    PrivacyBudget b;
    TVDP_ASSIGN_OR_RETURN(e, ParseReal("--eps", eps, InfPolicy::kCapEpsilon));
    TVDP_ASSIGN_OR_RETURN(d, ParseReal("--delta", delta));
    b.epsilon = e;
    b.delta = d;
    if (absl::AsciiStrToLower(eta) == "max") {
      b.eta = MaxEta(b.epsilon, b.delta);
    } else {
      TVDP_ASSIGN_OR_RETURN(h, ParseReal("--eta", eta));
      b.eta = h;
    }
    if (absl::Status s = ValidateBudget(b); !s.ok()) return s;
    return b;
  }
};

struct OutputFlags {
  std::string format = "json";
  int grid = 0;

  void Register(CLI::App* app, bool with_grid = true) {
    app->add_option("--out", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    if (with_grid) {
      app->add_option("--grid", grid,
                      "Also tabulate the curve at t = i/N for CSV output")
          ->check(CLI::Range(0, 1'000'000));
    }
  }

  bool csv() const { return format == "csv"; }
};

std::string CurveOutput(const TradeoffCurve& curve, const OutputFlags& out) {
  return out.csv() ? CurveToCsv(curve, out.grid) : Line(CurveToJson(curve));
}

using Handler = std::function<absl::StatusOr<std::string>()>;
using HandlerList = std::vector<std::pair<CLI::App*, Handler>>;

// ---------------------------------------------------------------- region

void AddRegion(CLI::App& app, HandlerList& all) {
  CLI::App* sub = app.add_subcommand(
      "region",
      "Tradeoff curve of an (eps, delta, eta) budget: the lowest type II "
      "error at each type I error for any mechanism meeting all three "
      "constraints. It is the upper envelope of the lines 1-delta-e^eps t, "
      "e^-eps (1-delta-t) and 1-eta-t.");
  auto budget = std::make_shared<BudgetFlags>();
  auto out = std::make_shared<OutputFlags>();
  budget->Register(sub);
  out->Register(sub);
  all.emplace_back(sub, [budget, out]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(b, budget->Parse());
    TVDP_ASSIGN_OR_RETURN(curve, CurveFromBudget(b));
    return CurveOutput(curve, *out);
  });
}

// --------------------------------------------------------------- compose

void AddCompose(CLI::App& app, HandlerList& all) {
  CLI::App* sub = app.add_subcommand(
      "compose",
      "Optimal k-fold adaptive composition of an (eps, delta, eta) "
      "mechanism. The result is a ledger of (eps_j, delta_j) pairs, "
      "j = 0..k, whose regions intersect to the exact composed region; "
      "delta_0 is the composed total variation. With --baseline kairouz "
      "the eta constraint is dropped.");
  auto budget = std::make_shared<BudgetFlags>();
  auto out = std::make_shared<OutputFlags>();
  auto k = std::make_shared<std::string>();
  auto baseline = std::make_shared<std::string>("none");
  auto mode = std::make_shared<std::string>("exact");
  auto tol = std::make_shared<std::string>("1e-9");
  budget->Register(sub);
  sub->add_option("-k", *k, "Number of compositions")->required();
  sub->add_option("--baseline", *baseline,
                  "'kairouz' composes (eps, delta) without eta")
      ->check(CLI::IsMember({"none", "kairouz"}))
      ->capture_default_str();
  sub->add_option("--mode", *mode,
                  "'exact' enumerates every type; 'types' uses the "
                  "multinomial large-deviation form with a correction")
      ->check(CLI::IsMember({"exact", "types"}))
      ->capture_default_str();
  sub->add_option("--tol", *tol, "Series truncation tolerance for --mode types")
      ->capture_default_str();
  out->Register(sub);
  all.emplace_back(sub, [=]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(b, budget->Parse());
    TVDP_ASSIGN_OR_RETURN(count, ParseCount("-k", *k));
    absl::StatusOr<CompositionLedger> ledger;
    if (*baseline == "kairouz") {
      ledger = ComposeKairouz(b.epsilon, b.delta, count);
    } else if (*mode == "types") {
      TVDP_ASSIGN_OR_RETURN(t, ParseReal("--tol", *tol));
      ledger = ComposeTypesApprox(b, count, t);
    } else {
      ledger = ComposeExact(b, count);
    }
    if (!ledger.ok()) return ledger.status();
    if (out->csv()) return CurveToCsv(LedgerToCurve(*ledger), out->grid);
    return Line(LedgerToJson(*ledger));
  });
}

// --------------------------------------------------------------- amplify

void AddAmplify(CLI::App& app, HandlerList& all) {
  CLI::App* sub = app.add_subcommand(
      "amplify",
      "Budget of the mechanism run on a random subsample that contains "
      "each record with probability p: eps' = log(1 + p(e^eps - 1)), "
      "delta' = p delta, eta' = p eta.");
  auto budget = std::make_shared<BudgetFlags>();
  auto p = std::make_shared<std::string>();
  budget->Register(sub);
  sub->add_option("-p", *p, "Sampling probability in (0, 1]")->required();
  all.emplace_back(sub, [=]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(b, budget->Parse());
    TVDP_ASSIGN_OR_RETURN(rate, ParseReal("-p", *p));
    TVDP_ASSIGN_OR_RETURN(amplified, Subsample(b, rate));
    return Line(BudgetToJson(amplified));
  });
}

// ------------------------------------------------------------------- clt

void AddClt(CLI::App& app, HandlerList& all) {
  CLI::App* sub = app.add_subcommand(
      "clt",
      "Gaussian limit of k compositions of an (eps, 0, eta) mechanism. "
      "Prints the limiting GDP parameter mu and the sup-norm gap between "
      "the exactly composed curve and the Gaussian curve G_mu.");
  auto budget = std::make_shared<BudgetFlags>();
  auto k = std::make_shared<std::string>();
  budget->Register(sub, /*with_delta=*/false);
  sub->add_option("-k", *k, "Number of compositions")->required();
  all.emplace_back(sub, [=]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(b, budget->Parse());
    TVDP_ASSIGN_OR_RETURN(count, ParseCount("-k", *k));
    const std::vector<ScheduleStep> schedule(count, {b.epsilon, b.eta});
    TVDP_ASSIGN_OR_RETURN(gap, CltGap(b.epsilon, b.eta, count));
    return Line(Json{{"mu", Number(CltMu(schedule))}, {"gap", Number(gap)}});
  });
}

// ------------------------------------------------------------------ mech

void AddMech(CLI::App& app, HandlerList& all) {
  CLI::App* mech = app.add_subcommand(
      "mech",
      "Closed forms for standard mechanisms and the dominating pairs that "
      "realize a budget's region.");
  mech->require_subcommand(1);

  CLI::App* tv = mech->add_subcommand(
      "tv",
      "Total variation between the outputs of a noise-adding mechanism on "
      "neighboring inputs. Laplace: 1 - e^(-eps/2). Gaussian: "
      "2 Phi(mu/2) - 1. Staircase: closed form in (gamma, eps).");
  auto kind = std::make_shared<std::string>();
  auto eps = std::make_shared<std::string>("1");
  auto mu = std::make_shared<std::string>("1");
  auto gamma = std::make_shared<std::string>("0.5");
  auto sens = std::make_shared<std::string>("1");
  tv->add_option("--kind", *kind, "Noise family")
      ->check(CLI::IsMember({"laplace", "gaussian", "staircase"}))
      ->required();
  tv->add_option("--eps", *eps, "Laplace or staircase eps")
      ->capture_default_str();
  tv->add_option("--mu", *mu, "Gaussian mean shift over sigma")
      ->capture_default_str();
  tv->add_option("--gamma", *gamma, "Staircase shape in (0, inf)")
      ->capture_default_str();
  tv->add_option("--sensitivity", *sens, "Staircase sensitivity")
      ->capture_default_str();
  all.emplace_back(tv, [=]() -> absl::StatusOr<std::string> {
    if (*kind == "gaussian") {
      TVDP_ASSIGN_OR_RETURN(m, ParseReal("--mu", *mu));
      return Line(Number(GaussianTv(m)));
    }
    TVDP_ASSIGN_OR_RETURN(e, ParseReal("--eps", *eps));
    if (*kind == "laplace") {
      TVDP_ASSIGN_OR_RETURN(v, LaplaceTv(e));
      return Line(Number(v));
    }
    TVDP_ASSIGN_OR_RETURN(g, ParseReal("--gamma", *gamma));
    TVDP_ASSIGN_OR_RETURN(s, ParseReal("--sensitivity", *sens));
    TVDP_ASSIGN_OR_RETURN(v, StaircaseTv(StaircaseSpec{g, e, s}));
    return Line(Number(v));
  });

  CLI::App* pair = mech->add_subcommand(
      "pair",
      "Dominating pair (P0, P1) for an (eps, delta, eta) budget. Its "
      "tradeoff curve equals the budget's region, so every mechanism "
      "meeting the budget is a post-processing of it.");
  auto budget = std::make_shared<BudgetFlags>();
  budget->Register(pair);
  all.emplace_back(pair, [=]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(b, budget->Parse());
    TVDP_ASSIGN_OR_RETURN(p, DominatingApprox(b));
    return Line(PairToJson(p));
  });

  CLI::App* gam = mech->add_subcommand(
      "gamma",
      "Staircase shape gamma whose total variation e-matches an "
      "(eps, 0, eta) budget with eta = (1 - alpha)(e^eps - 1)/(e^eps + 1).");
  auto geps = std::make_shared<std::string>();
  auto alpha = std::make_shared<std::string>();
  gam->add_option("--eps", *geps, "Staircase eps")->required();
  gam->add_option("--alpha", *alpha, "Erasure probability in [0, 1)")
      ->required();
  all.emplace_back(gam, [=]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(e, ParseReal("--eps", *geps));
    TVDP_ASSIGN_OR_RETURN(a, ParseReal("--alpha", *alpha));
    TVDP_ASSIGN_OR_RETURN(g, StaircaseGammaForAlpha(e, a));
    return Line(Number(g));
  });
}

// ------------------------------------------------------------------- ldp

void AddLdp(CLI::App& app, HandlerList& all) {
  CLI::App* ldp = app.add_subcommand(
      "ldp",
      "Local privacy channels Q(y|x) under joint eps-LDP and eta "
      "Dobrushin constraints.");
  ldp->require_subcommand(1);

  CLI::App* check = ldp->add_subcommand(
      "check",
      "Measures a channel: its LDP eps (largest log ratio within a "
      "column), Dobrushin coefficient (largest row TV) and the KL "
      "contraction estimate sup over beta of the Le Cam divergence.");
  auto channel = std::make_shared<std::string>();
  auto grid = std::make_shared<int>(2001);
  check->add_option("--channel", *channel,
                    "Row-stochastic matrix as JSON {\"matrix\": [[...]]}")
      ->required();
  check->add_option("--grid", *grid, "Number of interior beta grid points")
      ->check(CLI::Range(3, 10'000'000))
      ->capture_default_str();
  all.emplace_back(check, [=]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(q, ParseChannel(*channel));
    TVDP_ASSIGN_OR_RETURN(kl, EstimateEtaKl(q, *grid));
    return Line(Json{
        {"rows", q.rows()},
        {"cols", q.cols()},
        {"eps", Number(LdpEpsilon(q))},
        {"dobrushin", Number(Dobrushin(q))},
        {"eta_kl",
         Json{{"value", Number(kl.value)},
              {"beta", Number(kl.beta)},
              {"rows", Json::array({kl.row_a, kl.row_b})}}}});
  });

  CLI::App* qstar = ldp->add_subcommand(
      "qstar",
      "Binary channel with erasure that is extremal under (eps, eta): "
      "rows [eta e^eps, eta, c] / (e^eps - 1) and its mirror, where c "
      "carries the erased mass.");
  auto qb = std::make_shared<BudgetFlags>();
  qb->Register(qstar, /*with_delta=*/false);
  all.emplace_back(qstar, [=]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(b, qb->Parse());
    TVDP_ASSIGN_OR_RETURN(q, QStar(b.epsilon, b.eta));
    return Line(ChannelToJson(q));
  });

  CLI::App* bemech = ldp->add_subcommand(
      "bemech",
      "Binary mechanism with erasure for a pair (P0, P1): each symbol y "
      "is mapped to the extremal row selected by 1{P1(y) > P0(y)}. The "
      "output TV equals eta times the input TV.");
  auto p0 = std::make_shared<std::string>();
  auto p1 = std::make_shared<std::string>();
  auto bb = std::make_shared<BudgetFlags>();
  bemech->add_option("--p0", *p0, "JSON array")->required();
  bemech->add_option("--p1", *p1, "JSON array")->required();
  bb->Register(bemech, /*with_delta=*/false);
  all.emplace_back(bemech, [=]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(b, bb->Parse());
    TVDP_ASSIGN_OR_RETURN(v0, ParseVector(*p0));
    TVDP_ASSIGN_OR_RETURN(v1, ParseVector(*p1));
    TVDP_ASSIGN_OR_RETURN(pair, DiscretePair::Create(v0, v1));
    TVDP_ASSIGN_OR_RETURN(q, BinaryErasureMechanism(pair, b.epsilon, b.eta));
    TVDP_ASSIGN_OR_RETURN(m0, PushForward(q, pair.p0()));
    TVDP_ASSIGN_OR_RETURN(m1, PushForward(q, pair.p1()));
    Json json = ChannelToJson(q);
    json["tv_in"] = Number(TvDistance(pair));
    json["tv_out"] = Number(TvDistance(m0, m1));
    return Line(json);
  });

  CLI::App* bounds = ldp->add_subcommand(
      "bounds",
      "Closed-form limits for channels in the (eps, eta) class: the "
      "largest f-divergence between two rows, the KL contraction bound, "
      "the chi-squared output bound for an input TV, the utility "
      "conversion factor and the ratio lower bound.");
  auto lb = std::make_shared<BudgetFlags>();
  auto tv_in = std::make_shared<std::string>();
  lb->Register(bounds, /*with_delta=*/false);
  bounds->add_option("--tv-in", *tv_in,
                     "Input TV for the chi-squared output bound");
  all.emplace_back(bounds, [=]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(b, lb->Parse());
    TVDP_ASSIGN_OR_RETURN(kl, MaxFDivergence(b.epsilon, b.eta,
                                             KullbackLeiblerSpec{}));
    TVDP_ASSIGN_OR_RETURN(chi2,
                          MaxFDivergence(b.epsilon, b.eta, ChiSquaredSpec{}));
    TVDP_ASSIGN_OR_RETURN(tv,
                          MaxFDivergence(b.epsilon, b.eta, TotalVariationSpec{}));
    TVDP_ASSIGN_OR_RETURN(contraction, KlContractionBound(b.epsilon, b.eta));
    Json json{{"eps", Number(b.epsilon)},
              {"eta", Number(b.eta)},
              {"max_fdiv",
               Json{{"kl", Number(kl)}, {"chi2", Number(chi2)},
                    {"tv", Number(tv)}}},
              {"kl_contraction", Number(contraction)}};
    if (!tv_in->empty()) {
      TVDP_ASSIGN_OR_RETURN(t, ParseReal("--tv-in", *tv_in));
      TVDP_ASSIGN_OR_RETURN(c, Chi2OutputBound(b.epsilon, b.eta, t));
      json["chi2_output"] = Number(c);
    }
    // Both are undefined at eps = 0 and reported as null there.
    absl::StatusOr<double> conv = OptConversionFactor(b.epsilon, b.eta);
    absl::StatusOr<double> ratio = BeRatioLowerBound(b.epsilon, b.eta);
    json["opt_conversion"] = conv.ok() ? Number(*conv) : Json(nullptr);
    json["be_ratio_lower"] = ratio.ok() ? Number(*ratio) : Json(nullptr);
    return Line(json);
  });

  CLI::App* rr = ldp->add_subcommand(
      "rr", "M-ary randomized response: e^eps on the diagonal, 1 elsewhere, "
            "normalized by e^eps + M - 1.");
  auto reps = std::make_shared<std::string>();
  auto m = std::make_shared<std::string>("2");
  rr->add_option("--eps", *reps, "LDP eps")->required();
  rr->add_option("-m", *m, "Alphabet size M >= 2")->capture_default_str();
  all.emplace_back(rr, [=]() -> absl::StatusOr<std::string> {
    TVDP_ASSIGN_OR_RETURN(e, ParseReal("--eps", *reps));
    TVDP_ASSIGN_OR_RETURN(size, ParseCount("-m", *m));
    TVDP_ASSIGN_OR_RETURN(q, RandomizedResponse(e, size));
    return Line(ChannelToJson(q));
  });
}

// ------------------------------------------------------------------- sgd

absl::StatusOr<std::vector<double>> EpsilonGrid(double from, double to,
                                                double step) {
  if (!(from > 0.0) || !(to >= from) || !(step > 0.0)) {
    return absl::InvalidArgumentError(
        "need 0 < --eps-from <= --eps-to and --eps-step > 0");
  }
  const double span = (to - from) / step;
  if (span > 1e5) {
    return absl::InvalidArgumentError("eps grid has more than 1e5 points");
  }
  const int64_t count = static_cast<int64_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (int64_t i = 0; i < count; ++i) {
    double v = 0.0;
    // Rounding keeps 0.5 + 3 * 0.1 printing as 0.8.
    (void)absl::SimpleAtod(FormatNumber(from + i * step), &v);
    grid.push_back(v);
  }
  return grid;
}

Json SgdEntryToJson(const SgdGridEntry& e) {
  Json json{{"step_eps", Number(e.step_epsilon)},
            {"step", BudgetToJson(e.step.budget)},
            {"subsampled", BudgetToJson(e.subsampled)},
            {"ledger", LedgerToJson(e.ledger)}};
  if (e.step.eta_clamped) json["eta_clamped"] = true;
  return json;
}

void AddSgd(CLI::App& app, HandlerList& all) {
  CLI::App* sub = app.add_subcommand(
      "sgd",
      "Whole-run region for noisy SGD whose steps are mu-GDP on their "
      "minibatch. Each grid eps gives a step budget (eps, delta(eps), "
      "eta) from the Gaussian curve; it is amplified by the sampling rate "
      "batch/n, composed over round(epochs n / batch) steps, and the "
      "regions of all grid points are intersected.");
  auto n = std::make_shared<std::string>();
  auto batch = std::make_shared<std::string>();
  auto epochs = std::make_shared<std::string>();
  auto mu = std::make_shared<std::string>();
  auto from = std::make_shared<std::string>("0.5");
  auto to = std::make_shared<std::string>("3.4");
  auto step = std::make_shared<std::string>("0.1");
  auto accountant = std::make_shared<std::string>("refined");
  auto compare = std::make_shared<bool>(false);
  auto refs = std::make_shared<std::vector<std::string>>();
  auto out = std::make_shared<OutputFlags>();
  sub->add_option("--n", *n, "Dataset size")->required();
  sub->add_option("--batch", *batch, "Minibatch size")->required();
  sub->add_option("--epochs", *epochs, "Passes over the data")->required();
  sub->add_option("--mu", *mu, "Per-step GDP parameter")->required();
  sub->add_option("--eps-from", *from, "First grid eps")->capture_default_str();
  sub->add_option("--eps-to", *to, "Last grid eps")->capture_default_str();
  sub->add_option("--eps-step", *step, "Grid spacing")->capture_default_str();
  sub->add_option("--accountant", *accountant,
                  "'refined' composes (eps, delta, eta); 'baseline' drops "
                  "eta")
      ->check(CLI::IsMember({"refined", "baseline"}))
      ->capture_default_str();
  sub->add_flag("--compare", *compare,
                "Report refined and baseline delta at reference eps values");
  sub->add_option("--ref-eps", *refs,
                  "Extra reference eps values for --compare");
  out->Register(sub);
  all.emplace_back(sub, [=]() -> absl::StatusOr<std::string> {
    SgdConfig config;
    TVDP_ASSIGN_OR_RETURN(nn, ParseInteger("--n", *n));
    TVDP_ASSIGN_OR_RETURN(mm, ParseInteger("--batch", *batch));
    TVDP_ASSIGN_OR_RETURN(ep, ParseReal("--epochs", *epochs));
    TVDP_ASSIGN_OR_RETURN(m, ParseReal("--mu", *mu));
    TVDP_ASSIGN_OR_RETURN(f, ParseReal("--eps-from", *from));
    TVDP_ASSIGN_OR_RETURN(t, ParseReal("--eps-to", *to));
    TVDP_ASSIGN_OR_RETURN(s, ParseReal("--eps-step", *step));
    TVDP_ASSIGN_OR_RETURN(grid, EpsilonGrid(f, t, s));
    config.dataset_size = nn;
    config.batch_size = mm;
    config.epochs = ep;
    config.step_mu = m;
    config.epsilon_grid = std::move(grid);
    if (*compare) {
      std::vector<double> ref_values;
      for (const std::string& r : *refs) {
        TVDP_ASSIGN_OR_RETURN(v, ParseReal("--ref-eps", r));
        ref_values.push_back(v);
      }
      TVDP_ASSIGN_OR_RETURN(report, CompareSgd(config, ref_values));
      if (out->csv()) {
        std::string csv = "eps,refined_delta,baseline_delta\n";
        for (const SgdReferencePoint& p : report.points) {
          absl::StrAppend(&csv, FormatNumber(p.epsilon), ",",
                          FormatNumber(p.refined_delta), ",",
                          FormatNumber(p.baseline_delta), "\n");
        }
        return csv;
      }
      Json points = Json::array();
      for (const SgdReferencePoint& p : report.points) {
        points.push_back(Json{{"eps", Number(p.epsilon)},
                              {"refined_delta", Number(p.refined_delta)},
                              {"baseline_delta", Number(p.baseline_delta)}});
      }
      return Line(Json{
          {"steps", report.steps},
          {"sampling_rate", Number(report.sampling_rate)},
          {"points", std::move(points)},
          {"annotation",
           Json{{"eps", Number(report.annotation_epsilon)},
                {"delta", Number(report.annotation_delta)}}},
          {"refined", CurveToJson(report.refined)},
          {"baseline", CurveToJson(report.baseline)}});
    }
    TVDP_ASSIGN_OR_RETURN(
        region, ComputeSgdRegion(config, *accountant == "baseline"
                                             ? SgdAccountant::kBaseline
                                             : SgdAccountant::kRefined));
    if (out->csv()) {
      // The curve table, a blank line, then every ledger entry.
      std::string csv = CurveToCsv(region.curve, out->grid);
      absl::StrAppend(&csv, "\nstep_eps,j,eps,delta\n");
      for (const SgdGridEntry& e : region.entries) {
        for (const LedgerEntry& l : e.ledger.entries) {
          absl::StrAppend(&csv, FormatNumber(e.step_epsilon), ",", l.j, ",",
                          FormatNumber(l.epsilon), ",",
                          FormatNumber(l.delta), "\n");
        }
      }
      return csv;
    }
    Json entries = Json::array();
    for (const SgdGridEntry& e : region.entries) {
      entries.push_back(SgdEntryToJson(e));
    }
    return Line(Json{{"steps", region.steps},
                     {"sampling_rate", Number(region.sampling_rate)},
                     {"curve", CurveToJson(region.curve)},
                     {"entries", std::move(entries)}});
  });
}

#undef TVDP_ASSIGN_OR_RETURN

std::string OneLine(std::string text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) {
    text.pop_back();
  }
  return absl::StrReplaceAll(text, {{"\n", "; "}});
}

}  // namespace

double MaxEpsilonFromEnv() {
  const char* env = std::getenv("TVDP_MAX_EPS");
  double value = 0.0;
  if (env != nullptr && absl::SimpleAtod(env, &value) && value > 0.0 &&
      std::isfinite(value)) {
    return value;
  }
  return kMaxCurveEpsilon;
}

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app(
      "Differential privacy accounting with a joint total variation "
      "constraint. Every command prints JSON; curve commands also accept "
      "--out csv.",
      "tvdp");
  app.require_subcommand(1);
  app.set_version_flag("--version", "tvdp 0.1.0");

  HandlerList handlers;
  AddRegion(app, handlers);
  AddCompose(app, handlers);
  AddAmplify(app, handlers);
  AddClt(app, handlers);
  AddMech(app, handlers);
  AddLdp(app, handlers);
  AddSgd(app, handlers);

  // CLI11 consumes a vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  }

  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    absl::StatusOr<std::string> payload = handler();
    if (!payload.ok()) {
      err << "error: " << OneLine(std::string(payload.status().message()))
          << "\n";
      return kExitUsage;
    }
    out << *payload;
    return kExitOk;
  }
  err << "error: no subcommand selected\n";
  return kExitUsage;
}

}  // namespace tvdp::cli
