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

#include "tvdp_cli/serialize.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace tvdp::cli {
namespace {

double Round12(double value) {
  double out = 0.0;
  const std::string text = absl::StrFormat("%.12g", value);
  std::sscanf(text.c_str(), "%lf", &out);
  return out;
}

}  // namespace

Json Number(double value) {
  if (std::isnan(value)) return nullptr;
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  const double rounded = Round12(value);
  // Avoid emitting -0.
  return rounded == 0.0 ? 0.0 : rounded;
}

Json NumberArray(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(Number(v));
  return out;
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  const double rounded = Round12(value);
  return absl::StrFormat("%.12g", rounded == 0.0 ? 0.0 : rounded);
}

Json CurveToJson(const TradeoffCurve& curve) {
  Json vertices = Json::array();
  for (const Point& p : curve.vertices()) {
    vertices.push_back(Json::array({Number(p.x), Number(p.y)}));
  }
  return Json{{"vertices", std::move(vertices)}};
}

Json BudgetToJson(const PrivacyBudget& budget) {
  return Json{{"eps", Number(budget.epsilon)},
              {"delta", Number(budget.delta)},
              {"eta", Number(budget.eta)}};
}

Json LedgerToJson(const CompositionLedger& ledger) {
  Json entries = Json::array();
  for (const LedgerEntry& e : ledger.entries) {
    Json entry{{"j", e.j}, {"eps", Number(e.epsilon)}, {"delta", Number(e.delta)}};
    if (e.clamped) entry["clamped"] = true;
    entries.push_back(std::move(entry));
  }
  return Json{{"k", ledger.k}, {"entries", std::move(entries)},
              {"eta", Number(ledger.eta)}};
}

Json PairToJson(const DiscretePair& pair) {
  return Json{{"p0", NumberArray({pair.p0().begin(), pair.p0().end()})},
              {"p1", NumberArray({pair.p1().begin(), pair.p1().end()})}};
}

Json ChannelToJson(const Channel& channel) {
  Json rows = Json::array();
  for (size_t x = 0; x < channel.rows(); ++x) {
    rows.push_back(NumberArray({channel.row(x).begin(), channel.row(x).end()}));
  }
  return Json{{"matrix", std::move(rows)}};
}

std::string CurveToCsv(const TradeoffCurve& curve, int grid) {
  std::vector<double> xs;
  for (const Point& p : curve.vertices()) xs.push_back(p.x);
  for (int i = 0; grid > 0 && i <= grid; ++i) {
    xs.push_back(static_cast<double>(i) / grid);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::string out = "beta_I,beta_II\n";
  for (double x : xs) {
    absl::StrAppend(&out, FormatNumber(x), ",", FormatNumber(curve.ValueAt(x)),
                    "\n");
  }
  return out;
}

absl::StatusOr<std::vector<double>> ParseVector(const std::string& text) {
  const Json parsed = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected a JSON array of numbers, got '", text, "'"));
  }
  std::vector<double> out;
  for (const Json& v : parsed) {
    if (!v.is_number()) {
      return absl::InvalidArgumentError("array entries must be numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

absl::StatusOr<Channel> ParseChannel(const std::string& text) {
  Json parsed = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) {
    return absl::InvalidArgumentError("channel is not valid JSON");
  }
  if (parsed.is_object() && parsed.contains("matrix")) {
    parsed = parsed["matrix"];
  }
  if (!parsed.is_array()) {
    return absl::InvalidArgumentError(
        "channel must be {\"matrix\": [[...], ...]} or an array of rows");
  }
  std::vector<std::vector<double>> matrix;
  for (const Json& row : parsed) {
    absl::StatusOr<std::vector<double>> r = ParseVector(row.dump());
    if (!r.ok()) return r.status();
    matrix.push_back(*std::move(r));
  }
  return Channel::Create(matrix);
}

}  // namespace tvdp::cli
