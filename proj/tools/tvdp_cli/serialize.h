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

// JSON and CSV encodings of library values. Every number is rounded to 12
// significant digits so identical inputs give byte-identical output.

#ifndef TVDP_TOOLS_TVDP_CLI_SERIALIZE_H_
#define TVDP_TOOLS_TVDP_CLI_SERIALIZE_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "tvdp/budget.h"
#include "tvdp/composition.h"
#include "tvdp/curves.h"
#include "tvdp/distribution.h"
#include "tvdp/localdp.h"

namespace tvdp::cli {

using Json = nlohmann::ordered_json;

// Finite values round to 12 significant digits; infinities become the
// strings "inf" and "-inf"; NaN becomes null.
Json Number(double value);
Json NumberArray(const std::vector<double>& values);

Json CurveToJson(const TradeoffCurve& curve);
Json BudgetToJson(const PrivacyBudget& budget);
Json LedgerToJson(const CompositionLedger& ledger);
Json PairToJson(const DiscretePair& pair);
Json ChannelToJson(const Channel& channel);

// Header "beta_I,beta_II" then one row per vertex. With grid > 0 the rows
// also include t = i / grid for i = 0..grid, merged in order of x.
std::string CurveToCsv(const TradeoffCurve& curve, int grid);

// Parses a JSON array of numbers.
absl::StatusOr<std::vector<double>> ParseVector(const std::string& text);
// Parses {"matrix": [[...], ...]} or a bare array of rows.
absl::StatusOr<Channel> ParseChannel(const std::string& text);

// Renders a value with 12 significant digits.
std::string FormatNumber(double value);

}  // namespace tvdp::cli

#endif  // TVDP_TOOLS_TVDP_CLI_SERIALIZE_H_
