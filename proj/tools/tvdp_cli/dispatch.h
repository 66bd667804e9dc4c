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

#ifndef TVDP_TOOLS_TVDP_CLI_DISPATCH_H_
#define TVDP_TOOLS_TVDP_CLI_DISPATCH_H_

#include <ostream>
#include <string>
#include <vector>

namespace tvdp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

// Runs the tool on `args` (program name excluded). The payload goes to
// `out`; a single "error: ..." line goes to `err` on failure.
// Returns kExitOk or kExitUsage.
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

// The eps substituted for "inf": $TVDP_MAX_EPS when it parses as a positive
// number, else 50.
double MaxEpsilonFromEnv();

}  // namespace tvdp::cli

#endif  // TVDP_TOOLS_TVDP_CLI_DISPATCH_H_
