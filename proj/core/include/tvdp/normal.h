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

#ifndef TVDP_NORMAL_H_
#define TVDP_NORMAL_H_

namespace tvdp {

// Standard normal CDF, via erfc so that both tails keep full relative
// precision.
double NormalCdf(double x);

// Inverse of NormalCdf on (0, 1); returns -inf at 0 and +inf at 1.
// Rational starting point refined by one Halley step on NormalCdf.
double NormalQuantile(double p);

}  // namespace tvdp

#endif  // TVDP_NORMAL_H_
