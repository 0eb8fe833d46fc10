// Copyright 2026 The explicitavg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Frozen bound constants. Regenerate with tools/calibrate; each value is the
// largest ratio seen on the calibration grid times a safety factor of 3.

#ifndef EXPLICITAVG_BOUND_CONSTANTS_HPP_
#define EXPLICITAVG_BOUND_CONSTANTS_HPP_

namespace explicitavg::bounds {

inline constexpr double kSafetyFactor = 3.0;

// Constant in front of the truncated psi explicit-formula error. Not
// calibrated.
inline constexpr double kPsi = 1.0;
// Constant in front of the weighted-sum lemma error term.
inline constexpr double kLemma = 0.0439;
// Constant in front of the composite Goldbach truncation bound.
inline constexpr double kGoldbachComposite = 0.000122;

// |residual| / N for the Goldbach average (leading groups only).
inline constexpr double kGoldbachResidual = 22.2;
// |residual| / (sqrt(N) (M+1) log^2 N) for the tuple average.
inline constexpr double kTuples = 0.129;
// |residual| / N^(k+1) for the Cesaro main term at k = 0.5, 1, ..., 4.
inline constexpr double kCesaro[8] = {8.45, 5.4, 3.2, 1.77,
                                      0.905, 0.436, 0.199, 0.0861};

}  // namespace explicitavg::bounds

#endif  // EXPLICITAVG_BOUND_CONSTANTS_HPP_
