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

// Special-function self-test: identity and consistency checks that need no
// zero table.

#ifndef EXPLICITAVG_SELFTEST_HPP_
#define EXPLICITAVG_SELFTEST_HPP_

#include <string>
#include <vector>

namespace explicitavg {

struct SelfTestResult {
  std::string name;
  // Worst deviation observed and the threshold it is held to.
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
  double wall_ms = 0.0;
};

std::vector<SelfTestResult> run_special_function_selftest();

}  // namespace explicitavg

#endif  // EXPLICITAVG_SELFTEST_HPP_
