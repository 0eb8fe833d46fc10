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

#include "explicitavg/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>

#include "explicitavg/specfun.hpp"

namespace explicitavg {

double rvm_estimate(double T) {
  const double u = T / (2.0 * kPi);
  return u * std::log(u) - u + 0.875;
}

ZeroTable ZeroTable::from_ordinates(std::vector<double> gammas,
                                    std::string source_id) {
  if (gammas.empty()) {
    throw ValidationError("zero table " + source_id + " is empty", "nonempty");
  }
  if (!(gammas.front() > 14.0)) {
    throw ValidationError("zero table " + source_id +
                              ": first ordinate must exceed 14",
                          "first-ordinate");
  }
  for (std::size_t i = 1; i < gammas.size(); ++i) {
    if (!(gammas[i] > gammas[i - 1])) {
      throw ValidationError("zero table " + source_id +
                                ": ordinates not strictly increasing at entry " +
                                std::to_string(i + 1),
                            "monotone");
    }
  }
  ZeroTable t;
  t.gammas_ = std::move(gammas);
  t.source_id_ = std::move(source_id);
  for (double T : {50.0, 100.0, 500.0, t.height()}) {
    if (T > t.height()) continue;
    const double count = static_cast<double>(t.count_up_to(T));
    const double est = rvm_estimate(T);
    if (std::fabs(count - est) > 2.0) {
      throw ValidationError("zero table " + t.source_id_ + ": " +
                                std::to_string(count) + " zeros up to T=" +
                                std::to_string(T) + " but the count formula gives " +
                                std::to_string(est),
                            "zero-count");
    }
  }
  return t;
}

std::size_t ZeroTable::count_up_to(double T) const {
  return static_cast<std::size_t>(
      std::upper_bound(gammas_.begin(), gammas_.end(), T) - gammas_.begin());
}

ZeroTable load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw OutOfRange("cannot open zeros file " + path);
  std::vector<double> gammas;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v(line);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) {
      v.remove_prefix(1);
    }
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) {
      v.remove_suffix(1);
    }
    if (v.empty() || v.front() == '#') continue;
    double g = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), g);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(g)) {
      throw FormatError(path + ":" + std::to_string(lineno) +
                            ": not a decimal ordinate: '" + std::string(v) + "'",
                        lineno);
    }
    if (!(g > 0.0)) {
      throw ValidationError(path + ":" + std::to_string(lineno) +
                                ": ordinate must be positive",
                            "positive");
    }
    gammas.push_back(g);
  }
  return ZeroTable::from_ordinates(std::move(gammas), path);
}

std::string default_zeros_path() {
  return std::string(EXPLICITAVG_DATA_DIR) + "/zeros_10000.txt";
}

ZeroView select(const ZeroTable& table, double t_limit) {
  if (!(t_limit > 2.0)) {
    throw InvalidArgument("truncation height must satisfy T>2, got " +
                          std::to_string(t_limit));
  }
  if (t_limit > table.height()) {
    throw InsufficientZeros(
        "truncation height " + std::to_string(t_limit) +
            " exceeds zero table height " + std::to_string(table.height()),
        t_limit, table.height());
  }
  return ZeroView(table.gammas().first(table.count_up_to(t_limit)), t_limit);
}

}  // namespace explicitavg
