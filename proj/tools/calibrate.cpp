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

// Recomputes the frozen bound constants: for each constant, the largest
// ratio |deviation| / shape over a calibration grid kept apart from the
// acceptance grid, times the safety factor.
//
// usage: calibrate [zeros-file] [output-header]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "explicitavg/arithmetic.hpp"
#include "explicitavg/bound_constants.hpp"
#include "explicitavg/formulas.hpp"
#include "explicitavg/zeros.hpp"

using namespace explicitavg;

namespace {

constexpr double kT = 1000.0;

constexpr const char* kLicense =
    "// Copyright 2026 The explicitavg Authors.\n"
    "//\n"
    "// Licensed under the Apache License, Version 2.0 (the \"License\");\n"
    "// you may not use this file except in compliance with the License.\n"
    "// You may obtain a copy of the License at\n"
    "//\n"
    "//     http://www.apache.org/licenses/LICENSE-2.0\n"
    "//\n"
    "// Unless required by applicable law or agreed to in writing, software\n"
    "// distributed under the License is distributed on an \"AS IS\" BASIS,\n"
    "// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.\n"
    "// See the License for the specific language governing permissions and\n"
    "// limitations under the License.\n";

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string zeros_path = argc > 1 ? argv[1] : default_zeros_path();
  const std::string out_path = argc > 2 ? argv[2] : "";
  std::setvbuf(stdout, nullptr, _IONBF, 0);

  const ZeroTable zt = load_zeros(zeros_path);
  const ZeroView v = select(zt, kT);
  const VonMangoldtTable table = build_table(4000);
  const double safety = bounds::kSafetyFactor;

  double lemma = 0.0;
  const std::vector<cplx> alphas = {1.0, 2.0, {0.5, 14.134725}, {0.5, 21.02204}};
  for (double T : {300.0, 1000.0}) {
    const ZeroView w = select(zt, T);
    for (double x : {5.0, 9.0, 12.0, 40.0, 75.0, 120.0}) {
      for (double yf : {1.5, 3.0, 1e4}) {
        for (cplx a : alphas) {
          const double y = yf * x;
          const auto b = lemma_weighted_sum_explicit(x, y, a, w, table);
          const double diff =
              std::abs(b.complex_total() - lemma_oracle(table, x, y, a));
          const double shape = lemma_bound(a, y, x, T) / bounds::kLemma;
          lemma = std::max(lemma, diff / shape);
          std::printf("lemma T=%g x=%g y=%g a=%g%+gi diff %.3g ratio %.3g\n",
                      T, x, y, a.real(), a.imag(), diff, diff / shape);
        }
      }
    }
  }

  // The composite shape is not monotone in the window the way the error
  // is, so the constant is taken over several windows and both G(N).
  double composite = 0.0, residual = 0.0;
  for (double T : {100.0, 300.0, 1000.0}) {
    const ZeroView w = select(zt, T);
    for (std::int64_t N : {30, 40, 60, 80}) {
      const auto g = verify_goldbach(N, w, w, table, BoundKind::kRh);
      for (BoundKind kind : {BoundKind::kRh, BoundKind::kUnconditional}) {
        const double shape = goldbach_composite_bound(N, T, T, kind) /
                             bounds::kGoldbachComposite;
        composite = std::max(composite, std::fabs(g.formula.residual) / shape);
      }
      residual = std::max(residual, std::fabs(g.residual.residual) / N);
      std::printf("goldbach T=%g N=%lld full %.3g leading %.3g\n", T,
                  static_cast<long long>(N), g.formula.residual,
                  g.residual.residual);
    }
  }

  double tuples = 0.0;
  for (std::int64_t N : {30, 40, 60}) {
    for (std::int64_t M : {std::int64_t{0}, std::int64_t{2}, std::int64_t{3}, N}) {
      const auto t = verify_tuples(N, M, v, table);
      const double ln = std::log(static_cast<double>(N));
      const double shape = std::sqrt(static_cast<double>(N)) * (M + 1) * ln * ln;
      tuples = std::max(tuples, std::fabs(t.residual.residual) / shape);
      std::printf("tuples N=%lld M=%lld leading %.3g\n",
                  static_cast<long long>(N), static_cast<long long>(M),
                  t.residual.residual);
    }
  }

  double cesaro[8] = {};
  for (int i = 0; i < 8; ++i) {
    const double k = 0.5 * (i + 1);
    for (std::int64_t N : {60, 80, 120, 150}) {
      const double main = std::pow(static_cast<double>(N), k + 2) /
                          std::tgamma(k + 3);
      const double res = cesaro_avg_oracle(table, N, k) - main;
      cesaro[i] = std::max(
          cesaro[i], std::fabs(res) / std::pow(static_cast<double>(N), k + 1));
    }
    std::printf("cesaro k=%g ratio %.3g\n", k, cesaro[i]);
  }

  std::printf("max ratios: lemma %.3g composite %.3g residual %.3g tuples %.3g\n",
              lemma, composite, residual, tuples);
  if (out_path.empty()) return 0;

  std::ofstream out(out_path);
  out << kLicense;
  auto c = [&](double r) { return fmt(safety * r); };
  out << "\n// Frozen bound constants. Regenerate with tools/calibrate; each "
         "value is the\n// largest ratio seen on the calibration grid times a "
         "safety factor of 3.\n\n"
      << "#ifndef EXPLICITAVG_BOUND_CONSTANTS_HPP_\n"
      << "#define EXPLICITAVG_BOUND_CONSTANTS_HPP_\n\n"
      << "namespace explicitavg::bounds {\n\n"
      << "inline constexpr double kSafetyFactor = 3.0;\n\n"
      << "// Constant in front of the truncated psi explicit-formula error. "
         "Not\n// calibrated.\n"
      << "inline constexpr double kPsi = 1.0;\n"
      << "// Constant in front of the weighted-sum lemma error term.\n"
      << "inline constexpr double kLemma = " << c(lemma) << ";\n"
      << "// Constant in front of the composite Goldbach truncation bound.\n"
      << "inline constexpr double kGoldbachComposite = " << c(composite)
      << ";\n\n"
      << "// |residual| / N for the Goldbach average (leading groups only).\n"
      << "inline constexpr double kGoldbachResidual = " << c(residual) << ";\n"
      << "// |residual| / (sqrt(N) (M+1) log^2 N) for the tuple average.\n"
      << "inline constexpr double kTuples = " << c(tuples) << ";\n"
      << "// |residual| / N^(k+1) for the Cesaro main term at k = 0.5, 1, "
         "..., 4.\n"
      << "inline constexpr double kCesaro[8] = {";
  for (int i = 0; i < 8; ++i) {
    out << (i ? (i == 4 ? ",\n                                      " : ", ")
              : "")
        << c(cesaro[i]);
  }
  out << "};\n\n}  // namespace explicitavg::bounds\n\n"
      << "#endif  // EXPLICITAVG_BOUND_CONSTANTS_HPP_\n";
  return 0;
}
