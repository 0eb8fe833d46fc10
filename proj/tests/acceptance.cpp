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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "explicitavg/arithmetic.hpp"
#include "explicitavg/cli.hpp"
#include "explicitavg/formulas.hpp"
#include "explicitavg/selftest.hpp"
#include "explicitavg/zeros.hpp"

using namespace explicitavg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const ZeroTable& zeros() {
  static const ZeroTable t = load_zeros(default_zeros_path());
  return t;
}

// Criterion 4 through the command-line path, as CSV without timings.
std::string goldbach_csv(unsigned threads, int* code) {
  std::ostringstream out, err;
  *code = cli::main_entry({"verify-goldbach", "--n", "20", "50", "100", "200",
                           "--t1", "1000", "--t2", "1000", "--no-timing",
                           "--threads", std::to_string(threads)},
                          out, err);
  return out.str();
}

std::string goldbach_csv_1thread;

Outcome identities() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = build_table(1000);
  double worst = 0.0;
  for (std::int64_t N = 3; N <= 500; ++N) {
    const auto s = goldbach_triangle_identity(table, N);
    worst = std::max(worst, std::fabs(s.lhs - s.rhs) / std::fabs(s.rhs));
  }
  for (std::int64_t N = 3; N <= 200; ++N) {
    for (std::int64_t M = 0; M <= N; ++M) {
      const auto s = tuples_parallelogram_identity(table, N, M);
      worst = std::max(worst, std::fabs(s.lhs - s.rhs) / std::fabs(s.rhs));
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-9 && t < 60,
          fmt("worst relative gap %.2e", worst) + fmt(", %.1f s", t)};
}

Outcome psi_truncation() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = build_table(2000);
  double worst = 0.0;
  for (double T : {100.0, 1000.0}) {
    const auto v = select(zeros(), T);
    for (double x : {100.0, 250.0, 500.0, 1000.0}) {
      const double l = std::log(T * x);
      const double bound = 5 * x * l * l / T;
      const double err = std::fabs(psi0(table, x) - psi0_truncated(x, v).value);
      worst = std::max(worst, err / bound);
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1.0 && t < 5,
          fmt("worst error/bound %.3g", worst) + fmt(", %.1f s", t)};
}

Outcome lemma() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = build_table(1000);
  const auto v = select(zeros(), 1000);
  struct Sample {
    double x, y;
    cplx alpha;
  };
  std::vector<Sample> samples;
  for (double N : {50.0, 100.0}) {
    for (cplx a : {cplx(1.0), cplx(2.0), cplx(0.5, 14.134725),
                   cplx(0.5, 21.022040)}) {
      samples.push_back({N, 2 * N, a});
    }
  }
  samples.push_back({50.0, 200.0, 1.0});
  samples.push_back({100.0, 300.0, 2.0});
  double worst = 0.0;
  for (const auto& s : samples) {
    const auto b = lemma_weighted_sum_explicit(s.x, s.y, s.alpha, v, table);
    const double diff =
        std::abs(b.complex_total() - lemma_oracle(table, s.x, s.y, s.alpha));
    worst = std::max(worst, diff / lemma_bound(s.alpha, s.y, s.x, 1000));
  }
  const double t = seconds_since(t0);
  return {worst <= 1.0 && t < 120,
          fmt("%.0f samples", static_cast<double>(samples.size())) +
              fmt(", worst diff/bound %.3g", worst) + fmt(", %.1f s", t)};
}

Outcome goldbach_average() {
  const auto t0 = std::chrono::steady_clock::now();
  int code = -1;
  goldbach_csv_1thread = goldbach_csv(1, &code);
  const double t = seconds_since(t0);
  std::istringstream in(goldbach_csv_1thread);
  std::string line, detail;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) f.push_back(c);
    if (f.size() < 8) continue;
    ++rows;
    detail += " N=" + f[1] + ":" + fmt("%.2f", std::stod(f[7]) / std::stod(f[1]));
  }
  return {code == 0 && rows == 4 && t < 600,
          "residual/N" + detail + fmt(", %.1f s", t)};
}

Outcome tuple_average() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = build_table(1000);
  const auto v = select(zeros(), 1000);
  bool pass = true;
  double worst = 0.0;
  bool tilde_branch = false;
  for (std::int64_t N : {20, 50, 100}) {
    for (std::int64_t M : {std::int64_t{0}, std::int64_t{1}, std::int64_t{5}, N}) {
      const auto r = verify_tuples(N, M, v, table);
      pass = pass && r.residual.pass && r.formula.pass;
      worst = std::max(worst, std::fabs(r.residual.residual) / r.residual.bound);
      if (M == 0) {
        // 1~(0) = 2 doubles the m = 0 block; 1(0) = 0 drops the M block.
        const auto& b = r.tuples.breakdown;
        const double d0 = tuples_double_integral(N, 0, v);
        tilde_branch =
            std::fabs(b.entry("gated_double_0").real() + 2 * d0) <=
                1e-12 * std::max(1.0, std::fabs(d0)) &&
            b.entry("gated_double_M").real() == 0.0;
        pass = pass && tilde_branch;
      }
    }
  }
  const double t = seconds_since(t0);
  return {pass && t < 600, fmt("worst |residual|/bound %.3g", worst) +
                               (tilde_branch ? ", M=0 branch doubled" : "") +
                               fmt(", %.1f s", t)};
}

Outcome cesaro() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = build_table(1000);
  bool pass = true;
  std::string detail;
  for (double k : {1.0, 2.0}) {
    std::vector<double> lx, ly;
    for (std::int64_t N : {50, 100, 200, 400}) {
      const double main =
          std::pow(static_cast<double>(N), k + 2) / std::tgamma(k + 3);
      lx.push_back(std::log(static_cast<double>(N)));
      ly.push_back(std::log(std::fabs(cesaro_avg_oracle(table, N, k) - main)));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      mx += lx[i] / lx.size();
      my += ly[i] / ly.size();
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sxy += (lx[i] - mx) * (ly[i] - my);
      sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = sxy / sxx;
    pass = pass && slope >= k + 0.5 && slope <= k + 1.5;
    detail += fmt(" k=%g", k) + fmt(": slope %.3f", slope);
  }
  const double t = seconds_since(t0);
  return {pass && t < 30, detail.substr(1) + fmt(", %.1f s", t)};
}

Outcome selftest() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string failed;
  for (const auto& r : run_special_function_selftest()) {
    if (!r.pass) failed += " " + r.name;
    pass = pass && r.pass;
  }
  const double t = seconds_since(t0);
  return {pass && t < 5,
          (pass ? std::string("all checks within limits") : "failed:" + failed) +
              fmt(", %.1f s", t)};
}

Outcome conjecture_scan() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto v = select(zeros(), 1000);
  bool pass = true;
  std::string detail = "value/N";
  for (std::int64_t N : {25, 50, 100, 200, 400}) {
    const auto d = conjecture_double_sum(N, v);
    pass = pass && std::isfinite(d.value) &&
           std::fabs(d.imag_residue) <= 1e-9 * std::max(1.0, std::fabs(d.value));
    detail += " " + std::to_string(N) + ":" +
              fmt("%.4g", d.value / static_cast<double>(N));
  }
  const double t = seconds_since(t0);
  return {pass, detail + fmt(", %.1f s", t)};
}

Outcome short_intervals() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = build_table(10100);
  std::int64_t misses = 0;
  for (std::int64_t N = 3; N <= 5000; ++N) {
    const auto H = static_cast<std::int64_t>(
        std::ceil(10 * std::log(std::log(static_cast<double>(N)))));
    if (!goldbach_in_interval(table, N, H)) ++misses;
  }
  const double t = seconds_since(t0);
  return {misses == 0 && t < 10,
          fmt("%.0f misses for 3 <= N <= 5000", static_cast<double>(misses)) +
              fmt(", %.1f s", t)};
}

Outcome determinism() {
  const auto t0 = std::chrono::steady_clock::now();
  int code = -1;
  const std::string many = goldbach_csv(8, &code);
  const double t = seconds_since(t0);
  const bool same = !goldbach_csv_1thread.empty() && many == goldbach_csv_1thread;
  return {same, std::string(same ? "1 and 8 workers give identical CSV"
                                 : "CSV differs between 1 and 8 workers") +
                    fmt(", %.1f s", t)};
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"identity suite", identities},
      {"truncated psi0", psi_truncation},
      {"weighted-sum lemma", lemma},
      {"Goldbach average, truncated", goldbach_average},
      {"prime-tuple average", tuple_average},
      {"Cesaro main term", cesaro},
      {"special-function self-test", selftest},
      {"double-sum scan", conjecture_scan},
      {"Goldbach numbers in short intervals", short_intervals},
      {"determinism across worker counts", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", index,
                name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
