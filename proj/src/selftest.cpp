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

#include "explicitavg/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include "explicitavg/specfun.hpp"

namespace explicitavg {

namespace {

// log of Glaisher's constant.
constexpr double kLogGlaisher = 0.24875447703378426255;

SelfTestResult timed(const std::string& name, double bound,
                     const std::function<double()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  SelfTestResult r;
  r.name = name;
  r.bound = bound;
  r.value = fn();
  r.pass = r.value < bound;
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

double rel(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
}

}  // namespace

std::vector<SelfTestResult> run_special_function_selftest() {
  std::vector<SelfTestResult> out;
  constexpr double pi = kPi;

  out.push_back(timed("complete_beta_grid", 1e-6, [] {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> re(0.05, 3.0);
    std::uniform_real_distribution<double> im(-30.0, 30.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx a(re(rng), im(rng));
      const cplx b(re(rng), im(rng));
      worst = std::max(worst, complete_beta_consistency(a, b));
    }
    return worst;
  }));

  out.push_back(timed("complete_beta_closed_forms", 1e-8, [] {
    return std::max({complete_beta_consistency(2.0, 3.0),
                     complete_beta_consistency({0.5, 14.134725}, 1.0),
                     complete_beta_consistency(1.0, 1.0)});
  }));

  out.push_back(timed("inc_beta_elementary", 1e-12, [] {
    const double e1 = std::abs(inc_beta(0.3, 1.0, 1.0) - 0.3);
    const double e2 = std::abs(inc_beta(0.5, 1.0, 0.0) - std::log(2.0));
    return std::max(e1, e2);
  }));

  out.push_back(timed("inc_beta_conjugate_symmetry", 1e-12, [] {
    const cplx a(0.7, 9.0), b(1.3, -4.0);
    const cplx v = inc_beta(0.6, a, b);
    const cplx w = inc_beta(0.6, std::conj(a), std::conj(b));
    return std::abs(v - std::conj(w)) / std::abs(v);
  }));

  out.push_back(timed("log_gamma_reflection", 1e-10, [pi] {
    // log Gamma(z) + log Gamma(1-z) = log(pi / sin(pi z)) modulo 2 pi i.
    double worst = 0.0;
    for (cplx z : {cplx(0.5, 14.134725), cplx(0.3, 2.0), cplx(0.5, 21.02204)}) {
      const cplx lhs = log_gamma(z) + log_gamma(1.0 - z);
      const cplx rhs = std::log(pi / std::sin(pi * z));
      const cplx d = std::exp(lhs - rhs) - 1.0;
      worst = std::max(worst, std::abs(d));
    }
    return worst;
  }));

  out.push_back(timed("log_gamma_duplication", 1e-10, [pi] {
    // Gamma(z) Gamma(z+1/2) = 2^(1-2z) sqrt(pi) Gamma(2z).
    const cplx z(0.5, 14.134725);
    const cplx lhs = log_gamma(z) + log_gamma(z + 0.5);
    const cplx rhs = (1.0 - 2.0 * z) * std::log(2.0) + 0.5 * std::log(pi) +
                     log_gamma(2.0 * z);
    return std::abs(std::exp(lhs - rhs) - 1.0);
  }));

  out.push_back(timed("log_gamma_factorials", 1e-13, [] {
    double worst = 0.0;
    double fact = 1.0;
    for (int n = 1; n <= 15; ++n) {
      worst = std::max(
          worst, std::fabs(log_gamma(static_cast<double>(n)).real() -
                           std::log(fact)));
      fact *= n;
    }
    return worst;
  }));

  out.push_back(timed("dilog_reflection", 1e-10, [pi] {
    double worst = 0.0;
    for (int i = 1; i < 100; ++i) {
      const double x = i / 100.0;
      const double lhs = dilog(x) + dilog(1.0 - x);
      const double rhs = pi * pi / 6.0 - std::log(x) * std::log1p(-x);
      worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return worst;
  }));

  out.push_back(timed("dilog_closed_forms", 1e-12, [pi] {
    const double l2 = std::log(2.0);
    return std::max(std::fabs(dilog(1.0) - pi * pi / 6.0),
                    std::fabs(dilog(0.5) - (pi * pi / 12.0 - 0.5 * l2 * l2)));
  }));

  out.push_back(timed("log_over_linear_closed_form", 1e-9, [] {
    double worst = 0.0;
    for (std::int64_t N : {3, 10, 100}) {
      worst = std::max(worst, rel(log_over_linear_integral(N),
                                  log_over_linear_quadrature(N)));
    }
    return worst;
  }));

  out.push_back(timed("zeta_log_deriv_at_0", 1e-12, [pi] {
    return std::fabs(zeta_constants().zeta_log_deriv_at_0 -
                     std::log(2.0 * pi));
  }));

  out.push_back(timed("zeta_log_deriv_at_minus1", 1e-10, [] {
    return std::fabs(zeta_constants().zeta_log_deriv_at_minus1 -
                     (12.0 * kLogGlaisher - 1.0));
  }));

  return out;
}

}  // namespace explicitavg
