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

#include <cmath>
#include <complex>

#include "doctest.h"
#include "explicitavg/errors.hpp"
#include "explicitavg/selftest.hpp"
#include "explicitavg/specfun.hpp"

using namespace explicitavg;

namespace {

// sum_k (1-b)_k / (k! (a+k)) z^(a+k), stopped when the term falls below
// 1e-18 relative to the partial sum.
cplx inc_beta_series(double z, cplx a, cplx b) {
  cplx sum = 0.0;
  cplx coef = 1.0;
  for (int k = 0; k < 2000; ++k) {
    const cplx term = coef / (a + static_cast<double>(k)) *
                      std::exp((a + static_cast<double>(k)) * std::log(z));
    sum += term;
    if (k > 5 && std::abs(term) < 1e-18 * std::abs(sum)) break;
    coef *= (1.0 - b + static_cast<double>(k)) / static_cast<double>(k + 1);
  }
  return sum;
}

}  // namespace

TEST_CASE("log_gamma") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-14);
  CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(kPi)) < 1e-14);
  // Principal branch stays continuous along a vertical line.
  const cplx a = log_gamma({0.5, 100.0});
  const cplx b = log_gamma({0.5, 100.001});
  CHECK(std::abs(a - b) < 0.01);
  CHECK_THROWS_AS(log_gamma(-2.0), DomainError);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
}

TEST_CASE("log_gamma at a zeta ordinate") {
  // mpmath loggamma(0.5+14.134725j)
  const cplx v = log_gamma({0.5, 14.134725});
  CHECK(v.real() == doctest::Approx(-21.2838355770513).epsilon(1e-10));
  CHECK(v.imag() == doctest::Approx(23.3059444726657).epsilon(1e-10));
}

TEST_CASE("gamma_ratio") {
  CHECK(std::abs(gamma_ratio(1.0, 1.0) - 0.5) < 1e-15);
  CHECK(std::abs(gamma_ratio(1.0, 2.0) - 1.0 / 6.0) < 1e-15);
  const cplx r1(0.5, 14.134725), r2(0.5, -21.02204);
  const cplx g = gamma_ratio(r1, r2);
  CHECK(std::abs(g - gamma_ratio(r2, r1)) < 1e-15 * std::abs(g));
  // B(r1, r2 + 1) = Gamma(r1) Gamma(r2 + 1) / Gamma(r1 + r2 + 1).
  CHECK(std::abs(g * r2 - std::exp(log_gamma(r1) + log_gamma(r2 + 1.0) -
                                   log_gamma(r1 + r2 + 1.0))) <
        1e-10 * std::abs(g * r2));
}

TEST_CASE("inc_beta elementary values") {
  for (double z : {0.0, 0.1, 0.5, 0.9}) {
    CHECK(std::abs(inc_beta(z, 1.0, 1.0) - z) < 1e-14);
  }
  CHECK(std::abs(inc_beta(0.5, 1.0, 0.0) - std::log(2.0)) < 1e-13);
  CHECK(std::abs(inc_beta(0.999, 1.0, 0.0) - std::log(1000.0)) < 1e-11);
  CHECK(std::abs(inc_beta(1.0, 2.0, 3.0) - 1.0 / 12.0) < 1e-14);
  CHECK_THROWS_AS(inc_beta(1.5, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(inc_beta(0.5, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(inc_beta(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("inc_beta against the hypergeometric series") {
  const cplx a(2.0, 3.0), b(1.0, -1.0);
  const cplx v = inc_beta(0.3, a, b);
  const cplx s = inc_beta_series(0.3, a, b);
  CHECK(std::abs(v - s) < 1e-12 * std::abs(s));

  for (double z : {0.05, 0.4, 0.6}) {
    for (cplx aa : {cplx(0.5, 14.134725), cplx(1.5, -60.0), cplx(3.0, 0.0)}) {
      for (cplx bb : {cplx(0.0), cplx(1.5, 21.02204), cplx(-0.5, 3.0)}) {
        const cplx ref = inc_beta_series(z, aa, bb);
        CAPTURE(z);
        CAPTURE(aa);
        CAPTURE(bb);
        CHECK(std::abs(inc_beta(z, aa, bb) - ref) <=
              1e-9 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST_CASE("inc_beta at large imaginary parameters") {
  // Reference from the series, which converges geometrically here.
  const cplx a(1.5, 1000.0);
  const cplx v = inc_beta(0.75, a, 0.0);
  const cplx ref = inc_beta_series(0.75, a, 0.0);
  CHECK(std::abs(v - ref) < 1e-9 * std::abs(ref));
}

TEST_CASE("complete Beta consistency") {
  CHECK(complete_beta_consistency(2.0, 3.0) < 1e-8);
  CHECK(complete_beta_consistency({0.5, 14.134725}, 1.0) < 1e-6);
  CHECK(complete_beta_consistency(1.0, 1.0) < 1e-12);
  CHECK(complete_beta_consistency({0.7, -25.0}, {0.3, 12.0}) < 1e-6);
}

TEST_CASE("weighted power integral against a fixed Simpson grid") {
  const cplx p(0.5, 14.134725), q = p;
  const cplx v = weighted_power_integral(2.0, 50.0, 10.0, p, q);
  // Composite Simpson on 400000 panels.
  const int n = 400000;
  const double h = 48.0 / n;
  cplx s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = 2.0 + i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * std::exp(p * std::log(t) + (q - 1.0) * std::log(t + 10.0));
  }
  s *= h / 3.0;
  CHECK(std::abs(v - s) < 1e-8 * std::abs(s));

  // Closed form when the shift vanishes: t^(p+q-1).
  const cplx z = weighted_power_integral(2.0, 50.0, 0.0, p, q);
  const cplx e = p + q;
  const cplx closed = (std::exp(e * std::log(50.0)) -
                       std::exp(e * std::log(2.0))) / e;
  CHECK(std::abs(z - closed) < 1e-12 * std::abs(closed));
}

TEST_CASE("dilogarithm") {
  const double l2 = std::log(2.0);
  CHECK(dilog(0.0) == 0.0);
  CHECK(std::fabs(dilog(1.0) - kPi * kPi / 6.0) < 1e-14);
  CHECK(std::fabs(dilog(0.5) - (kPi * kPi / 12.0 - l2 * l2 / 2.0)) < 1e-14);
  CHECK(std::fabs(dilog(-1.0) + kPi * kPi / 12.0) < 1e-14);
  // mpmath polylog(2, -7.5) and polylog(2, 0.93)
  CHECK(dilog(-7.5) == doctest::Approx(-3.54571710425585).epsilon(1e-10));
  CHECK(dilog(0.93) == doctest::Approx(1.38068504113028).epsilon(1e-10));
  for (int i = 1; i < 50; ++i) {
    const double x = i / 50.0;
    REQUIRE(std::fabs(dilog(x) + dilog(1 - x) - kPi * kPi / 6.0 +
                      std::log(x) * std::log1p(-x)) < 1e-13);
  }
  CHECK_THROWS_AS(dilog(1.5), DomainError);
}

TEST_CASE("log over linear integral") {
  for (std::int64_t N : {3, 10, 100, 1000}) {
    CAPTURE(N);
    const double c = log_over_linear_integral(N);
    CHECK(std::fabs(c - log_over_linear_quadrature(N)) < 1e-9 * std::fabs(c));
  }
  // Growth: log(2N) log 2 + Li2(1/2) - pi^2/6 + O(log N / N).
  for (std::int64_t N : {1000, 10000, 100000}) {
    const double n = static_cast<double>(N);
    const double asym =
        std::log(2 * n) * std::log(2.0) + dilog(0.5) - kPi * kPi / 6.0;
    CHECK(std::fabs(log_over_linear_integral(N) - asym) < 3 * std::log(n) / n);
  }
  CHECK_THROWS(log_over_linear_integral(2));
}

TEST_CASE("zeta constants") {
  const auto& z = zeta_constants();
  CHECK(std::fabs(z.zeta_log_deriv_at_0 - std::log(2 * kPi)) < 1e-12);
  // mpmath zeta(-1, derivative=1)/zeta(-1)
  CHECK(std::fabs(z.zeta_log_deriv_at_minus1 - 1.98505372440541) < 1e-10);
  CHECK(std::fabs(minus_zeta_prime_2() - 0.937548254315844) < 1e-12);
}

TEST_CASE("self-test suite passes") {
  for (const auto& r : run_special_function_selftest()) {
    CAPTURE(r.name);
    CAPTURE(r.value);
    CHECK(r.pass);
  }
}
