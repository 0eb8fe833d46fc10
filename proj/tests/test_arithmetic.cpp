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
#include <vector>

#include "doctest.h"
#include "explicitavg/arithmetic.hpp"
#include "explicitavg/errors.hpp"
#include "explicitavg/quadrature.hpp"

using namespace explicitavg;

namespace {

const VonMangoldtTable& small_table() {
  static const VonMangoldtTable t = build_table(2000);
  return t;
}

bool naive_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

double naive_lambda(std::int64_t n) {
  for (std::int64_t p = 2; p <= n; ++p) {
    if (!naive_prime(p)) continue;
    std::int64_t q = p;
    while (q < n) q *= p;
    if (q == n) return std::log(static_cast<double>(p));
    if (n % p == 0) return 0.0;
  }
  return 0.0;
}

const double l2 = std::log(2.0), l3 = std::log(3.0), l5 = std::log(5.0);

}  // namespace

TEST_CASE("von Mangoldt values") {
  const auto t = build_table(12);
  CHECK(t.lambda(8) == doctest::Approx(l2));
  CHECK(t.lambda(12) == 0.0);
  CHECK(t.lambda(1) == 0.0);
  CHECK(t.lambda(0) == 0.0);
  CHECK(t.smallest_prime_factor(12) == 2);
  CHECK_THROWS_AS(t.lambda(13), OutOfRange);
  for (std::int64_t n = 0; n <= 2000; ++n) {
    REQUIRE(small_table().lambda(n) == doctest::Approx(naive_lambda(n)));
  }
}

TEST_CASE("table construction limits") {
  CHECK_THROWS_AS(build_table(1), InvalidArgument);
  CHECK_THROWS_AS(VonMangoldtTable::build(1000, 100), ResourceLimit);
  const auto t = build_table(100);
  CHECK(t.prime_powers().size() == 35);  // 25 primes and 10 higher powers
}

TEST_CASE("psi and psi0") {
  const auto& t = small_table();
  CHECK(psi(t, 1.5) == 0.0);
  CHECK(psi(t, 2) == doctest::Approx(l2));
  CHECK(psi(t, 10) == doctest::Approx(std::log(2520.0)).epsilon(1e-14));
  CHECK(psi(t, 10.9) == psi(t, 10));
  CHECK(psi0(t, 9) == doctest::Approx(psi(t, 9) - 0.5 * l3));
  CHECK(psi0(t, 10) == psi(t, 10));
  CHECK_THROWS_AS(psi(t, 2001), OutOfRange);
}

TEST_CASE("psi1 against quadrature of psi") {
  const auto& t = small_table();
  CHECK(psi1_oracle(t, 2) == 0.0);
  CHECK(psi1_oracle(t, 3) == doctest::Approx(l2));
  std::vector<double> cuts;
  for (int i = 0; i <= 10; ++i) cuts.push_back(i);
  const auto q = integrate<double>([&](double x) { return psi(t, x); },
                                   std::span<const double>(cuts));
  CHECK(std::fabs(psi1_oracle(t, 10) - q.value) < 1e-9);
}

TEST_CASE("Goldbach representation counts") {
  const auto& t = small_table();
  CHECK(r_goldbach(t, 4) == doctest::Approx(l2 * l2));
  CHECK(r_goldbach(t, 5) == doctest::Approx(2 * l2 * l3));
  CHECK(r_goldbach(t, 3) == 0.0);
  // r_G(6) = 3+3, 2+4 and 4+2.
  const double r6 = l3 * l3 + 2 * l2 * l2;
  CHECK(r_goldbach(t, 6) == doctest::Approx(r6));
  CHECK(goldbach_avg_oracle(t, 3) ==
        doctest::Approx(l2 * l2 + 2 * l2 * l3 + r6 / 2).epsilon(1e-14));
}

TEST_CASE("prime tuple counts") {
  const auto& t = small_table();
  double sq = 0.0;
  for (int n = 1; n <= 10; ++n) sq += t.lambda(n) * t.lambda(n);
  CHECK(r_tuples(t, 10, 0) == doctest::Approx(sq));
  CHECK(r_tuples(t, 4, 1) == doctest::Approx(2 * l2 * l3 + l2 * l5));
  CHECK(r_tuples(t, 2, 1000) == 0.0);
  for (int N : {5, 17, 40}) CHECK(tuples_avg_oracle(t, N, 0) == 0.0);

  double direct = 0.0;
  for (int h = 0; h <= 2; ++h) {
    const double w = (h == 0 || h == 2) ? 0.5 : 1.0;
    for (int n = 1; n <= 10; ++n) direct += w * t.lambda(n) * t.lambda(n + h);
  }
  CHECK(tuples_avg_oracle(t, 10, 2) == doctest::Approx(direct).epsilon(1e-14));
  CHECK_THROWS_AS(tuples_avg_oracle(t, 10, 11), InvalidArgument);
}

TEST_CASE("lattice identities") {
  const auto& t = small_table();
  for (std::int64_t N = 3; N <= 120; ++N) {
    const auto s = goldbach_triangle_identity(t, N);
    REQUIRE(std::fabs(s.lhs - s.rhs) <= 1e-12 * std::fabs(s.rhs));
    REQUIRE(std::fabs(goldbach_avg_oracle(t, N) + r_goldbach(t, 2 * N) / 2 -
                      s.rhs) <= 1e-12 * s.rhs);
  }
  for (std::int64_t N : {3, 10, 37, 80}) {
    for (std::int64_t M = 0; M <= N; ++M) {
      const auto s = tuples_parallelogram_identity(t, N, M);
      REQUIRE(std::fabs(s.lhs - s.rhs) <= 1e-12 * std::fabs(s.rhs));
    }
  }
}

TEST_CASE("nearest prime power distance") {
  const auto& t = small_table();
  CHECK(nearest_prime_power_distance(t, 6) == 1.0);
  CHECK(nearest_prime_power_distance(t, 8) == 1.0);
  CHECK(nearest_prime_power_distance(t, 14.2) == doctest::Approx(1.2));
  CHECK(nearest_prime_power_distance(t, 2) == 1.0);
  CHECK(nearest_prime_power_distance(t, 1000) == 3.0);  // 997
  CHECK_THROWS_AS(nearest_prime_power_distance(t, 1.0), OutOfRange);
}

TEST_CASE("singular series") {
  constexpr double kTwinPrime = 0.66016181584686957;
  CHECK(singular_series(3).value == 0.0);
  const auto s4 = singular_series(4);
  CHECK(s4.value == doctest::Approx(2 * kTwinPrime).epsilon(1e-6));
  CHECK(std::fabs(s4.value / (2 * kTwinPrime) - 1) <= s4.relative_tail_bound);
  CHECK(singular_series(6).value / s4.value == doctest::Approx(2.0));
  CHECK(singular_series(30).value / singular_series(2).value ==
        doctest::Approx(8.0 / 3.0));
  CHECK_THROWS_AS(singular_series(0), InvalidArgument);
}
