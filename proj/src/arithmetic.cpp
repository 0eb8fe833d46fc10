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

#include "explicitavg/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "explicitavg/errors.hpp"
#include "explicitavg/summation.hpp"

namespace explicitavg {

namespace {

void check_index(const VonMangoldtTable& table, std::int64_t n,
                 const char* what) {
  if (n < 0 || n > table.n_max()) {
    throw OutOfRange(std::string(what) + ": index " + std::to_string(n) +
                     " outside table range [0, " +
                     std::to_string(table.n_max()) + "]");
  }
}

}  // namespace

VonMangoldtTable VonMangoldtTable::build(std::int64_t n_max,
                                         std::int64_t cap) {
  if (n_max < 2) {
    throw InvalidArgument("build_table: n_max must be at least 2");
  }
  if (n_max > cap) {
    throw ResourceLimit("build_table: n_max " + std::to_string(n_max) +
                        " exceeds cap " + std::to_string(cap));
  }
  VonMangoldtTable t;
  t.n_max_ = n_max;
  const auto size = static_cast<std::size_t>(n_max) + 1;
  t.spf_.assign(size, 0);
  t.lambda_.assign(size, 0.0);
  t.psi_prefix_.assign(size, 0.0);

  std::vector<std::uint32_t> primes;
  for (std::int64_t i = 2; i <= n_max; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::int64_t m = i * static_cast<std::int64_t>(p);
      if (p > t.spf_[i] || m > n_max) break;
      t.spf_[m] = p;
    }
  }

  CompensatedSum running;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    const std::int64_t p = t.spf_[n];
    std::int64_t m = n;
    while (m % p == 0) m /= p;
    if (m == 1) {
      t.lambda_[n] = std::log(static_cast<double>(p));
      t.prime_powers_.push_back(n);
      running.add(t.lambda_[n]);
    }
    t.psi_prefix_[n] = running.value();
  }
  return t;
}

double VonMangoldtTable::lambda(std::int64_t n) const {
  check_index(*this, n, "lambda");
  return lambda_[n];
}

std::uint32_t VonMangoldtTable::smallest_prime_factor(std::int64_t n) const {
  check_index(*this, n, "smallest_prime_factor");
  return spf_[n];
}

double VonMangoldtTable::psi_at(std::int64_t n) const {
  check_index(*this, n, "psi");
  return psi_prefix_[n];
}

VonMangoldtTable build_table(std::int64_t n_max) {
  return VonMangoldtTable::build(n_max);
}

double psi(const VonMangoldtTable& table, double x) {
  if (!(x >= 0.0) || x > static_cast<double>(table.n_max())) {
    throw OutOfRange("psi: argument outside table range");
  }
  return table.psi_at(static_cast<std::int64_t>(std::floor(x)));
}

double psi0(const VonMangoldtTable& table, double x) {
  const double v = psi(table, x);
  if (x == std::floor(x)) {
    return v - 0.5 * table.lambda(static_cast<std::int64_t>(x));
  }
  return v;
}

double psi1_oracle(const VonMangoldtTable& table, std::int64_t N) {
  check_index(table, N, "psi1_oracle");
  CompensatedSum s;
  for (std::int64_t n : table.prime_powers()) {
    if (n > N) break;
    s.add(table.lambda(n) * static_cast<double>(N - n));
  }
  return s.value();
}

double r_goldbach(const VonMangoldtTable& table, std::int64_t n) {
  check_index(table, n, "r_goldbach");
  const auto lam = table.values();
  CompensatedSum s;
  for (std::int64_t m = 2; m + 2 <= n; ++m) {
    if (lam[m] > 0.0 && lam[n - m] > 0.0) s.add(lam[m] * lam[n - m]);
  }
  return s.value();
}

double goldbach_avg_oracle(const VonMangoldtTable& table, std::int64_t N) {
  if (N < 2) throw InvalidArgument("goldbach_avg_oracle: N must be >= 2");
  check_index(table, 2 * N, "goldbach_avg_oracle");
  const auto pp = table.prime_powers();
  const auto lam = table.values();
  CompensatedSum s;
  for (std::int64_t a : pp) {
    if (a + 2 > 2 * N) break;
    for (std::int64_t b : pp) {
      if (a + b > 2 * N) break;
      s.add(lam[a] * lam[b]);
    }
  }
  s.add(-0.5 * r_goldbach(table, 2 * N));
  return s.value();
}

double r_tuples(const VonMangoldtTable& table, std::int64_t N,
                std::int64_t h) {
  if (N < 0 || h < 0) throw InvalidArgument("r_tuples: N and h must be >= 0");
  check_index(table, N + h, "r_tuples");
  const auto lam = table.values();
  CompensatedSum s;
  for (std::int64_t n : table.prime_powers()) {
    if (n > N) break;
    if (lam[n + h] > 0.0) s.add(lam[n] * lam[n + h]);
  }
  return s.value();
}

double tuples_avg_oracle(const VonMangoldtTable& table, std::int64_t N,
                         std::int64_t M) {
  if (N < 2) throw InvalidArgument("tuples_avg_oracle: N must be >= 2");
  if (M < 0 || M > N) {
    throw InvalidArgument("tuples_avg_oracle: need 0 <= M <= N");
  }
  check_index(table, N + M, "tuples_avg_oracle");
  CompensatedSum s;
  for (std::int64_t h = 0; h <= M; ++h) s.add(r_tuples(table, N, h));
  s.add(-0.5 * r_tuples(table, N, M));
  s.add(-0.5 * r_tuples(table, N, 0));
  return s.value();
}

IdentitySides goldbach_triangle_identity(const VonMangoldtTable& table,
                                         std::int64_t N) {
  if (N < 1) throw InvalidArgument("goldbach_triangle_identity: N < 1");
  check_index(table, 2 * N, "goldbach_triangle_identity");
  const auto lam = table.values();
  CompensatedSum lhs, rhs;
  for (std::int64_t n = 2; n <= 2 * N; ++n) lhs.add(r_goldbach(table, n));
  for (std::int64_t n = 1; n <= N; ++n) {
    if (lam[n] > 0.0) rhs.add(2.0 * lam[n] * table.psi_at(2 * N - n));
  }
  const double pn = table.psi_at(N);
  rhs.add(-pn * pn);
  return {lhs.value(), rhs.value()};
}

IdentitySides tuples_parallelogram_identity(const VonMangoldtTable& table,
                                            std::int64_t N, std::int64_t M) {
  if (N < 1 || M < 0) {
    throw InvalidArgument("tuples_parallelogram_identity: need N >= 1, M >= 0");
  }
  check_index(table, N + M, "tuples_parallelogram_identity");
  const auto lam = table.values();
  CompensatedSum lhs, rhs;
  for (std::int64_t h = 0; h <= M; ++h) lhs.add(r_tuples(table, N, h));
  for (std::int64_t n = 1; n <= N; ++n) {
    if (lam[n] > 0.0) {
      rhs.add(lam[n] * table.psi_at(n + M));
      rhs.add(lam[n] * table.psi_at(n));
    }
  }
  const double pn = table.psi_at(N);
  rhs.add(-pn * pn);
  return {lhs.value(), rhs.value()};
}

double nearest_prime_power_distance(const VonMangoldtTable& table, double x) {
  if (!(x > 1.0) || x > static_cast<double>(table.n_max())) {
    throw OutOfRange("nearest_prime_power_distance: x outside (1, n_max]");
  }
  const auto pp = table.prime_powers();
  double best = INFINITY;
  const auto idx = std::lower_bound(pp.begin(), pp.end(),
                                    static_cast<std::int64_t>(std::floor(x))) -
                   pp.begin();
  for (std::ptrdiff_t j = idx - 2; j <= idx + 2; ++j) {
    if (j < 0 || j >= static_cast<std::ptrdiff_t>(pp.size())) continue;
    const double d = std::fabs(static_cast<double>(pp[j]) - x);
    if (d > 0.0) best = std::min(best, d);
  }
  return best;
}

SingularSeries singular_series(std::int64_t M, std::int64_t prime_cutoff) {
  if (M < 2) throw InvalidArgument("singular_series: M must be >= 2");
  if (prime_cutoff < 3) {
    throw InvalidArgument("singular_series: prime cutoff must be >= 3");
  }
  SingularSeries out;
  out.prime_cutoff = prime_cutoff;
  out.relative_tail_bound = 1.0 / static_cast<double>(prime_cutoff - 2);
  if (M % 2 != 0) return out;

  std::vector<char> composite(static_cast<std::size_t>(prime_cutoff) + 1, 0);
  double log_product = 0.0;
  for (std::int64_t p = 3; p <= prime_cutoff; p += 2) {
    if (composite[p]) continue;
    for (std::int64_t q = p * p; q <= prime_cutoff; q += 2 * p) {
      composite[q] = 1;
    }
    const double pm1 = static_cast<double>(p - 1);
    log_product += std::log1p(-1.0 / (pm1 * pm1));
    if (M % p == 0) log_product += std::log(pm1 / static_cast<double>(p - 2));
  }
  // Odd primes dividing M above the cutoff still contribute exactly.
  std::int64_t rest = M;
  while (rest % 2 == 0) rest /= 2;
  for (std::int64_t p = 3; p * p <= rest; p += 2) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (p > prime_cutoff) {
      log_product += std::log(static_cast<double>(p - 1) /
                              static_cast<double>(p - 2));
    }
  }
  if (rest > 1 && rest > prime_cutoff) {
    log_product += std::log(static_cast<double>(rest - 1) /
                            static_cast<double>(rest - 2));
  }
  out.value = 2.0 * std::exp(log_product);
  return out;
}

}  // namespace explicitavg
