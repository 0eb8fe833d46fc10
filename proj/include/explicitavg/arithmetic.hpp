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

// Brute-force arithmetic: the von Mangoldt function, Chebyshev functions and
// the Goldbach / prime-tuple counts they generate. Everything here is exact
// enumeration and serves as ground truth for the explicit formulas.

#ifndef EXPLICITAVG_ARITHMETIC_HPP_
#define EXPLICITAVG_ARITHMETIC_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace explicitavg {

inline constexpr std::int64_t kDefaultTableCap = 50'000'000;

// Lambda(n) for 0 <= n <= n_max with Lambda(0) = Lambda(1) = 0, built from a
// linear smallest-prime-factor sieve. Immutable after construction, so a
// const table may be shared freely between threads.
class VonMangoldtTable {
 public:
  // Throws InvalidArgument if n_max < 2 and ResourceLimit if n_max > cap.
  static VonMangoldtTable build(std::int64_t n_max,
                                std::int64_t cap = kDefaultTableCap);

  std::int64_t n_max() const { return n_max_; }

  // Throws OutOfRange outside [0, n_max].
  double lambda(std::int64_t n) const;
  std::uint32_t smallest_prime_factor(std::int64_t n) const;
  bool is_prime_power(std::int64_t n) const { return lambda(n) > 0.0; }

  // Lambda values indexed 0..n_max.
  std::span<const double> values() const { return lambda_; }

  // psi(n) for integer n in [0, n_max], from compensated prefix sums.
  double psi_at(std::int64_t n) const;

  // Prime powers <= n_max in ascending order.
  std::span<const std::int64_t> prime_powers() const { return prime_powers_; }

 private:
  VonMangoldtTable() = default;

  std::int64_t n_max_ = 0;
  std::vector<double> lambda_;
  std::vector<std::uint32_t> spf_;
  std::vector<double> psi_prefix_;
  std::vector<std::int64_t> prime_powers_;
};

VonMangoldtTable build_table(std::int64_t n_max);

// psi(x) = sum_{n <= x} Lambda(n). Requires 0 <= x <= n_max.
double psi(const VonMangoldtTable& table, double x);

// psi minus Lambda(x)/2 when x is an integer; psi otherwise.
double psi0(const VonMangoldtTable& table, double x);

// psi_1(N) = integral_0^N psi(t) dt = sum_{n <= N} Lambda(n) (N - n).
double psi1_oracle(const VonMangoldtTable& table, std::int64_t N);

// r_G(n) = sum_{m1 + m2 = n} Lambda(m1) Lambda(m2).
double r_goldbach(const VonMangoldtTable& table, std::int64_t n);

// sum_{n <= 2N} r_G(n) - r_G(2N)/2, by enumerating prime-power pairs.
double goldbach_avg_oracle(const VonMangoldtTable& table, std::int64_t N);

// r_PT(N, h) = sum_{n=0}^{N} Lambda(n) Lambda(n + h).
double r_tuples(const VonMangoldtTable& table, std::int64_t N, std::int64_t h);

// sum_{h=0}^{M} r_PT(N, h) - r_PT(N, M)/2 - r_PT(N, 0)/2.
double tuples_avg_oracle(const VonMangoldtTable& table, std::int64_t N,
                         std::int64_t M);

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

// lhs = sum_{n <= 2N} r_G(n) from r_G directly,
// rhs = 2 sum_{n <= N} Lambda(n) psi(2N - n) - psi(N)^2.
IdentitySides goldbach_triangle_identity(const VonMangoldtTable& table,
                                         std::int64_t N);

// lhs = sum_{h=0}^{M} r_PT(N, h),
// rhs = sum_{n <= N} Lambda(n) (psi(n + M) + psi(n)) - psi(N)^2.
IdentitySides tuples_parallelogram_identity(const VonMangoldtTable& table,
                                            std::int64_t N, std::int64_t M);

// Distance from x to the nearest prime power other than x itself.
double nearest_prime_power_distance(const VonMangoldtTable& table, double x);

struct SingularSeries {
  double value = 0.0;
  // Upper bound on |value / exact - 1| from cutting the Euler product at
  // prime_cutoff.
  double relative_tail_bound = 0.0;
  std::int64_t prime_cutoff = 0;
};

// 2 prod_{p>2} (1 - 1/(p-1)^2) prod_{p | M, p > 2} (p-1)/(p-2) for even M,
// zero for odd M. Throws InvalidArgument for M < 2.
SingularSeries singular_series(std::int64_t M,
                               std::int64_t prime_cutoff = 1'000'000);

}  // namespace explicitavg

#endif  // EXPLICITAVG_ARITHMETIC_HPP_
