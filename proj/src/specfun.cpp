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

#include "explicitavg/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "explicitavg/errors.hpp"
#include "explicitavg/summation.hpp"

namespace explicitavg {

namespace {

// B_{2k} / (2k (2k-1)) for k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

cplx stirling(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx p = inv;
  for (double c : kStirling) {
    series += c * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi + series;
}

void require_converged(const QuadResult<cplx>& r, const char* what) {
  if (!r.converged) {
    throw AccuracyError(std::string(what) + ": tolerance not met (error " +
                            std::to_string(r.error) + ")",
                        r.error);
  }
}

// delta^a sum_k (1-b)_k delta^k / (k! (a+k)).
cplx beta_series_head(double delta, cplx a, cplx b) {
  CompensatedComplexSum s;
  cplx coeff = 1.0;
  for (int k = 0; k < 5000; ++k) {
    const cplx term = coeff / (a + static_cast<double>(k));
    s.add(term);
    if (k > 4 && std::abs(term) < 1e-18 * std::abs(s.value()) &&
        std::abs(coeff) < 1e-18 * std::max(1.0, std::abs(s.value()))) {
      break;
    }
    coeff *= (static_cast<double>(k) + 1.0 - b) * delta /
             (static_cast<double>(k) + 1.0);
    if (coeff == 0.0) break;
  }
  return real_pow(delta, a) * s.value();
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw DomainError("log_gamma: pole at non-positive integer " +
                      std::to_string(z.real()));
  }
  // Shift into the Stirling region and undo the shift with principal logs.
  cplx shift = 0.0;
  while (z.real() < 10.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

cplx gamma_ratio(cplx r1, cplx r2) {
  return std::exp(log_gamma(r1) + log_gamma(r2) - log_gamma(r1 + r2 + 1.0));
}

cplx inc_beta(double z, cplx a, cplx b, const QuadOptions& opt) {
  if (!(a.real() > 0.0)) throw DomainError("inc_beta: requires Re a > 0");
  if (!(z >= 0.0) || z > 1.0) {
    throw DomainError("inc_beta: z must lie in [0, 1]");
  }
  if (z == 1.0) {
    if (!(b.real() > 0.0)) {
      throw DomainError("inc_beta: z = 1 requires Re b > 0");
    }
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
  }
  if (z == 0.0) return 0.0;

  const double delta = std::min({z, 0.5, 1.0 / (1.0 + std::abs(b - 1.0))});
  cplx total = beta_series_head(delta, a, b);
  if (z <= delta) return total;

  const double ia = std::fabs(a.imag());
  const double ib = std::fabs(b.imag());
  QuadOptions local = opt;
  local.abs_tol = 0.5 * opt.abs_tol;

  // [delta, min(z, 1/2)] in s = log t.
  const double left_end = std::min(z, 0.5);
  if (left_end > delta) {
    auto f = [a, b](double s) {
      return std::exp(a * s + (b - 1.0) * std::log1p(-std::exp(s)));
    };
    auto rate = [ia, ib](double s) {
      const double t = std::exp(s);
      return ia + ib * t / (1.0 - t) + 1.0;
    };
    const auto bp = plan_panels(std::log(delta), std::log(left_end), rate);
    const auto r = integrate<cplx>(f, std::span<const double>(bp), local);
    require_converged(r, "inc_beta");
    total += r.value;
  }
  // [max(delta, 1/2), z] in s = -log(1 - t).
  const double right_start = std::max(delta, 0.5);
  if (z > right_start) {
    auto f = [a, b](double s) {
      return std::exp((a - 1.0) * std::log1p(-std::exp(-s)) - b * s);
    };
    auto rate = [ia, ib](double s) {
      const double u = std::exp(-s);
      return ia * u / (1.0 - u) + ib + 1.0;
    };
    const auto bp =
        plan_panels(-std::log1p(-right_start), -std::log1p(-z), rate);
    const auto r = integrate<cplx>(f, std::span<const double>(bp), local);
    require_converged(r, "inc_beta");
    total += r.value;
  }
  return total;
}

double complete_beta_consistency(cplx a, cplx b) {
  if (!(a.real() > 0.0) || !(b.real() > 0.0)) {
    throw DomainError("complete_beta_consistency: requires Re a, Re b > 0");
  }
  constexpr double eps = 1e-6;
  QuadOptions opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-12;
  const cplx partial = inc_beta(1.0 - eps, a, b, opt);
  // integral_0^eps u^(b-1) (1-u)^(a-1) du to second order in eps.
  const cplx tail = real_pow(eps, b) / b - (a - 1.0) * real_pow(eps, b + 1.0) /
                                               (b + 1.0);
  const cplx full = std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
  return std::abs(partial + tail - full);
}

cplx weighted_power_integral(double lo, double hi, double shift, cplx p,
                             cplx q, const QuadOptions& opt) {
  if (!(lo > 0.0) || !(hi > lo) || !(shift >= 0.0)) {
    throw DomainError(
        "weighted_power_integral: needs 0 < lo < hi and shift >= 0");
  }
  if (shift == 0.0) {
    const cplx e = p + q;
    if (std::abs(e) > 1e-300) {
      return (real_pow(hi, e) - real_pow(lo, e)) / e;
    }
    return std::log(hi / lo);
  }
  auto f = [p, q, shift](double s) {
    const double t = std::exp(s);
    return std::exp((p + 1.0) * s + (q - 1.0) * std::log(t + shift));
  };
  const double ip = std::fabs(p.imag());
  const double iq = std::fabs(q.imag());
  auto rate = [ip, iq, shift](double s) {
    const double t = std::exp(s);
    return ip + iq * t / (t + shift) + 1.0;
  };
  const auto bp = plan_panels(std::log(lo), std::log(hi), rate);
  const auto r = integrate<cplx>(f, std::span<const double>(bp), opt);
  require_converged(r, "weighted_power_integral");
  return r.value;
}

double dilog(double x) {
  constexpr double pi2_6 = kPi * kPi / 6.0;
  if (!(x <= 1.0)) throw DomainError("dilog: requires x <= 1");
  if (x == 1.0) return pi2_6;
  if (x == 0.0) return 0.0;
  if (x < -1.0) {
    const double l = std::log(-x);
    return -pi2_6 - 0.5 * l * l - dilog(1.0 / x);
  }
  if (x < -0.5) {
    const double l = std::log1p(-x);
    return -dilog(x / (x - 1.0)) - 0.5 * l * l;
  }
  if (x > 0.5) {
    return pi2_6 - std::log(x) * std::log1p(-x) - dilog(1.0 - x);
  }
  CompensatedSum s;
  double p = x;
  for (int k = 1; k < 200; ++k) {
    const double term = p / (static_cast<double>(k) * k);
    s.add(term);
    if (std::fabs(term) < 1e-18 * std::fabs(s.value())) break;
    p *= x;
  }
  return s.value();
}

double log_over_linear_integral(std::int64_t N) {
  if (N <= 2) throw InvalidArgument("log_over_linear_integral: needs N > 2");
  const double n = static_cast<double>(N);
  const double inv = 1.0 / n;
  return std::log(2.0 * n) * (std::log(2.0) + std::log1p(-inv)) +
         dilog(0.5) - dilog(1.0 - inv);
}

double log_over_linear_quadrature(std::int64_t N) {
  if (N <= 2) throw InvalidArgument("log_over_linear_quadrature: needs N > 2");
  const double two_n = 2.0 * static_cast<double>(N);
  QuadOptions opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 1e-13;
  const auto r = integrate<double>(
      [two_n](double t) { return std::log(t) / (two_n - t); }, 2.0,
      static_cast<double>(N), opt);
  return r.value;
}

double minus_zeta_prime_2() {
  // Direct sum below K, Euler-Maclaurin tail from K on.
  constexpr int K = 20;
  CompensatedSum s;
  for (int n = 2; n < K; ++n) {
    const double d = n;
    s.add(std::log(d) / (d * d));
  }
  const double k = K;
  const double lk = std::log(k);
  s.add((lk + 1.0) / k);
  s.add(0.5 * lk / (k * k));
  // f^(m)(x) = x^(-2-m) (a_m log x + b_m) for f(x) = log x / x^2.
  constexpr std::array<double, 6> bern = {1.0 / 6.0,   -1.0 / 30.0,
                                          1.0 / 42.0,  -1.0 / 30.0,
                                          5.0 / 66.0,  -691.0 / 2730.0};
  double am = 1.0, bm = 0.0;
  double fact = 1.0;
  int m = 0;
  for (std::size_t j = 0; j < bern.size(); ++j) {
    const int order = 2 * static_cast<int>(j) + 1;
    while (m < order) {
      const double p = 2.0 + m;
      const double na = -p * am;
      const double nb = -p * bm + am;
      am = na;
      bm = nb;
      ++m;
    }
    fact *= (order) * (order + 1.0);
    const double deriv = std::pow(k, -2.0 - m) * (am * lk + bm);
    s.add(-bern[j] / fact * deriv);
  }
  return s.value();
}

const ZetaConstants& zeta_constants() {
  static const ZetaConstants c = [] {
    ZetaConstants out;
    out.zeta_log_deriv_at_0 = kLog2Pi;
    const double zeta2 = kPi * kPi / 6.0;
    const double digamma2 = 1.0 - kEulerGamma;
    out.zeta_log_deriv_at_minus1 =
        kLog2Pi - digamma2 + minus_zeta_prime_2() / zeta2;
    return out;
  }();
  return c;
}

}  // namespace explicitavg
