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

// Adaptive Gauss-Kronrod (10/21) quadrature for real or complex integrands,
// plus panel planning for oscillatory integrands whose local phase rate is
// known in closed form.

#ifndef EXPLICITAVG_QUADRATURE_HPP_
#define EXPLICITAVG_QUADRATURE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "explicitavg/parallel.hpp"
#include "explicitavg/summation.hpp"

namespace explicitavg {

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  std::size_t max_intervals = 400000;
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  std::size_t intervals = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for Kronrod nodes 1, 3, 5, 7, 9.
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(std::complex<double> z) { return std::abs(z); }

template <class T>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  T value{};
  double error = 0.0;
};

template <class T, class F>
Panel<T> kronrod21(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T kron = fc * kKronrodWeights[10];
  T gauss{};
  for (int j = 0; j < 10; ++j) {
    const double dx = h * kKronrodNodes[j];
    const T s = f(c - dx) + f(c + dx);
    kron += s * kKronrodWeights[j];
    if (j % 2 == 1) gauss += s * kGaussWeights[j / 2];
  }
  Panel<T> p;
  p.a = a;
  p.b = b;
  p.value = kron * h;
  p.error = magnitude((kron - gauss) * h);
  return p;
}

template <class T>
T sum_values(const std::vector<Panel<T>>& panels) {
  if constexpr (std::is_same_v<T, double>) {
    CompensatedSum s;
    for (const auto& p : panels) s.add(p.value);
    return s.value();
  } else {
    CompensatedComplexSum s;
    for (const auto& p : panels) s.add(p.value);
    return s.value();
  }
}

}  // namespace detail

// Integrates f over the partition given by `breakpoints` (ascending, at least
// two entries). Panels are refined in rounds: every panel whose error exceeds
// its length-weighted share of the tolerance is bisected. Each round's
// bisections run through parallel_map, and the result does not depend on the
// worker count.
template <class T, class F>
QuadResult<T> integrate(const F& f, std::span<const double> breakpoints,
                        const QuadOptions& opt = {}) {
  QuadResult<T> out;
  if (breakpoints.size() < 2) return out;
  const double total_len = breakpoints.back() - breakpoints.front();
  if (!(total_len > 0.0)) {
    out.converged = true;
    return out;
  }
  using Panel = detail::Panel<T>;
  std::vector<Panel> panels = parallel_map<Panel>(
      breakpoints.size() - 1, [&](std::size_t i) {
        return detail::kronrod21<T>(f, breakpoints[i], breakpoints[i + 1]);
      });

  for (;;) {
    const T value = detail::sum_values(panels);
    CompensatedSum err;
    for (const auto& p : panels) err.add(p.error);
    const double target =
        std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(value));
    out.value = value;
    out.error = err.value();
    out.intervals = panels.size();
    if (!std::isfinite(out.error)) return out;
    if (out.error <= target) {
      out.converged = true;
      return out;
    }
    if (panels.size() >= opt.max_intervals) return out;

    std::vector<std::size_t> split;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const auto& p = panels[i];
      if (p.error > panels[worst].error) worst = i;
      const double width = p.b - p.a;
      const bool resolvable =
          width > 64.0 * 2.2e-16 * std::max(std::fabs(p.a), std::fabs(p.b));
      if (resolvable && p.error > 0.5 * target * width / total_len) {
        split.push_back(i);
      }
    }
    if (split.empty()) {
      const auto& p = panels[worst];
      const double width = p.b - p.a;
      if (width <= 64.0 * 2.2e-16 * std::max(std::fabs(p.a), std::fabs(p.b))) {
        return out;
      }
      split.push_back(worst);
    }
    if (panels.size() + split.size() > opt.max_intervals) {
      split.resize(opt.max_intervals - panels.size());
      if (split.empty()) return out;
    }
    auto halves = parallel_map<std::array<Panel, 2>>(
        split.size(), [&](std::size_t k) {
          const auto& p = panels[split[k]];
          const double mid = 0.5 * (p.a + p.b);
          return std::array<Panel, 2>{detail::kronrod21<T>(f, p.a, mid),
                                      detail::kronrod21<T>(f, mid, p.b)};
        });
    std::vector<Panel> next;
    next.reserve(panels.size() + split.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (k < split.size() && split[k] == i) {
        next.push_back(halves[k][0]);
        next.push_back(halves[k][1]);
        ++k;
      } else {
        next.push_back(panels[i]);
      }
    }
    panels = std::move(next);
  }
}

template <class T, class F>
QuadResult<T> integrate(const F& f, double a, double b,
                        const QuadOptions& opt = {}) {
  const std::array<double, 2> bp = {a, b};
  return integrate<T>(f, std::span<const double>(bp), opt);
}

// Breakpoints on [a, b] such that each panel spans at most `max_phase`
// radians, where rate(s) bounds |d(phase)/ds| near s. The rate is sampled at
// both ends of a candidate panel and the larger value is used.
template <class R>
std::vector<double> plan_panels(double a, double b, const R& rate,
                                double max_phase = M_PI,
                                std::size_t max_panels = 200000) {
  std::vector<double> bp{a};
  double s = a;
  while (s < b && bp.size() < max_panels) {
    double h = max_phase / std::max(rate(s), 1e-300);
    for (int it = 0; it < 3; ++it) {
      const double r = std::max(rate(s), rate(std::min(s + h, b)));
      h = max_phase / std::max(r, 1e-300);
    }
    s = (s + h >= b || b - (s + h) < 1e-3 * h) ? b : s + h;
    bp.push_back(s);
  }
  if (bp.back() != b) bp.push_back(b);
  return bp;
}

}  // namespace explicitavg

#endif  // EXPLICITAVG_QUADRATURE_HPP_
