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

// Complex special functions: log-Gamma, Gamma ratios, the incomplete Beta
// function with complex parameters, real dilogarithm and the two zeta
// log-derivative constants the explicit formulas need.

#ifndef EXPLICITAVG_SPECFUN_HPP_
#define EXPLICITAVG_SPECFUN_HPP_

#include <complex>
#include <cstdint>

#include "explicitavg/quadrature.hpp"

namespace explicitavg {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLog2Pi = 1.83787706640934548356;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// t^rho for real t > 0, as exp(rho log t).
inline cplx real_pow(double t, cplx rho) { return std::exp(rho * std::log(t)); }

// Principal branch of log Gamma. Throws DomainError at poles.
cplx log_gamma(cplx z);

// Gamma(r1) Gamma(r2) / Gamma(r1 + r2 + 1) through log-Gamma differences.
cplx gamma_ratio(cplx r1, cplx r2);

// B_z(a, b) = integral_0^z t^(a-1) (1-t)^(b-1) dt for 0 <= z <= 1 and
// Re a > 0. z = 1 requires Re b > 0. Throws DomainError outside the domain
// and AccuracyError when the tolerance cannot be met.
cplx inc_beta(double z, cplx a, cplx b, const QuadOptions& opt = {});

// |B_{1-eps}(a,b) + tail(eps) - B(a,b)| with eps = 1e-6, where the tail
// over [1-eps, 1] is taken from its two-term expansion. Re a, Re b > 0.
double complete_beta_consistency(cplx a, cplx b);

// integral_lo^hi t^p (t + shift)^(q-1) dt for 0 < lo < hi, shift >= 0.
cplx weighted_power_integral(double lo, double hi, double shift, cplx p,
                             cplx q, const QuadOptions& opt = {});

// Real dilogarithm for x <= 1.
double dilog(double x);

// integral_2^N log t / (2N - t) dt from its dilogarithm closed form, N > 2.
double log_over_linear_integral(std::int64_t N);
// The same integral by direct quadrature.
double log_over_linear_quadrature(std::int64_t N);

struct ZetaConstants {
  double zeta_log_deriv_at_0 = 0.0;
  double zeta_log_deriv_at_minus1 = 0.0;
};

// zeta'/zeta(0) = log 2pi. zeta'/zeta(-1) comes from the functional equation
// at s = -1 with zeta'(2) summed by Euler-Maclaurin.
const ZetaConstants& zeta_constants();

// -zeta'(2) = sum_n log n / n^2.
double minus_zeta_prime_2();

}  // namespace explicitavg

#endif  // EXPLICITAVG_SPECFUN_HPP_
