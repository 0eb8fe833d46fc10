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

#include "explicitavg/formulas.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <span>
#include <string>

#include "explicitavg/bound_constants.hpp"
#include "explicitavg/errors.hpp"
#include "explicitavg/quadrature.hpp"
#include "explicitavg/summation.hpp"

namespace explicitavg {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// log(1 - u^-2).
double ell(double u) { return std::log1p(-1.0 / (u * u)); }

// b^a for b >= 0 with 0^a = 0 (Re a > 0).
cplx pow0(double base, cplx a) {
  if (base == 0.0) return 0.0;
  return real_pow(base, a);
}

double max_gamma(const ZeroView& z) {
  return z.empty() ? 0.0 : z.gammas().back();
}

// 2 Re sum t^rho / rho over the window.
double fast_S(double t, std::span<const double> gammas) {
  const double lt = std::log(t);
  const double st = std::sqrt(t);
  double acc = 0.0;
  for (double g : gammas) {
    const double c = std::cos(g * lt);
    const double s = std::sin(g * lt);
    acc += (0.5 * c + g * s) / (0.25 + g * g);
  }
  return 2.0 * st * acc;
}

// 2 Re sum u^(rho-1) over the window.
double fast_P(double u, std::span<const double> gammas) {
  const double lu = std::log(u);
  double acc = 0.0;
  for (double g : gammas) acc += std::cos(g * lu);
  return 2.0 * acc / std::sqrt(u);
}

// sum over rho and conj(rho) of t^rho/rho, each term evaluated separately.
cplx unpaired_S(double t, std::span<const double> gammas) {
  const double lt = std::log(t);
  CompensatedComplexSum s;
  for (double g : gammas) {
    for (double sg : {g, -g}) {
      const cplx rho(0.5, sg);
      s.add(std::exp(rho * lt) / rho);
    }
  }
  return s.value();
}

cplx unpaired_P(double u, std::span<const double> gammas) {
  const double lu = std::log(u);
  CompensatedComplexSum s;
  for (double g : gammas) {
    for (double sg : {g, -g}) s.add(std::exp(cplx(-0.5, sg) * lu));
  }
  return s.value();
}

QuadOptions tight_options() {
  QuadOptions opt;
  opt.abs_tol = 1e-11;
  opt.rel_tol = 1e-11;
  return opt;
}

template <class T>
T checked(const QuadResult<T>& r, const char* what) {
  if (!r.converged) {
    throw AccuracyError(std::string(what) + ": tolerance not met (error " +
                            std::to_string(r.error) + ")",
                        r.error);
  }
  return r.value;
}

// integral_lo^hi f(t) dt for smooth real f with no oscillation.
template <class F>
double smooth_integral(const F& f, double lo, double hi, const char* what) {
  if (!(hi > lo)) return 0.0;
  return checked(integrate<double>(f, lo, hi, tight_options()), what);
}

// integral_lo^hi f(t) dt in s = log t with panels following `rate(t)`.
template <class T, class F, class R>
T log_panel_integral(const F& f, const R& rate, double lo, double hi,
                     const QuadOptions& opt, const char* what) {
  if (!(hi > lo)) return T{};
  auto g = [&f](double s) {
    const double t = std::exp(s);
    return T(f(t) * t);
  };
  auto r = [&rate](double s) { return rate(std::exp(s)); };
  const auto bp = plan_panels(std::log(lo), std::log(hi), r);
  return checked(integrate<T>(g, std::span<const double>(bp), opt), what);
}


}  // namespace

const char* to_string(BoundKind kind) {
  return kind == BoundKind::kRh ? "rh" : "unconditional";
}

// ---- FormulaBreakdown ------------------------------------------------------

void FormulaBreakdown::add(std::string name, cplx value, TermCategory category,
                           bool is_displayed) {
  term_ledger.push_back({std::move(name), value, category, is_displayed});
}

void FormulaBreakdown::finalize() {
  std::array<CompensatedSum, 7> cat;
  CompensatedSum re, im, disp, rem;
  for (const auto& e : term_ledger) {
    cat[static_cast<int>(e.category)].add(e.value.real());
    re.add(e.value.real());
    im.add(e.value.imag());
    (e.displayed ? disp : rem).add(e.value.real());
  }
  main_terms = cat[0].value();
  single_zero_terms = cat[1].value();
  double_zero_terms = cat[2].value();
  beta_correction_terms = cat[3].value();
  constant_terms = cat[4].value();
  log_dilog_terms = cat[5].value();
  lambda_terms = cat[6].value();
  total = re.value();
  total_imag = im.value();
  displayed = disp.value();
  remainder = rem.value();
}

cplx FormulaBreakdown::entry(const std::string& name) const {
  for (const auto& e : term_ledger) {
    if (e.name == name) return e.value;
  }
  throw InvalidArgument("no ledger entry named " + name);
}

// ---- zero sums -------------------------------------------------------------

double zero_sum_S(double x, const ZeroView& zeros) {
  return zero_sum(zeros, [x](cplx rho) { return real_pow(x, rho) / rho; });
}

double zero_sum_P(double x, const ZeroView& zeros) {
  return zero_sum(zeros, [x](cplx rho) { return real_pow(x, rho - 1.0); });
}

double zero_sum_Q(double x, const ZeroView& zeros) {
  return zero_sum(zeros, [x](cplx rho) {
    return real_pow(x, rho + 1.0) / (rho * (rho + 1.0));
  });
}

double trivial_zero_series(double x) {
  CompensatedSum s;
  const double inv2 = 1.0 / (x * x);
  double p = 1.0 / x;
  for (int r = 1; r < 1000; ++r) {
    const double term = p / (2.0 * r * (2.0 * r - 1.0));
    s.add(term);
    if (term < 1e-15) break;
    p *= inv2;
  }
  return s.value();
}

double psi1_truncated(double x, const ZeroView& zeros) {
  const auto& zc = zeta_constants();
  return 0.5 * x * x - zero_sum_Q(x, zeros) - x * zc.zeta_log_deriv_at_0 +
         zc.zeta_log_deriv_at_minus1 - trivial_zero_series(x);
}

double zero_sum_integral(double lo, double hi,
                         const std::function<double(double)>& weight,
                         const ZeroView& zeros) {
  if (!(hi > lo) || zeros.empty()) return 0.0;
  QuadOptions opt = tight_options();
  return zero_sum(zeros, [&](cplx rho) {
    const double g = std::fabs(rho.imag());
    const cplx v = log_panel_integral<cplx>(
        [&](double t) { return real_pow(t, rho) * weight(t); },
        [g](double) { return g + 1.0; }, lo, hi, opt, "zero_sum_integral");
    return v / rho;
  });
}

double zero_sum_integral_swapped(double lo, double hi,
                                 const std::function<double(double)>& weight,
                                 const ZeroView& zeros) {
  if (!(hi > lo) || zeros.empty()) return 0.0;
  const auto gammas = zeros.gammas();
  const double tmax = max_gamma(zeros);
  return log_panel_integral<double>(
      [&](double t) { return fast_S(t, gammas) * weight(t); },
      [tmax](double) { return tmax + 1.0; }, lo, hi, tight_options(),
      "zero_sum_integral_swapped");
}

// ---- psi ---------------------------------------------------------------------

TruncatedValue psi0_truncated(double x, const ZeroView& zeros) {
  if (!(x > 1.0)) throw InvalidArgument("psi0_truncated: requires x > 1");
  const double T = zeros.t_limit();
  TruncatedValue out;
  out.value = x - zero_sum_S(x, zeros) - zeta_constants().zeta_log_deriv_at_0 -
              0.5 * ell(x);
  double gap = 1.0;
  if (x != std::floor(x)) gap = std::min(x - std::floor(x), std::ceil(x) - x);
  const double l = std::log(T * x);
  out.bound = bounds::kPsi *
              (x * l * l / T + std::log(x) * std::min(1.0, x / (T * gap)));
  return out;
}

// ---- lemma -------------------------------------------------------------------

cplx lemma_oracle(const VonMangoldtTable& table, double x, double y,
                  cplx alpha) {
  const auto X = static_cast<std::int64_t>(std::floor(x));
  CompensatedComplexSum s;
  for (std::int64_t n : table.prime_powers()) {
    if (n > X) break;
    s.add(table.lambda(n) * pow0(1.0 - static_cast<double>(n) / y, alpha));
  }
  return s.value();
}

double m_factor(cplx alpha, double y, double x) {
  if (alpha.real() >= 1.0) return 1.0;
  return std::pow(1.0 - std::floor(x) / y, alpha.real() - 1.0);
}

cplx omega_term(cplx alpha, double y, double x) {
  if (!(x >= 3.0) || !(y >= x)) {
    throw InvalidArgument("omega_term: requires 3 <= x <= y");
  }
  const double X = std::floor(x);
  const cplx a = alpha + 1.0;
  auto B = [&a](double z) {
    if (z <= 0.0) return cplx(0.0);
    return inc_beta(z, a, 0.0);
  };
  const cplx lower = -pow0((y - 1.0) / y, alpha) * 0.5 *
                     (B((y - 2.0) / (y - 1.0)) - B((y - X) / (y - 1.0)));
  const cplx upper = -pow0((y + 1.0) / y, alpha) * 0.5 *
                     (B((y - 2.0) / (y + 1.0)) - B((y - X) / (y + 1.0)));
  const cplx centre = B((y - 2.0) / y) - B((y - X) / y);
  return lower + upper + centre;
}

double lemma_bound(cplx alpha, double y, double x, double T) {
  const double X = std::floor(x);
  const double l = std::log(X * T);
  return bounds::kLemma * (m_factor(alpha, y, x) * std::abs(alpha) * X * X *
                               l * l / (y * T) +
                           X * l * l / T);
}

FormulaBreakdown lemma_weighted_sum_explicit(double x, double y, cplx alpha,
                                             const ZeroView& zeros,
                                             const VonMangoldtTable& table,
                                             const LemmaOptions& opt) {
  if (!(alpha.real() > 0.0)) {
    throw DomainError("lemma_weighted_sum_explicit: requires Re alpha > 0");
  }
  if (!(x >= 3.0) || !(y >= x)) {
    throw InvalidArgument("lemma_weighted_sum_explicit: requires 3 <= x <= y");
  }
  const double X = std::floor(x);
  const auto Xi = static_cast<std::int64_t>(X);
  const bool real_alpha = alpha.imag() == 0.0;
  // Conjugate pairing is only valid when the kernel commutes with
  // conjugation, which needs a real alpha.
  auto sum = [&](auto kernel) -> cplx {
    if (real_alpha) return zero_sum(zeros, kernel);
    return zero_sum_unpaired(zeros, kernel);
  };
  const cplx w2 = pow0(1.0 - 2.0 / y, alpha);
  const cplx wX = pow0(1.0 - X / y, alpha);
  const cplx lg_alpha1 = log_gamma(alpha + 1.0);

  FormulaBreakdown b;
  b.add("elementary_block",
        y / (alpha + 1.0) *
            (pow0(1.0 - 2.0 / y, alpha + 1.0) - pow0(1.0 - X / y, alpha + 1.0)),
        TermCategory::kMain, true);
  b.add("two_term", 2.0 * w2, TermCategory::kMain, true);
  b.add("gamma_ratio_sum", -sum([&](cplx rho) {
          return std::exp(rho * std::log(y) + log_gamma(rho) + lg_alpha1 -
                          log_gamma(rho + 1.0 + alpha));
        }),
        TermCategory::kSingleZero, true);
  b.add("beta_corrections", alpha * sum([&](cplx rho) {
          const cplx head = inc_beta(2.0 / y, rho + 1.0, alpha);
          const double z = (y - X) / y;
          const cplx tail = z > 0.0 ? inc_beta(z, alpha, rho + 1.0) : 0.0;
          return real_pow(y, rho) / rho * (head + tail);
        }),
        TermCategory::kBetaCorrection, true);
  b.add("floor_zero_sum", -wX * zero_sum_S(X, zeros),
        TermCategory::kSingleZero, true);
  b.add("log_2pi", -zeta_constants().zeta_log_deriv_at_0 * w2,
        TermCategory::kConstant, true);
  b.add("log_three_quarters", -0.5 * std::log(0.75) * w2,
        TermCategory::kLogDilog, true);
  b.add("omega", opt.include_omega ? omega_term(alpha, y, x) : cplx(0.0),
        TermCategory::kBetaCorrection, true);
  b.add("lambda_floor", 0.5 * table.lambda(Xi) * wX, TermCategory::kLambda,
        true);
  b.finalize();
  return b;
}

// ---- Goldbach ------------------------------------------------------------------

FormulaBreakdown main_term_goldbach(std::int64_t N, const ZeroView& zeros,
                                    const VonMangoldtTable& table) {
  if (N <= 2) throw InvalidArgument("main_term_goldbach: requires N > 2");
  const double n = static_cast<double>(N);
  const auto& zc = zeta_constants();
  const double c0 = zc.zeta_log_deriv_at_0;
  FormulaBreakdown b;
  b.add("two_N_squared", 2.0 * n * n, TermCategory::kMain);
  b.add("zero_sum_N_rho_plus_1", -2.0 * n * zero_sum_S(n, zeros),
        TermCategory::kSingleZero);
  b.add("two_N_log_2pi", -2.0 * n * c0, TermCategory::kConstant);
  b.add("N_log_term", -n * ell(n), TermCategory::kLogDilog);
  b.add("N_lambda", n * table.lambda(N), TermCategory::kLambda);
  b.add("N_squared", n * n, TermCategory::kMain);
  b.add("psi1_zero_sum", -2.0 * zero_sum_Q(n, zeros),
        TermCategory::kSingleZero);
  b.add("psi1_log_2pi", -2.0 * n * c0, TermCategory::kConstant);
  b.add("psi1_log_deriv_minus1", 2.0 * zc.zeta_log_deriv_at_minus1,
        TermCategory::kConstant);
  b.add("trivial_zeros", -2.0 * trivial_zero_series(n), TermCategory::kMain);
  b.finalize();
  return b;
}

DoubleSumValue goldbach_double_sum(std::int64_t N, const ZeroView& outer,
                                   const ZeroView& inner,
                                   DoubleSumRoute route) {
  if (N <= 2) throw InvalidArgument("goldbach_double_sum: requires N > 2");
  DoubleSumValue out;
  if (outer.empty() || inner.empty()) return out;
  const double n = static_cast<double>(N);
  const double two_n = 2.0 * n;
  if (route == DoubleSumRoute::kPairwise) {
    const double log2n = std::log(two_n);
    const cplx v = double_zero_sum_unpaired(
        outer, inner, [&](cplx r1, cplx r2) {
          const cplx g = std::exp((r1 + r2) * log2n + log_gamma(r1) +
                                  log_gamma(r2) - log_gamma(r1 + r2 + 1.0));
          const cplx betas = inc_beta(1.0 / n, r2 + 1.0, r1) +
                             inc_beta(0.5, r1, r2 + 1.0);
          return g - std::exp((r1 + r2) * log2n) / r2 * betas;
        });
    out.value = v.real();
    out.imag_residue = v.imag();
    return out;
  }
  // integral_2^N S_inner(t) P_outer(2N - t) dt.
  const auto gi = inner.gammas();
  const auto go = outer.gammas();
  const double ti = max_gamma(inner);
  const double to = max_gamma(outer);
  auto rate = [=](double t) { return ti + to * t / (two_n - t) + 1.0; };
  out.value = log_panel_integral<double>(
      [&](double t) { return fast_S(t, gi) * fast_P(two_n - t, go); }, rate,
      2.0, n, QuadOptions{}, "goldbach_double_sum");
  return out;
}

FormulaBreakdown goldbach_avg_truncated(std::int64_t N, const ZeroView& t1,
                                        const ZeroView& t2,
                                        const VonMangoldtTable& table,
                                        const GoldbachOptions& opt) {
  if (N <= 2) throw InvalidArgument("goldbach_avg_truncated: requires N > 2");
  if (2 * N > table.n_max()) {
    throw OutOfRange("goldbach_avg_truncated: 2N exceeds the sieve size");
  }
  const double n = static_cast<double>(N);
  const auto& zc = zeta_constants();
  const double c0 = zc.zeta_log_deriv_at_0;
  const double c1 = zc.zeta_log_deriv_at_minus1;
  const double lamN = table.lambda(N);
  const double ellN = ell(n);

  const double S1N = zero_sum_S(n, t1);
  const double S2N = zero_sum_S(n, t2);

  FormulaBreakdown b;
  b.add("leading_two_N_squared", 2.0 * n * n, TermCategory::kMain, true);
  b.add("zero_sum_2N_minus_2", -2.0 * zero_sum_Q(2.0 * n - 2.0, t1),
        TermCategory::kSingleZero, true);
  b.add("double_sum_gamma_beta",
        2.0 * goldbach_double_sum(N, t1, t2, opt.route).value,
        TermCategory::kDoubleZero, true);
  b.add("product_S1_S2", 2.0 * S1N * S2N, TermCategory::kDoubleZero, true);
  b.add("square_S1", -2.0 * S1N * S1N, TermCategory::kDoubleZero, true);
  if (opt.displayed_only) {
    b.finalize();
    return b;
  }

  const double shift = c0 + 0.5 * ellN - 0.5 * lamN;
  const double R = S1N + shift;
  const double psi_hat = n - R;
  const double QN = zero_sum_Q(n, t1);
  const double S1_2N2 = zero_sum_S(2.0 * n - 2.0, t1);
  const double two_n = 2.0 * n;
  auto K = [two_n](double t) {
    const double u = two_n - t;
    return 1.0 / (u * (u - 1.0) * (u + 1.0));
  };

  b.add("square_S1_compensation", S1N * S1N, TermCategory::kDoubleZero);
  b.add("cross_S1_shift", -2.0 * S1N * shift, TermCategory::kSingleZero);
  b.add("shift_square", -shift * shift, TermCategory::kConstant);
  b.add("psi1_zero_sum_N", -2.0 * QN, TermCategory::kSingleZero);
  b.add("lemma_zero_sum_N", 2.0 * QN, TermCategory::kSingleZero);
  b.add("psi1_constants", -2.0 * n * c0 + 2.0 * c1, TermCategory::kConstant);
  b.add("trivial_zeros", -2.0 * trivial_zero_series(n), TermCategory::kMain);
  b.add("lemma_two_term", -4.0 * S1_2N2, TermCategory::kSingleZero);
  b.add("lemma_constants", (2.0 * c0 + std::log(0.75)) * S1_2N2,
        TermCategory::kConstant);
  b.add("omega_block", -2.0 * zero_sum(t1, [&](cplx rho) {
          return real_pow(two_n, rho) * omega_term(rho, two_n, n) / rho;
        }),
        TermCategory::kBetaCorrection);
  b.add("lambda_lemma", -lamN * S1N, TermCategory::kLambda);
  b.add("psi_constant", -2.0 * c0 * psi_hat, TermCategory::kConstant);
  b.add("log_boundary", -ellN * psi_hat, TermCategory::kLogDilog);
  b.add("log_t_kernel",
        -2.0 * smooth_integral([&](double t) { return t * K(t); }, 2.0, n,
                               "log_t_kernel"),
        TermCategory::kLogDilog);
  b.add("log_zero_kernel",
        2.0 * zero_sum_integral(2.0, n, K, t1), TermCategory::kLogDilog);
  b.add("log_const_kernel", c0 * (ell(two_n - 2.0) - ellN),
        TermCategory::kLogDilog);
  b.add("log_log_kernel",
        smooth_integral([&](double t) { return ell(t) * K(t); }, 2.0, n,
                        "log_log_kernel"),
        TermCategory::kLogDilog);
  b.add("lambda_square", 0.5 * lamN * lamN, TermCategory::kLambda);
  b.finalize();
  return b;
}

double goldbach_composite_bound(std::int64_t N, double T1, double T2,
                                BoundKind kind) {
  const double n = static_cast<double>(N);
  const double ln = std::log(n);
  const double G = kind == BoundKind::kRh ? std::sqrt(n) * ln * ln
                                          : n * std::exp(-std::sqrt(ln));
  const double a = std::log(n * T2);
  const double c = std::log(T1 * n);
  return bounds::kGoldbachComposite *
         (n * a * a * T1 * std::log(T1) * G / T2 + n * n * c * c / T1 + n);
}

VerificationReport goldbach_residual(std::int64_t N, const ZeroView& t1,
                                     const ZeroView& t2,
                                     const VonMangoldtTable& table) {
  const auto start = Clock::now();
  GoldbachOptions opt;
  opt.displayed_only = true;
  const auto b = goldbach_avg_truncated(N, t1, t2, table, opt);
  VerificationReport r;
  r.n = N;
  r.oracle_value = goldbach_avg_oracle(table, N);
  r.formula_value = b.displayed;
  r.residual = r.oracle_value - r.formula_value;
  r.bound = bounds::kGoldbachResidual * static_cast<double>(N);
  r.bound_kind = BoundKind::kUnconditional;
  r.pass = std::fabs(r.residual) <= r.bound;
  r.wall_ms = elapsed_ms(start);
  return r;
}

GoldbachVerification verify_goldbach(std::int64_t N, const ZeroView& t1,
                                     const ZeroView& t2,
                                     const VonMangoldtTable& table,
                                     BoundKind kind) {
  const auto start = Clock::now();
  GoldbachVerification v;
  v.breakdown = goldbach_avg_truncated(N, t1, t2, table);
  const double oracle = goldbach_avg_oracle(table, N);
  const double ms = elapsed_ms(start);

  auto& r = v.residual;
  r.n = N;
  r.oracle_value = oracle;
  r.formula_value = v.breakdown.displayed;
  r.residual = oracle - r.formula_value;
  r.bound = bounds::kGoldbachResidual * static_cast<double>(N);
  r.bound_kind = BoundKind::kUnconditional;
  r.pass = std::fabs(r.residual) <= r.bound;
  r.wall_ms = ms;

  auto& f = v.formula;
  f.n = N;
  f.oracle_value = oracle;
  f.formula_value = v.breakdown.total;
  f.residual = oracle - f.formula_value;
  f.bound = goldbach_composite_bound(N, t1.t_limit(), t2.t_limit(), kind);
  f.bound_kind = kind;
  f.pass = std::fabs(f.residual) <= f.bound;
  f.wall_ms = ms;
  return v;
}

DoubleSumValue conjecture_double_sum(std::int64_t N, const ZeroView& zeros) {
  if (N <= 2) throw InvalidArgument("conjecture_double_sum: requires N > 2");
  DoubleSumValue out;
  if (zeros.empty()) return out;
  const double n = static_cast<double>(N);
  const double two_n = 2.0 * n;
  const auto g = zeros.gammas();
  const double tmax = max_gamma(zeros);
  auto rate = [=](double t) { return tmax + tmax * t / (two_n - t) + 1.0; };
  const cplx v = log_panel_integral<cplx>(
      [&](double t) { return unpaired_S(t, g) * unpaired_P(two_n - t, g); },
      rate, 2.0, n, QuadOptions{}, "conjecture_double_sum");
  out.value = v.real();
  out.imag_residue = v.imag();
  return out;
}

double interval_zero_sum_bound(std::int64_t N, std::int64_t H,
                               const ZeroView& zeros) {
  if (H < 0) throw InvalidArgument("interval_zero_sum_bound: requires H >= 0");
  if (H == 0) return 0.0;
  const double n = static_cast<double>(N);
  const double h = static_cast<double>(H);
  const double value = -2.0 * zero_sum_Q(2.0 * n + 2.0 * h - 2.0, zeros) +
                       2.0 * zero_sum_Q(2.0 * n - 2.0, zeros);
  const double l = std::log(2.0 * n + 2.0 * h);
  return std::fabs(value) / (h * std::sqrt(n) * l * l);
}

bool goldbach_in_interval(const VonMangoldtTable& table, std::int64_t N,
                          std::int64_t H) {
  if (N < 1 || H < 0) {
    throw InvalidArgument("goldbach_in_interval: requires N >= 1, H >= 0");
  }
  if (2 * N + 2 * H > table.n_max()) {
    throw OutOfRange("goldbach_in_interval: 2N+2H exceeds the sieve size");
  }
  const auto pp = table.prime_powers();
  const auto lam = table.values();
  for (std::int64_t n = 2 * N; n <= 2 * N + 2 * H; n += 2) {
    for (std::int64_t a : pp) {
      if (2 * a > n) break;
      if (lam[n - a] > 0.0) return true;
    }
  }
  return false;
}

// ---- tuples --------------------------------------------------------------

double tuples_double_integral(std::int64_t N, std::int64_t m,
                              const ZeroView& zeros) {
  if (zeros.empty()) return 0.0;
  const double n = static_cast<double>(N);
  const double shift = static_cast<double>(m);
  const auto g = zeros.gammas();
  const double tmax = max_gamma(zeros);
  auto rate = [=](double t) { return tmax + tmax * t / (t + shift) + 1.0; };
  return log_panel_integral<double>(
      [&](double t) { return fast_S(t, g) * fast_P(t + shift, g); }, rate, 2.0,
      n, QuadOptions{}, "tuples_double_integral");
}

double tuples_double_pairwise(std::int64_t N, std::int64_t m,
                              const ZeroView& zeros) {
  const double n = static_cast<double>(N);
  const double shift = static_cast<double>(m);
  return double_zero_sum(zeros, zeros, [&](cplx r1, cplx r2) {
    return weighted_power_integral(2.0, n, shift, r2, r1) / r2;
  });
}

double tuples_truncation_allowance(std::int64_t N, std::int64_t M, double T) {
  const double n = static_cast<double>(N);
  const double nm = static_cast<double>(N + M);
  const double l = std::log(nm * T);
  return n * nm * l * l / T;
}

TuplesBreakdown tuples_avg_explicit(std::int64_t N, std::int64_t M,
                                    const ZeroView& zeros,
                                    const VonMangoldtTable& table) {
  if (N <= 2) throw InvalidArgument("tuples_avg_explicit: requires N > 2");
  if (M < 0 || M > N) {
    throw InvalidArgument("tuples_avg_explicit: requires 0 <= M <= N");
  }
  if (N + M > table.n_max()) {
    throw OutOfRange("tuples_avg_explicit: N+M exceeds the sieve size");
  }
  const double n = static_cast<double>(N);
  const double mm = static_cast<double>(M);
  const auto& zc = zeta_constants();
  const double c0 = zc.zeta_log_deriv_at_0;
  const double c1 = zc.zeta_log_deriv_at_minus1;
  const double lamN = table.lambda(N);
  const double ellN = ell(n);
  const double ind = M > 0 ? 1.0 : 0.0;
  const double ind_tilde = M > 0 ? 1.0 : 2.0;

  const double SN = zero_sum_S(n, zeros);
  const double SNM = zero_sum_S(n + mm, zeros);
  const double S2M = zero_sum_S(2.0 + mm, zeros);
  const double S2 = zero_sum_S(2.0, zeros);
  const double shift = c0 + 0.5 * ellN - 0.5 * lamN;
  const double psi_hat = n - SN - shift;
  const double DTM = M > 0 ? tuples_double_integral(N, M, zeros) : 0.0;
  // sum (N^(r1+r2) - 2^(r1+r2)) / (r2 (r1+r2)) in closed form.
  const double DT0 = double_zero_sum(zeros, zeros, [n](cplx r1, cplx r2) {
    const cplx e = r1 + r2;
    return (real_pow(n, e) - real_pow(2.0, e)) / (r2 * e);
  });

  auto K = [](double u) { return 1.0 / (u * (u - 1.0) * (u + 1.0)); };
  const auto g = zeros.gammas();
  const double tmax = max_gamma(zeros);
  auto LT = [&](double m) {
    if (zeros.empty()) return 0.0;
    return log_panel_integral<double>(
        [&](double t) { return ell(t) * fast_P(t + m, g); },
        [=](double t) { return tmax * t / (t + m) + 1.0; }, 2.0, n,
        tight_options(), "tuples_log_zero_integral");
  };
  auto kernel_sum = [&](double t) { return K(t + mm) + K(t); };

  TuplesBreakdown out;
  auto& b = out.breakdown;
  b.add("N_times_M", n * mm, TermCategory::kMain, true);
  b.add("zero_sum_Q_N", zero_sum_Q(n, zeros), TermCategory::kSingleZero, true);
  b.add("zero_sum_Q_N_plus_M", -zero_sum_Q(n + mm, zeros),
        TermCategory::kSingleZero, true);
  b.add("zero_sum_Q_2_plus_M", zero_sum_Q(2.0 + mm, zeros),
        TermCategory::kSingleZero, true);
  b.add("gated_double_M", -DTM * ind, TermCategory::kDoubleZero, true);
  b.add("gated_double_0", -DT0 * ind_tilde, TermCategory::kDoubleZero, true);
  b.add("product_S_N_S_N_plus_M", SN * SNM, TermCategory::kDoubleZero, true);
  b.add("lambda_pair", 0.5 * lamN * (SN - SNM), TermCategory::kLambda, true);

  b.add("zero_sum_Q_2", zero_sum_Q(2.0, zeros), TermCategory::kSingleZero);
  b.add("M_times_S_N", -mm * SN, TermCategory::kSingleZero);
  b.add("M_times_constants", -mm * (c0 + 0.5 * ellN) + 0.5 * mm * lamN,
        TermCategory::kConstant);
  b.add("square_S_N", -SN * SN, TermCategory::kDoubleZero);
  b.add("product_S_N_S_N", SN * SN, TermCategory::kDoubleZero);
  b.add("S_N_log_cross", -2.0 * SN * (c0 + 0.5 * ellN) +
                             0.5 * ellN * (SNM + SN),
        TermCategory::kSingleZero);
  b.add("shift_square", -shift * shift, TermCategory::kConstant);
  b.add("psi1_constants", 2.0 * n * c0 - 2.0 * c1, TermCategory::kConstant);
  b.add("trivial_zeros", 2.0 * trivial_zero_series(n), TermCategory::kMain);
  b.add("edge_zero_sums", -2.0 * (S2M + S2), TermCategory::kSingleZero);
  b.add("edge_constants", c0 * (S2M + S2), TermCategory::kConstant);
  b.add("log_zero_integrals", -0.5 * (LT(mm) + LT(0.0)),
        TermCategory::kLogDilog);
  b.add("psi_constant", -2.0 * c0 * psi_hat, TermCategory::kConstant);
  b.add("log_boundary", -0.5 * psi_hat * (ell(n + mm) + ellN),
        TermCategory::kLogDilog);
  b.add("log_kernel_elementary",
        smooth_integral(
            [&](double t) { return (t - c0 - 0.5 * ell(t)) * kernel_sum(t); },
            2.0, n, "log_kernel_elementary"),
        TermCategory::kLogDilog);
  b.add("log_kernel_zero_sum",
        -zero_sum_integral(2.0, n, kernel_sum, zeros),
        TermCategory::kLogDilog);
  b.finalize();

  out.gated_term_derived = -DTM * ind;
  out.gated_term_as_stated = DTM * ind;
  out.total_derived = b.total;
  out.total_as_stated = b.total + 2.0 * DTM * ind;
  return out;
}

TuplesVerification verify_tuples(std::int64_t N, std::int64_t M,
                                 const ZeroView& zeros,
                                 const VonMangoldtTable& table) {
  const auto start = Clock::now();
  TuplesVerification v;
  v.tuples = tuples_avg_explicit(N, M, zeros, table);
  const double oracle = tuples_avg_oracle(table, N, M);
  const double ms = elapsed_ms(start);
  const double n = static_cast<double>(N);
  const double ln = std::log(n);
  const double allowance =
      tuples_truncation_allowance(N, M, zeros.t_limit());

  auto& r = v.residual;
  r.n = N;
  r.m = M;
  r.oracle_value = oracle;
  r.formula_value = v.tuples.breakdown.displayed;
  r.residual = oracle - r.formula_value;
  r.bound = bounds::kTuples * std::sqrt(n) * static_cast<double>(M + 1) * ln *
                ln +
            allowance;
  r.bound_kind = BoundKind::kRh;
  r.pass = std::fabs(r.residual) <= r.bound;
  r.wall_ms = ms;

  auto& f = v.formula;
  f.n = N;
  f.m = M;
  f.oracle_value = oracle;
  f.formula_value = v.tuples.total_derived;
  f.residual = oracle - f.formula_value;
  f.bound = allowance;
  f.bound_kind = BoundKind::kRh;
  f.pass = std::fabs(f.residual) <= f.bound;
  f.wall_ms = ms;

  v.derived_order_passes = f.pass;
  v.stated_order_passes =
      std::fabs(oracle - v.tuples.total_as_stated) <= allowance;
  return v;
}

VerificationReport tuples_residual(std::int64_t N, std::int64_t M,
                                   const ZeroView& zeros,
                                   const VonMangoldtTable& table) {
  return verify_tuples(N, M, zeros, table).residual;
}

// ---- Cesaro --------------------------------------------------------------

namespace {

void check_cesaro(const VonMangoldtTable& table, std::int64_t N, double k) {
  if (!(k > 0.0) || k > 4.0) {
    throw InvalidArgument("cesaro: requires 0 < k <= 4");
  }
  if (N < 2 || N > table.n_max()) {
    throw OutOfRange("cesaro: N outside the sieve range");
  }
}

}  // namespace

double cesaro_avg_oracle(const VonMangoldtTable& table, std::int64_t N,
                         double k) {
  check_cesaro(table, N, k);
  const auto pp = table.prime_powers();
  const auto lam = table.values();
  CompensatedSum s;
  for (std::int64_t a : pp) {
    if (a + 2 > N) break;
    for (std::int64_t b : pp) {
      if (a + b > N) break;
      s.add(lam[a] * lam[b] * std::pow(static_cast<double>(N - a - b), k));
    }
  }
  return s.value() / std::tgamma(k + 1.0);
}

double cesaro_nested(const VonMangoldtTable& table, std::int64_t N, double k) {
  check_cesaro(table, N, k);
  const auto pp = table.prime_powers();
  const auto lam = table.values();
  const double n = static_cast<double>(N);
  CompensatedSum outer;
  for (std::int64_t a : pp) {
    if (a >= N) break;
    const double rest = static_cast<double>(N - a);
    CompensatedSum inner;
    for (std::int64_t b : pp) {
      if (b >= N - a) break;
      inner.add(lam[b] * std::pow(1.0 - static_cast<double>(b) / rest, k));
    }
    outer.add(lam[a] * std::pow(1.0 - static_cast<double>(a) / n, k) *
              inner.value());
  }
  return std::pow(n, k) / std::tgamma(k + 1.0) * outer.value();
}

double cesaro_constant(double k) {
  // Frozen on the grid k = 0.5, 1, ..., 4; between grid points the larger
  // neighbour is used.
  const double pos = (k - 0.5) / 0.5;
  if (pos <= 0.0) return bounds::kCesaro[0];
  if (pos >= 7.0) return bounds::kCesaro[7];
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  if (pos == std::floor(pos)) return bounds::kCesaro[lo];
  return std::max(bounds::kCesaro[lo], bounds::kCesaro[lo + 1]);
}

VerificationReport cesaro_main_term_check(const VonMangoldtTable& table,
                                          std::int64_t N, double k) {
  const auto start = Clock::now();
  VerificationReport r;
  r.n = N;
  const double n = static_cast<double>(N);
  r.oracle_value = cesaro_avg_oracle(table, N, k);
  r.formula_value = std::pow(n, k + 2.0) / std::tgamma(k + 3.0);
  r.residual = r.oracle_value - r.formula_value;
  r.bound = cesaro_constant(k) * std::pow(n, k + 1.0);
  r.bound_kind = BoundKind::kUnconditional;
  r.pass = std::fabs(r.residual) <= r.bound;
  r.wall_ms = elapsed_ms(start);
  return r;
}

}  // namespace explicitavg
