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

// Truncated explicit formulas for Chebyshev sums, the weighted-sum lemma,
// the averaged Goldbach count and the averaged prime-tuple count, each
// assembled term by term into a ledger and compared with brute force.

#ifndef EXPLICITAVG_FORMULAS_HPP_
#define EXPLICITAVG_FORMULAS_HPP_

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "explicitavg/arithmetic.hpp"
#include "explicitavg/specfun.hpp"
#include "explicitavg/zeros.hpp"

namespace explicitavg {

enum class TermCategory {
  kMain,
  kSingleZero,
  kDoubleZero,
  kBetaCorrection,
  kConstant,
  kLogDilog,
  kLambda,
};

enum class BoundKind { kUnconditional, kRh };

const char* to_string(BoundKind kind);

struct LedgerEntry {
  std::string name;
  cplx value;
  TermCategory category = TermCategory::kMain;
  // True for the leading groups a formula displays; false for the remainder
  // (F for Goldbach, G for tuples).
  bool displayed = false;
};

struct FormulaBreakdown {
  double main_terms = 0.0;
  double single_zero_terms = 0.0;
  double double_zero_terms = 0.0;
  double beta_correction_terms = 0.0;
  double constant_terms = 0.0;
  double log_dilog_terms = 0.0;
  double lambda_terms = 0.0;
  double total = 0.0;
  // Imaginary part of the total; zero up to rounding for real formulas.
  double total_imag = 0.0;
  // Sums of the displayed and non-displayed ledger entries.
  double displayed = 0.0;
  double remainder = 0.0;
  std::vector<LedgerEntry> term_ledger;

  void add(std::string name, cplx value, TermCategory category,
           bool displayed = false);
  // Recomputes every aggregate from the ledger with compensated sums.
  void finalize();
  cplx complex_total() const { return {total, total_imag}; }
  // Value of a named entry; throws InvalidArgument if absent.
  cplx entry(const std::string& name) const;
};

struct VerificationReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  double oracle_value = 0.0;
  double formula_value = 0.0;
  double residual = 0.0;
  double bound = 0.0;
  BoundKind bound_kind = BoundKind::kRh;
  bool pass = false;
  double wall_ms = 0.0;
};

// ---- Chebyshev psi -------------------------------------------------------

struct TruncatedValue {
  double value = 0.0;
  double bound = 0.0;
};

// x - sum_rho x^rho / rho - log 2pi - log(1 - x^-2) / 2 over the window,
// with the bound kPsi (x log^2(Tx)/T + log x min(1, x/(T <x>))). <x> is
// bounded below by 1 for integers and by the distance to the nearest
// integer otherwise.
TruncatedValue psi0_truncated(double x, const ZeroView& zeros);

// ---- Weighted-sum lemma --------------------------------------------------

// sum_{n <= floor x} Lambda(n) (1 - n/y)^alpha.
cplx lemma_oracle(const VonMangoldtTable& table, double x, double y,
                  cplx alpha);

double m_factor(cplx alpha, double y, double x);

// The printed three-line incomplete Beta combination.
cplx omega_term(cplx alpha, double y, double x);

// M |alpha| X^2 log^2(XT) / (yT) + X log^2(XT) / T with X = floor x.
double lemma_bound(cplx alpha, double y, double x, double T);

struct LemmaOptions {
  bool include_omega = true;
};

// Every displayed term of the truncated lemma as a ledger. Requires
// 3 <= x <= y and Re alpha > 0.
FormulaBreakdown lemma_weighted_sum_explicit(double x, double y, cplx alpha,
                                             const ZeroView& zeros,
                                             const VonMangoldtTable& table,
                                             const LemmaOptions& opt = {});

// ---- Goldbach average ----------------------------------------------------

// 2 N psi(N) + 2 psi_1(N) in explicit-formula form.
FormulaBreakdown main_term_goldbach(std::int64_t N, const ZeroView& zeros,
                                    const VonMangoldtTable& table);

enum class DoubleSumRoute {
  // One integral of the product of two truncated zero sums.
  kFactorized,
  // Gamma ratios and incomplete Beta functions pair by pair.
  kPairwise,
};

// sum_{rho1 in outer} (2N)^rho1 [Gamma(rho1) sum_{rho2 in inner}
// (2N)^rho2 Gamma(rho2)/Gamma(rho1+rho2+1) - sum_{rho2} (2N)^rho2/rho2
// (B_{1/N}(rho2+1, rho1) + B_{1/2}(rho1, rho2+1))].
struct DoubleSumValue {
  double value = 0.0;
  double imag_residue = 0.0;
};
DoubleSumValue goldbach_double_sum(std::int64_t N, const ZeroView& outer,
                                   const ZeroView& inner,
                                   DoubleSumRoute route);

struct GoldbachOptions {
  DoubleSumRoute route = DoubleSumRoute::kFactorized;
  // Skip the F ledger and assemble only the displayed groups.
  bool displayed_only = false;
};

// Displayed groups of the truncated Goldbach formula plus the F ledger.
FormulaBreakdown goldbach_avg_truncated(std::int64_t N, const ZeroView& t1,
                                        const ZeroView& t2,
                                        const VonMangoldtTable& table,
                                        const GoldbachOptions& opt = {});

// kGoldbachComposite (N log^2(N T2) T1 log T1 G(N) / T2 + N^2 log^2(T1 N)/T1
// + N) with G(N) = N exp(-sqrt(log N)) or sqrt(N) log^2 N.
double goldbach_composite_bound(std::int64_t N, double T1, double T2,
                                BoundKind kind);

// residual = oracle - displayed groups, pass iff |residual| <=
// kGoldbachResidual N.
VerificationReport goldbach_residual(std::int64_t N, const ZeroView& t1,
                                     const ZeroView& t2,
                                     const VonMangoldtTable& table);

struct GoldbachVerification {
  FormulaBreakdown breakdown;
  // Leading groups only, against kGoldbachResidual N.
  VerificationReport residual;
  // Displayed groups plus F, against the composite bound.
  VerificationReport formula;
};

GoldbachVerification verify_goldbach(std::int64_t N, const ZeroView& t1,
                                     const ZeroView& t2,
                                     const VonMangoldtTable& table,
                                     BoundKind kind);

// ---- Conjectured double sum and short intervals ---------------------------

DoubleSumValue conjecture_double_sum(std::int64_t N, const ZeroView& zeros);

// |-2 Q(2N+2H-2) + 2 Q(2N-2)| / (H sqrt(N) log^2(2N+2H)) with
// Q(u) = sum_rho u^(rho+1) / (rho (rho+1)). Zero for H = 0.
double interval_zero_sum_bound(std::int64_t N, std::int64_t H,
                               const ZeroView& zeros);

// True iff some even n in [2N, 2N+2H] has r_G(n) > 0.
bool goldbach_in_interval(const VonMangoldtTable& table, std::int64_t N,
                          std::int64_t H);

// ---- Prime tuples --------------------------------------------------------

struct TuplesBreakdown {
  FormulaBreakdown breakdown;
  // Value of the 1(M)-gated double term under the two printed orders of
  // the incomplete Beta difference.
  double gated_term_derived = 0.0;
  double gated_term_as_stated = 0.0;
  // Full formula totals under each ordering.
  double total_derived = 0.0;
  double total_as_stated = 0.0;
};

// Throws InvalidArgument if M > N or M < 0.
TuplesBreakdown tuples_avg_explicit(std::int64_t N, std::int64_t M,
                                    const ZeroView& zeros,
                                    const VonMangoldtTable& table);

// integral_2^N S(t) P(t+m) dt with S(t) = sum t^rho/rho and
// P(u) = sum u^(rho-1), both over the window.
double tuples_double_integral(std::int64_t N, std::int64_t m,
                              const ZeroView& zeros);
// The same quantity pair by pair through weighted_power_integral.
double tuples_double_pairwise(std::int64_t N, std::int64_t m,
                              const ZeroView& zeros);

// Allowance for truncating the untruncated tuple formula at height T:
// N (N+M) log^2((N+M) T) / T.
double tuples_truncation_allowance(std::int64_t N, std::int64_t M, double T);

// residual = oracle - displayed groups, pass iff |residual| <=
// kTuples sqrt(N) (M+1) log^2 N + allowance.
VerificationReport tuples_residual(std::int64_t N, std::int64_t M,
                                   const ZeroView& zeros,
                                   const VonMangoldtTable& table);

struct TuplesVerification {
  TuplesBreakdown tuples;
  // Leading groups only, against kTuples sqrt(N)(M+1) log^2 N + allowance.
  VerificationReport residual;
  // Displayed groups plus G under the derived ordering, against the
  // truncation allowance.
  VerificationReport formula;
  // Whether the full formula stays within the allowance under each order.
  bool derived_order_passes = false;
  bool stated_order_passes = false;
};

TuplesVerification verify_tuples(std::int64_t N, std::int64_t M,
                                 const ZeroView& zeros,
                                 const VonMangoldtTable& table);

// ---- Cesaro weights ------------------------------------------------------

// (1/Gamma(k+1)) sum_{n <= N} r_G(n) (N-n)^k by enumeration.
double cesaro_avg_oracle(const VonMangoldtTable& table, std::int64_t N,
                         double k);
// The same sum in nested form N^k/Gamma(k+1) sum_n Lambda(n)(1-n/N)^k
// sum_{m < N-n} Lambda(m) (1 - m/(N-n))^k.
double cesaro_nested(const VonMangoldtTable& table, std::int64_t N, double k);

double cesaro_constant(double k);

// residual = oracle - N^(k+2)/Gamma(k+3), pass iff |residual| <=
// cesaro_constant(k) N^(k+1).
VerificationReport cesaro_main_term_check(const VonMangoldtTable& table,
                                          std::int64_t N, double k);

// ---- Zero sums of integrals ----------------------------------------------

// sum_rho (1/rho) integral_lo^hi t^rho w(t) dt, one quadrature per zero.
double zero_sum_integral(double lo, double hi,
                         const std::function<double(double)>& weight,
                         const ZeroView& zeros);
// integral_lo^hi (sum_rho t^rho / rho) w(t) dt.
double zero_sum_integral_swapped(double lo, double hi,
                                 const std::function<double(double)>& weight,
                                 const ZeroView& zeros);

// Truncated zero sums used throughout, real by conjugate pairing.
// S(x) = sum x^rho/rho, P(x) = sum x^(rho-1), Q(x) = sum x^(rho+1)/(rho(rho+1)).
double zero_sum_S(double x, const ZeroView& zeros);
double zero_sum_P(double x, const ZeroView& zeros);
double zero_sum_Q(double x, const ZeroView& zeros);

// sum_{r >= 1} x^(1-2r) / (2r (2r-1)), the trivial-zero part of psi_1,
// summed until terms drop below 1e-15.
double trivial_zero_series(double x);

// psi_1(x) from its explicit formula over the window.
double psi1_truncated(double x, const ZeroView& zeros);

}  // namespace explicitavg

#endif  // EXPLICITAVG_FORMULAS_HPP_
