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

// Nontrivial zeta zero ordinates: loading, validation, truncation windows and
// conjugate-paired sums over zeros rho = 1/2 + i gamma.

#ifndef EXPLICITAVG_ZEROS_HPP_
#define EXPLICITAVG_ZEROS_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "explicitavg/errors.hpp"
#include "explicitavg/parallel.hpp"
#include "explicitavg/summation.hpp"

namespace explicitavg {

// (T/2pi) log(T/2pi) - T/2pi + 7/8.
double rvm_estimate(double T);

// Ordinates gamma > 0 in ascending order. Immutable once built.
class ZeroTable {
 public:
  // Validates: nonempty, strictly increasing, first ordinate > 14, and the
  // zero count agrees with rvm_estimate within 2 at every loaded height in
  // {50, 100, 500, height}. Throws ValidationError naming the check.
  static ZeroTable from_ordinates(std::vector<double> gammas,
                                  std::string source_id);

  std::span<const double> gammas() const { return gammas_; }
  const std::string& source_id() const { return source_id_; }
  double height() const { return gammas_.back(); }
  std::size_t size() const { return gammas_.size(); }

  // Number of ordinates <= T.
  std::size_t count_up_to(double T) const;

 private:
  ZeroTable() = default;
  std::vector<double> gammas_;
  std::string source_id_;
};

// One ordinate per line, '#' starts a comment line, blank lines ignored.
// Throws FormatError (with line) on unparsable input, ValidationError on
// invariant failure, and OutOfRange if the file cannot be opened.
ZeroTable load_zeros(const std::string& path);

// Path of the bundled 10,000-zero file.
std::string default_zeros_path();

// The ordinates gamma <= t_limit of a table.
class ZeroView {
 public:
  ZeroView() = default;
  ZeroView(std::span<const double> gammas, double t_limit)
      : gammas_(gammas), t_limit_(t_limit) {}

  std::span<const double> gammas() const { return gammas_; }
  std::size_t size() const { return gammas_.size(); }
  bool empty() const { return gammas_.empty(); }
  double t_limit() const { return t_limit_; }
  std::complex<double> rho(std::size_t i) const { return {0.5, gammas_[i]}; }

 private:
  std::span<const double> gammas_;
  double t_limit_ = 0.0;
};

// Throws InvalidArgument unless t_limit > 2 and InsufficientZeros when
// t_limit exceeds the table height.
ZeroView select(const ZeroTable& table, double t_limit);

namespace detail {

// Runs fn and tags DomainError / AccuracyError messages with the ordinate.
template <class Fn>
auto with_gamma_context(double gamma, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const AccuracyError& e) {
    throw AccuracyError(std::string(e.what()) + " [gamma=" +
                            std::to_string(gamma) + "]",
                        e.achieved_error());
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + " [gamma=" +
                      std::to_string(gamma) + "]");
  }
}

}  // namespace detail

// Sum over rho and conj(rho) of kernel, for kernels with
// kernel(conj rho) = conj(kernel(rho)): 2 Re sum_{gamma > 0} kernel(rho),
// accumulated in ascending gamma.
template <class K>
double zero_sum(const ZeroView& view, K&& kernel) {
  const auto terms = parallel_map<std::complex<double>>(
      view.size(), [&](std::size_t i) {
        return detail::with_gamma_context(
            view.gammas()[i], [&] { return std::complex<double>(kernel(view.rho(i))); });
      });
  CompensatedSum s;
  for (const auto& t : terms) s.add(t.real());
  return 2.0 * s.value();
}

// sum over gamma > 0 of kernel(rho) + kernel(conj rho), for kernels without
// conjugate symmetry. The imaginary part is returned as computed.
template <class K>
std::complex<double> zero_sum_unpaired(const ZeroView& view, K&& kernel) {
  const auto terms = parallel_map<std::complex<double>>(
      view.size(), [&](std::size_t i) {
        return detail::with_gamma_context(view.gammas()[i], [&] {
          const auto r = view.rho(i);
          return std::complex<double>(kernel(r)) +
                 std::complex<double>(kernel(std::conj(r)));
        });
      });
  CompensatedComplexSum s;
  for (const auto& t : terms) s.add(t);
  return s.value();
}

// Sum over all four sign combinations of (gamma1, gamma2) for a kernel with
// kernel(conj r1, conj r2) = conj(kernel(r1, r2)):
// 2 Re sum_{gamma1, gamma2 > 0} [kernel(r1, r2) + kernel(r1, conj r2)].
// Outer ascending gamma1, inner ascending gamma2.
template <class K>
double double_zero_sum(const ZeroView& outer, const ZeroView& inner,
                       K&& kernel) {
  if (outer.empty() || inner.empty()) return 0.0;
  const auto rows = parallel_map<double>(outer.size(), [&](std::size_t i) {
    return detail::with_gamma_context(outer.gammas()[i], [&] {
      const auto r1 = outer.rho(i);
      CompensatedSum s;
      for (std::size_t j = 0; j < inner.size(); ++j) {
        const auto r2 = inner.rho(j);
        s.add(std::complex<double>(kernel(r1, r2)).real());
        s.add(std::complex<double>(kernel(r1, std::conj(r2))).real());
      }
      return s.value();
    });
  });
  CompensatedSum total;
  for (double r : rows) total.add(r);
  return 2.0 * total.value();
}

// The same four-way sum with every term evaluated, for kernels without
// conjugate symmetry.
template <class K>
std::complex<double> double_zero_sum_unpaired(const ZeroView& outer,
                                              const ZeroView& inner,
                                              K&& kernel) {
  if (outer.empty() || inner.empty()) return 0.0;
  const auto rows = parallel_map<std::complex<double>>(
      outer.size(), [&](std::size_t i) {
        return detail::with_gamma_context(outer.gammas()[i], [&] {
          const auto r1 = outer.rho(i);
          CompensatedComplexSum s;
          for (std::size_t j = 0; j < inner.size(); ++j) {
            const auto r2 = inner.rho(j);
            for (auto a : {r1, std::conj(r1)}) {
              for (auto b : {r2, std::conj(r2)}) {
                s.add(std::complex<double>(kernel(a, b)));
              }
            }
          }
          return s.value();
        });
      });
  CompensatedComplexSum total;
  for (const auto& r : rows) total.add(r);
  return total.value();
}

}  // namespace explicitavg

#endif  // EXPLICITAVG_ZEROS_HPP_
