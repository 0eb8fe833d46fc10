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

#include "explicitavg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "explicitavg/arithmetic.hpp"
#include "explicitavg/errors.hpp"
#include "explicitavg/formulas.hpp"
#include "explicitavg/parallel.hpp"
#include "explicitavg/selftest.hpp"
#include "explicitavg/zeros.hpp"

namespace explicitavg::cli {

namespace {

// Stands for "M = N" in --m lists.
constexpr std::int64_t kMEqualsN = -1;

const std::vector<std::pair<std::string, Command>>& command_names() {
  static const std::vector<std::pair<std::string, Command>> names = {
      {"verify-goldbach", Command::kVerifyGoldbach},
      {"verify-tuples", Command::kVerifyTuples},
      {"scan-conjecture", Command::kScanConjecture},
      {"psi-check", Command::kPsiCheck},
      {"cesaro-check", Command::kCesaroCheck},
      {"interval-check", Command::kIntervalCheck},
      {"selftest", Command::kSelftest},
  };
  return names;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) {
    throw InvalidArgument("not an integer: '" + s + "'");
  }
  return v;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

CsvRow row_from(const char* command, const VerificationReport& r, double t1,
                double t2) {
  CsvRow row;
  row.command = command;
  row.n = r.n;
  row.m = r.m;
  row.t1 = t1;
  row.t2 = t2;
  row.oracle = r.oracle_value;
  row.formula = r.formula_value;
  row.residual = r.residual;
  row.bound = r.bound;
  row.bound_kind = to_string(r.bound_kind);
  row.pass = r.pass;
  return row;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

class RowWriter {
 public:
  RowWriter(std::ostream& out, Format format, bool timing)
      : out_(out), format_(format), timing_(timing) {
    if (format_ == Format::kCsv) {
      out_ << csv_header() << '\n';
    } else {
      out_ << pad("command", 18) << pad("N", 7) << pad("M", 7)
           << pad("oracle", 22) << pad("formula", 22) << pad("residual", 22)
           << pad("bound", 22) << pad("kind", 14) << "result\n";
    }
    out_.flush();
  }

  void write(CsvRow row) {
    if (!timing_) row.wall_ms = 0.0;
    all_pass_ = all_pass_ && row.pass;
    ++rows_;
    if (format_ == Format::kCsv) {
      out_ << csv_line(row) << '\n';
    } else {
      out_ << pad(row.command, 18) << pad(std::to_string(row.n), 7)
           << pad(std::to_string(row.m), 7) << pad(format_number(row.oracle), 22)
           << pad(format_number(row.formula), 22)
           << pad(format_number(row.residual), 22)
           << pad(format_number(row.bound), 22) << pad(row.bound_kind, 14)
           << (row.pass ? "PASS" : "FAIL");
      if (timing_) out_ << "  " << format_number(std::round(row.wall_ms)) << " ms";
      out_ << '\n';
      for (const auto& note : row.notes) out_ << "    " << note << '\n';
    }
    out_.flush();
  }

  bool all_pass() const { return all_pass_; }
  std::size_t rows() const { return rows_; }

 private:
  std::ostream& out_;
  Format format_;
  bool timing_;
  bool all_pass_ = true;
  std::size_t rows_ = 0;
};

std::int64_t max_of(const std::vector<std::int64_t>& v) {
  std::int64_t best = 0;
  for (auto x : v) best = std::max(best, x);
  return best;
}

std::int64_t interval_h(std::int64_t N) {
  return static_cast<std::int64_t>(
      std::ceil(10.0 * std::log(std::log(static_cast<double>(N)))));
}

// Sieve size the command needs for its grid.
std::int64_t required_nmax(const RunConfig& c) {
  const std::int64_t n = max_of(c.n_values);
  std::int64_t m = 0;
  for (auto v : c.m_values) m = std::max(m, v == kMEqualsN ? n : v);
  switch (c.command) {
    case Command::kVerifyGoldbach:
    case Command::kScanConjecture:
    case Command::kCesaroCheck:
      return 2 * n + 2;
    case Command::kVerifyTuples:
      return n + m + 2;
    case Command::kPsiCheck:
      return n + 2;
    case Command::kIntervalCheck: {
      std::int64_t h = m;
      for (auto v : c.n_values) {
        if (v >= 3) h = std::max(h, interval_h(v));
      }
      return 2 * n + 2 * h + 2;
    }
    case Command::kSelftest:
      return 0;
  }
  return 0;
}

std::string resolve_zeros_path(const RunConfig& c) {
  if (!c.zeros_path.empty()) return c.zeros_path;
  if (const char* env = std::getenv("EXPLICITAVG_ZEROS"); env && *env) {
    return env;
  }
  return default_zeros_path();
}

int run_rows(const RunConfig& c, RowWriter& w, std::ostream& err) {
  using clock = std::chrono::steady_clock;

  if (c.command == Command::kSelftest) {
    const auto results = run_special_function_selftest();
    std::int64_t i = 0;
    for (const auto& r : results) {
      CsvRow row;
      row.command = "selftest:" + r.name;
      row.n = i++;
      row.t1 = c.t1;
      row.t2 = c.t2;
      row.formula = r.value;
      row.residual = r.value;
      row.bound = r.bound;
      row.bound_kind = "identity";
      row.pass = r.pass;
      row.wall_ms = r.wall_ms;
      w.write(row);
    }
    return w.all_pass() ? kExitPass : kExitFail;
  }

  std::int64_t nmax = required_nmax(c);
  if (c.nmax > 0) {
    if (c.nmax < nmax) {
      err << "error: --nmax " << c.nmax << " is below the " << nmax
          << " this grid needs\n";
      return kExitUsage;
    }
    nmax = c.nmax;
  }
  const VonMangoldtTable table = build_table(std::max<std::int64_t>(nmax, 16));

  std::optional<ZeroTable> zeros;
  ZeroView v1, v2;
  if (c.needs_zeros()) {
    const std::string path = resolve_zeros_path(c);
    try {
      zeros = load_zeros(path);
    } catch (const FormatError& e) {
      err << "error: zeros file " << path << " line " << e.line() << ": "
          << e.what() << '\n';
      return kExitZerosFile;
    } catch (const ValidationError& e) {
      err << "error: zeros file " << path << " failed check '" << e.check()
          << "': " << e.what() << '\n';
      return kExitZerosFile;
    } catch (const OutOfRange& e) {
      err << "error: cannot read zeros file " << path << ": " << e.what()
          << '\n';
      return kExitZerosFile;
    }
    v1 = select(*zeros, c.t1);
    if (c.command == Command::kVerifyGoldbach) v2 = select(*zeros, c.t2);
  }

  const char* name = to_string(c.command);
  for (const std::int64_t N : c.n_values) {
    switch (c.command) {
      case Command::kVerifyGoldbach: {
        const auto start = clock::now();
        const auto g = verify_goldbach(N, v1, v2, table, BoundKind::kRh);
        CsvRow row = row_from(name, g.residual, c.t1, c.t2);
        // The row passes only when the full formula also holds.
        row.pass = g.residual.pass && g.formula.pass;
        row.wall_ms = elapsed_ms(start);
        row.notes.push_back(
            "full formula " + format_number(g.formula.formula_value) +
            ", residual " + format_number(g.formula.residual) +
            ", composite bound " + format_number(g.formula.bound) +
            (g.formula.pass ? " (within)" : " (exceeded)"));
        w.write(row);
        break;
      }
      case Command::kVerifyTuples: {
        for (std::int64_t M0 : c.m_values) {
          const std::int64_t M = M0 == kMEqualsN ? N : M0;
          const auto start = clock::now();
          const auto t = verify_tuples(N, M, v1, table);
          CsvRow row = row_from(name, t.residual, c.t1, c.t1);
          row.pass = t.residual.pass && t.formula.pass;
          row.wall_ms = elapsed_ms(start);
          row.notes.push_back(
              "full formula residual " + format_number(t.formula.residual) +
              ", allowance " + format_number(t.formula.bound));
          row.notes.push_back(
              std::string("gated double term: derived order ") +
              (t.derived_order_passes ? "balances" : "does not balance") +
              ", stated order " +
              (t.stated_order_passes ? "balances" : "does not balance"));
          w.write(row);
        }
        break;
      }
      case Command::kScanConjecture: {
        const auto start = clock::now();
        const auto d = conjecture_double_sum(N, v1);
        CsvRow row;
        row.command = name;
        row.n = N;
        row.t1 = row.t2 = c.t1;
        row.oracle = d.value;
        row.formula = d.value / static_cast<double>(N);
        row.residual = d.imag_residue;
        row.bound = 1e-9 * std::max(1.0, std::fabs(d.value));
        row.bound_kind = "realness";
        row.pass = std::fabs(d.imag_residue) <= row.bound;
        row.wall_ms = elapsed_ms(start);
        w.write(row);
        break;
      }
      case Command::kPsiCheck: {
        const auto start = clock::now();
        const double x = static_cast<double>(N);
        const auto t = psi0_truncated(x, v1);
        CsvRow row;
        row.command = name;
        row.n = N;
        row.t1 = row.t2 = c.t1;
        row.oracle = psi0(table, x);
        row.formula = t.value;
        row.residual = row.oracle - t.value;
        row.bound = t.bound;
        row.bound_kind = to_string(BoundKind::kRh);
        row.pass = std::fabs(row.residual) <= row.bound;
        row.wall_ms = elapsed_ms(start);
        w.write(row);
        break;
      }
      case Command::kCesaroCheck: {
        const auto start = clock::now();
        const auto r = cesaro_main_term_check(table, N, c.k);
        CsvRow row = row_from(name, r, c.t1, c.t2);
        row.wall_ms = elapsed_ms(start);
        row.notes.push_back("k = " + format_number(c.k));
        w.write(row);
        break;
      }
      case Command::kIntervalCheck: {
        const std::int64_t H =
            c.m_values.empty() ? interval_h(N) : c.m_values.front();
        const auto start = clock::now();
        const bool found = goldbach_in_interval(table, N, H);
        CsvRow row;
        row.command = name;
        row.n = N;
        row.m = H;
        row.t1 = row.t2 = c.t1;
        row.oracle = found ? 1.0 : 0.0;
        row.formula = interval_zero_sum_bound(N, H, v1);
        row.residual = found ? 0.0 : 1.0;
        row.bound = 0.0;
        row.bound_kind = "exact";
        row.pass = found;
        row.wall_ms = elapsed_ms(start);
        w.write(row);
        break;
      }
      case Command::kSelftest:
        break;
    }
  }
  return w.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

const char* to_string(Command c) {
  for (const auto& [s, v] : command_names()) {
    if (v == c) return s.c_str();
  }
  return "unknown";
}

bool RunConfig::needs_zeros() const {
  return command != Command::kSelftest && command != Command::kCesaroCheck;
}

std::vector<std::int64_t> expand_range(const std::string& spec) {
  if (spec == "N" || spec == "n") return {kMEqualsN};
  const auto dots = spec.find("..");
  if (dots == std::string::npos) return {parse_int(spec)};
  const std::string a = spec.substr(0, dots);
  std::string rest = spec.substr(dots + 2);
  std::int64_t step = 1;
  if (const auto colon = rest.find(':'); colon != std::string::npos) {
    step = parse_int(rest.substr(colon + 1));
    rest = rest.substr(0, colon);
  }
  const std::int64_t lo = parse_int(a);
  const std::int64_t hi = parse_int(rest);
  if (step <= 0) throw InvalidArgument("range step must be positive");
  if (hi < lo) throw InvalidArgument("empty range '" + spec + "'");
  if ((hi - lo) / step > 10'000'000) {
    throw InvalidArgument("range '" + spec + "' is too long");
  }
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

ParseResult parse_args(const std::vector<std::string>& args) {
  ParseResult result;
  RunConfig c;
  std::string command, format = "csv";
  std::vector<std::string> n_specs, m_specs;
  bool no_timing = false;

  CLI::App app("Explicit-formula verification of Goldbach and prime-tuple "
               "averages against exact enumeration.",
               "explicitavg");
  std::vector<std::string> names;
  for (const auto& [s, v] : command_names()) names.push_back(s);
  app.add_option("command", command, "What to run")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--n", n_specs, "N values: integers or a..b:step ranges");
  app.add_option("--m", m_specs,
                 "M values (tuples) or H (interval-check); 'N' means M = N");
  app.add_option("--t1", c.t1, "Outer zero window T'");
  app.add_option("--t2", c.t2, "Inner zero window T''");
  app.add_option("--zeros", c.zeros_path, "Zero ordinate file");
  app.add_option("--out", c.out_path, "Write the report here");
  app.add_option("--format", format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  app.add_option("--nmax", c.nmax, "Sieve size override");
  app.add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  app.add_flag("--no-timing", no_timing, "Write 0 for wall_ms");
  app.add_option("--k", c.k, "Cesaro order")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.exit_code = kExitPass;
    result.message = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.message = std::string("error: ") + e.what() + "\n" + app.help();
    return result;
  }

  for (const auto& [s, v] : command_names()) {
    if (s == command) c.command = v;
  }
  c.format = format == "text" ? Format::kText : Format::kCsv;
  c.timing = !no_timing;

  try {
    for (const auto& s : n_specs) {
      for (auto v : expand_range(s)) {
        if (v == kMEqualsN) throw InvalidArgument("'N' is only valid in --m");
        c.n_values.push_back(v);
      }
    }
    for (const auto& s : m_specs) {
      for (auto v : expand_range(s)) c.m_values.push_back(v);
    }
  } catch (const InvalidArgument& e) {
    result.message = std::string("error: ") + e.what();
    return result;
  }

  if (!(c.t1 > 2.0) || !(c.t2 > 2.0)) {
    result.message = "error: windows must satisfy T>2 (got --t1 " +
                     format_number(c.t1) + ", --t2 " + format_number(c.t2) +
                     ")";
    return result;
  }
  if (c.command != Command::kSelftest && c.n_values.empty()) {
    result.message = "error: --n is required for " + command;
    return result;
  }
  for (auto n : c.n_values) {
    if (n < 3) {
      result.message = "error: N values must be >= 3";
      return result;
    }
  }
  if (c.command == Command::kVerifyTuples) {
    if (c.m_values.empty()) c.m_values.push_back(0);
    for (auto n : c.n_values) {
      for (auto m : c.m_values) {
        if (m != kMEqualsN && (m < 0 || m > n)) {
          result.message = "error: tuples need 0 <= M <= N (N=" +
                           std::to_string(n) + ", M=" + std::to_string(m) +
                           ")";
          return result;
        }
      }
    }
  } else if (c.command == Command::kIntervalCheck) {
    if (c.m_values.size() > 1 ||
        (!c.m_values.empty() && c.m_values.front() < 0)) {
      result.message = "error: interval-check takes at most one H >= 0";
      return result;
    }
  } else if (!c.m_values.empty()) {
    result.message = "error: --m only applies to verify-tuples and "
                     "interval-check";
    return result;
  }
  result.config = std::move(c);
  result.exit_code = kExitPass;
  return result;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto [p, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
  if (ec != std::errc()) return "nan";
  return std::string(buf, p);
}

std::string csv_header() {
  return "command,N,M,t1,t2,oracle,formula,residual,bound,bound_kind,pass,"
         "wall_ms";
}

std::string csv_line(const CsvRow& r) {
  std::string s;
  s += r.command;
  s += ',' + std::to_string(r.n);
  s += ',' + std::to_string(r.m);
  for (double v : {r.t1, r.t2, r.oracle, r.formula, r.residual, r.bound}) {
    s += ',' + format_number(v);
  }
  s += ',' + r.bound_kind;
  s += r.pass ? ",true" : ",false";
  s += ',' + format_number(r.wall_ms);
  return s;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const unsigned threads =
      config.threads > 0 ? config.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  set_worker_count(threads);
  try {
    RowWriter writer(out, config.format, config.timing);
    return run_rows(config, writer, err);
  } catch (const InsufficientZeros& e) {
    err << "error: " << e.what() << "\nrequired height "
        << format_number(e.required_height()) << ", available "
        << format_number(e.available_height()) << '\n';
    return kExitZerosHeight;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  const ParseResult parsed = parse_args(args);
  if (!parsed.config) {
    (parsed.exit_code == kExitPass ? out : err) << parsed.message << '\n';
    return parsed.exit_code;
  }
  const RunConfig& c = *parsed.config;
  if (c.out_path.empty()) return run(c, out, err);
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << c.out_path << " for writing\n";
    return kExitUsage;
  }
  return run(c, file, err);
}

}  // namespace explicitavg::cli
