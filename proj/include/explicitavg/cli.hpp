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

// Batch front end: argument parsing, command dispatch and report output.

#ifndef EXPLICITAVG_CLI_HPP_
#define EXPLICITAVG_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace explicitavg::cli {

enum class Command {
  kVerifyGoldbach,
  kVerifyTuples,
  kScanConjecture,
  kPsiCheck,
  kCesaroCheck,
  kIntervalCheck,
  kSelftest,
};

enum class Format { kCsv, kText };

const char* to_string(Command c);

// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitZerosFile = 3;
inline constexpr int kExitZerosHeight = 4;
inline constexpr int kExitRuntime = 5;

struct RunConfig {
  Command command = Command::kSelftest;
  std::vector<std::int64_t> n_values;
  std::vector<std::int64_t> m_values;
  double t1 = 1000.0;
  double t2 = 1000.0;
  // Empty means EXPLICITAVG_ZEROS, then the bundled file.
  std::string zeros_path;
  // Empty means standard output.
  std::string out_path;
  Format format = Format::kCsv;
  // Sieve size; 0 derives it from the grid.
  std::int64_t nmax = 0;
  // 0 means hardware concurrency.
  unsigned threads = 0;
  bool timing = true;
  // Cesaro order.
  double k = 1.0;

  bool needs_zeros() const;
};

struct ParseResult {
  std::optional<RunConfig> config;
  // Meaningful when config is empty: kExitPass for --help, else kExitUsage.
  int exit_code = kExitUsage;
  std::string message;
};

// args excludes the program name.
ParseResult parse_args(const std::vector<std::string>& args);

// Expands "a", "a..b" or "a..b:step". Throws InvalidArgument.
std::vector<std::int64_t> expand_range(const std::string& spec);

struct CsvRow {
  std::string command;
  std::int64_t n = 0;
  std::int64_t m = 0;
  double t1 = 0.0;
  double t2 = 0.0;
  double oracle = 0.0;
  double formula = 0.0;
  double residual = 0.0;
  double bound = 0.0;
  std::string bound_kind;
  bool pass = false;
  double wall_ms = 0.0;
  // Extra detail for the text format only.
  std::vector<std::string> notes;
};

// 15 significant digits, '.' decimal point, independent of locale.
std::string format_number(double v);

std::string csv_header();
std::string csv_line(const CsvRow& row);

// Runs the configured command and writes rows as they complete. Errors are
// reported on err and mapped to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full entry point: parse, open --out, run.
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace explicitavg::cli

#endif  // EXPLICITAVG_CLI_HPP_
