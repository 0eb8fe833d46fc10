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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "explicitavg/cli.hpp"
#include "explicitavg/zeros.hpp"

using namespace explicitavg;
using namespace explicitavg::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("parse a full command line") {
  const auto r = parse_args({"verify-goldbach", "--n", "50", "--t1", "500",
                             "--t2", "500", "--zeros", "z.txt"});
  REQUIRE(r.config);
  const auto& c = *r.config;
  CHECK(c.command == Command::kVerifyGoldbach);
  CHECK(c.n_values == std::vector<std::int64_t>{50});
  CHECK(c.t1 == 500.0);
  CHECK(c.t2 == 500.0);
  CHECK(c.zeros_path == "z.txt");
  CHECK(c.format == Format::kCsv);
  CHECK(c.needs_zeros());
}

TEST_CASE("parse rejects bad input with exit 2") {
  auto r = parse_args({"verify-goldbach", "--t1", "1"});
  CHECK_FALSE(r.config);
  CHECK(r.exit_code == kExitUsage);
  CHECK(r.message.find("T>2") != std::string::npos);

  CHECK(parse_args({"verify-goldbach", "--n", "50", "--bogus"}).exit_code ==
        kExitUsage);
  CHECK(parse_args({"frobnicate"}).exit_code == kExitUsage);
  CHECK(parse_args({"verify-goldbach"}).exit_code == kExitUsage);
  CHECK(parse_args({"verify-goldbach", "--n", "abc"}).exit_code == kExitUsage);
  CHECK(parse_args({"verify-goldbach", "--n", "2"}).exit_code == kExitUsage);
  CHECK(parse_args({"verify-tuples", "--n", "10", "--m", "11"}).exit_code ==
        kExitUsage);
  CHECK(parse_args({"psi-check", "--n", "10", "--m", "1"}).exit_code ==
        kExitUsage);
  CHECK(parse_args({"psi-check", "--n", "10", "--format", "xml"}).exit_code ==
        kExitUsage);
  CHECK(run_cli({"--t2", "2"}).code == kExitUsage);
}

TEST_CASE("help exits 0") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("--zeros") != std::string::npos);
}

TEST_CASE("selftest needs no zeros") {
  const auto r = parse_args({"selftest"});
  REQUIRE(r.config);
  CHECK_FALSE(r.config->needs_zeros());
  CHECK(r.config->n_values.empty());
}

TEST_CASE("ranges") {
  CHECK(expand_range("20..100:20") ==
        std::vector<std::int64_t>{20, 40, 60, 80, 100});
  CHECK(expand_range("3..5") == std::vector<std::int64_t>{3, 4, 5});
  CHECK(expand_range("7") == std::vector<std::int64_t>{7});
  CHECK_THROWS(expand_range("5..3"));
  CHECK_THROWS(expand_range("1..5:0"));
  const auto r = parse_args({"verify-tuples", "--n", "20", "--n", "50",
                             "--m", "0", "1", "N"});
  REQUIRE(r.config);
  CHECK(r.config->n_values == std::vector<std::int64_t>{20, 50});
  CHECK(r.config->m_values.size() == 3);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-2.5) == "-2.5");
  CHECK(format_number(1e20) == "1e+20");
  CHECK(format_number(3.14159265358979323) == "3.14159265358979");
  CHECK(format_number(123456789012345678.0) == "1.23456789012346e+17");
}

TEST_CASE("selftest command") {
  const auto r = run_cli({"selftest", "--no-timing"});
  CHECK(r.code == kExitPass);
  const auto l = lines(r.out);
  REQUIRE(l.size() > 5);
  CHECK(l[0] == csv_header());
  for (std::size_t i = 1; i < l.size(); ++i) {
    CHECK(l[i].rfind("selftest:", 0) == 0);
    CHECK(l[i].find(",true,0") != std::string::npos);
  }
}

TEST_CASE("missing zeros file exits 3") {
  const auto r = run_cli({"psi-check", "--n", "100", "--zeros",
                          "/nonexistent/zeros.txt"});
  CHECK(r.code == kExitZerosFile);
  CHECK(r.err.find("/nonexistent/zeros.txt") != std::string::npos);

  setenv("EXPLICITAVG_ZEROS", "/nonexistent/env.txt", 1);
  const auto e = run_cli({"psi-check", "--n", "100"});
  unsetenv("EXPLICITAVG_ZEROS");
  CHECK(e.code == kExitZerosFile);
  CHECK(e.err.find("/nonexistent/env.txt") != std::string::npos);

  const std::string bad = temp_path("ea_cli_bad.txt");
  std::ofstream(bad) << "14.1347\nnot-a-number\n";
  CHECK(run_cli({"psi-check", "--n", "100", "--zeros", bad}).code ==
        kExitZerosFile);
}

TEST_CASE("window above the table exits 4") {
  const auto r = run_cli({"psi-check", "--n", "100", "--t1", "20000"});
  CHECK(r.code == kExitZerosHeight);
  CHECK(r.err.find("required height 20000") != std::string::npos);
}

TEST_CASE("sieve override below the grid exits 2") {
  CHECK(run_cli({"psi-check", "--n", "100", "--nmax", "50"}).code ==
        kExitUsage);
}

TEST_CASE("psi-check rows") {
  const auto r = run_cli({"psi-check", "--n", "100", "250", "--t1", "1000",
                          "--no-timing"});
  CHECK(r.code == kExitPass);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[1].rfind("psi-check,100,0,1000,1000,", 0) == 0);
  CHECK(l[1].find(",rh,true,0") != std::string::npos);
}

TEST_CASE("verify-goldbach passes with zeros and fails without them") {
  const auto ok = run_cli({"verify-goldbach", "--n", "50", "--t1", "100",
                           "--t2", "100", "--no-timing"});
  CHECK(ok.code == kExitPass);
  CHECK(lines(ok.out).size() == 2);

  // T = 3 is below the first ordinate, so no zero terms are included.
  const auto bad = run_cli({"verify-goldbach", "--n", "50", "--t1", "3",
                            "--t2", "3"});
  CHECK(bad.code == kExitFail);
  CHECK(bad.out.find(",false,") != std::string::npos);
}

TEST_CASE("scan-conjecture reports value and value/N") {
  const auto r = run_cli({"scan-conjecture", "--n", "25", "50", "--t1", "100",
                          "--no-timing"});
  CHECK(r.code == kExitPass);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  // oracle column holds the value, formula column value / N.
  std::vector<std::string> f;
  std::istringstream in(l[2]);
  for (std::string c; std::getline(in, c, ',');) f.push_back(c);
  REQUIRE(f.size() == 12);
  CHECK(std::stod(f[6]) == doctest::Approx(std::stod(f[5]) / 50));
}

TEST_CASE("text format and output file") {
  const std::string path = temp_path("ea_cli_out.txt");
  const auto r = run_cli({"cesaro-check", "--n", "50", "100", "--k", "1",
                          "--format", "text", "--out", path});
  CHECK(r.code == kExitPass);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("PASS") != std::string::npos);
  CHECK(ss.str().find("cesaro-check") != std::string::npos);
}

TEST_CASE("interval-check") {
  const auto r = run_cli({"interval-check", "--n", "10..200:10", "--no-timing"});
  CHECK(r.code == kExitPass);
  CHECK(lines(r.out).size() == 21);
}

TEST_CASE("CSV is identical across runs and thread counts") {
  const std::vector<std::string> base = {"verify-tuples", "--n", "20",
                                         "--m", "0", "N", "--t1", "100",
                                         "--no-timing"};
  auto with_threads = [&](const char* n) {
    auto a = base;
    a.push_back("--threads");
    a.push_back(n);
    return run_cli(a);
  };
  const auto one = with_threads("1");
  const auto again = with_threads("1");
  const auto many = with_threads("8");
  CHECK(one.code == kExitPass);
  CHECK(one.out == again.out);
  CHECK(one.out == many.out);
}
