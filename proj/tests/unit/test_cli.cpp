// Copyright 2026 The ldpc-moments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <clocale>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "json.hpp"
#include "run.hpp"

using ldpc::cli::Cell;
using ldpc::cli::Command;
using ldpc::cli::RunConfig;
using ldpc::cli::Table;

namespace {

RunConfig bound_config(int l, int r, double lo, double hi, int steps) {
  RunConfig c;
  c.command = Command::bound;
  c.left = l;
  c.right = r;
  c.grid_min = lo;
  c.grid_max = hi;
  c.steps = steps;
  return c;
}

double number(const Cell& cell) { return std::get<double>(cell); }

std::string run_binary(const std::string& args, int* status) {
  const char* bin = std::getenv("LDPC_MOMENTS_BIN");
  if (!bin) return {};
  const auto out = std::filesystem::temp_directory_path() / "ldpc_cli_test_stdout.txt";
  const std::string cmd = std::string(bin) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  *status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Config, GridIncludesEndpoints) {
  const auto g = bound_config(3, 4, 0.1, 0.9, 5).grid();
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.front(), 0.1);
  EXPECT_DOUBLE_EQ(g[2], 0.5);
  EXPECT_DOUBLE_EQ(g.back(), 0.9);
}

TEST(Config, Validation) {
  auto c = bound_config(3, 6, 0.1, 0.9, 10);
  EXPECT_NO_THROW(ldpc::cli::validate(c));
  c.epsilon = 0.0;
  EXPECT_THROW(ldpc::cli::validate(c), ldpc::cli::UsageError);
  c = bound_config(3, 6, 0.5, 0.4, 10);
  EXPECT_THROW(ldpc::cli::validate(c), ldpc::cli::UsageError);
  c = bound_config(3, 6, 0.1, 0.9, 1);
  EXPECT_THROW(ldpc::cli::validate(c), ldpc::cli::UsageError);
  c = bound_config(6, 3, 0.1, 0.9, 10);
  EXPECT_THROW(ldpc::cli::validate(c), ldpc::cli::UsageError);
  RunConfig t;
  t.command = Command::table;
  t.pairs = ldpc::cli::parse_pairs("3:6,3:4");
  EXPECT_THROW(ldpc::cli::validate(t), ldpc::cli::UsageError);
  EXPECT_THROW(ldpc::cli::parse_pairs("3-6"), ldpc::cli::UsageError);
  EXPECT_THROW(ldpc::cli::parse_pairs("3:6,"), ldpc::cli::UsageError);
  EXPECT_EQ(ldpc::cli::parse_pairs("3:6,6:12").size(), 2u);
}

TEST(BoundCurve, HeaderAndHalfWeight) {
  const Table t = ldpc::cli::run_bound_curve(bound_config(3, 4, 0.2, 0.8, 7));
  const std::string csv = ldpc::cli::render(t, ldpc::cli::Format::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "abscissa,x,growth,delta,bound,cond1,cond2");
  ASSERT_EQ(t.rows.size(), 7u);
  EXPECT_DOUBLE_EQ(number(t.rows[3][0]), 0.5);
  EXPECT_NEAR(number(t.rows[3][t.column("bound")]), 1.0, 1e-6);
  EXPECT_EQ(t.status, ldpc::cli::kExitOk);
}

TEST(BoundCurve, MarkovRegime) {
  const Table t = ldpc::cli::run_bound_curve(bound_config(3, 6, 0.001, 0.02, 5));
  for (const auto& row : t.rows) {
    EXPECT_EQ(std::get<std::string>(row[t.column("bound")]), "markov");
    EXPECT_TRUE(std::holds_alternative<std::monostate>(row[t.column("delta")]));
    EXPECT_LT(number(row[t.column("growth")]), 0.0);
  }
}

TEST(BoundCurve, HigherDegreesConcentrateBetter) {
  const Table a = ldpc::cli::run_bound_curve(bound_config(3, 6, 0.3, 0.4, 2));
  const Table b = ldpc::cli::run_bound_curve(bound_config(6, 12, 0.3, 0.4, 2));
  EXPECT_GT(number(b.rows[0][4]), number(a.rows[0][4]));
}

TEST(BoundCurve, ConditionsPresentWithBound) {
  const Table t = ldpc::cli::run_bound_curve(bound_config(3, 6, 0.05, 0.95, 19));
  for (const auto& row : t.rows) {
    if (std::holds_alternative<bool>(row[5])) {
      const bool ok = std::get<bool>(row[5]) && std::get<bool>(row[6]);
      EXPECT_EQ(std::holds_alternative<double>(row[4]), ok);
    }
  }
}

TEST(Table, RateHalf) {
  RunConfig c;
  c.command = Command::table;
  c.pairs = ldpc::cli::parse_pairs("3:6,6:12,12:24,24:48");
  const Table t = ldpc::cli::run_table(c);
  const double targets[] = {0.740611, 0.963306, 0.999617};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(number(t.rows[i][t.column("bound")]), targets[i], 1e-3);
  }
  EXPECT_GE(number(t.rows[3][t.column("bound")]), 0.9999);
}

TEST(Table, RateQuarter) {
  RunConfig c;
  c.command = Command::table;
  c.pairs = ldpc::cli::parse_pairs("3:4,6:8,12:16");
  const Table t = ldpc::cli::run_table(c);
  const double targets[] = {0.667889, 0.989098, 0.999994};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(number(t.rows[i][t.column("bound")]), targets[i], 1e-3);
  }
}

TEST(Render, NumbersAndJson) {
  EXPECT_EQ(ldpc::cli::format_number(0.7406113021), "0.7406113021");
  EXPECT_EQ(ldpc::cli::format_number(1.0), "1");
  EXPECT_EQ(ldpc::cli::format_number(1.2345678e-9), "1.2345678e-09");
  Table t;
  t.columns = {"a", "b", "c", "d"};
  t.add_row({1.5, std::string("x,y"), {}, true});
  EXPECT_EQ(ldpc::cli::render(t, ldpc::cli::Format::csv), "a,b,c,d\n1.5,\"x,y\",,true\n");
  const auto doc = nlohmann::json::parse(ldpc::cli::render(t, ldpc::cli::Format::json));
  EXPECT_EQ(doc["rows"][0]["a"], 1.5);
  EXPECT_TRUE(doc["rows"][0]["c"].is_null());
  EXPECT_EQ(doc["columns"].size(), 4u);
}

TEST(Render, LocaleIndependent) {
  const char* prev = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = prev ? prev : "C";
  if (!std::setlocale(LC_NUMERIC, "de_DE.UTF-8") && !std::setlocale(LC_NUMERIC, "fr_FR.UTF-8")) {
    GTEST_SKIP() << "no comma-decimal locale installed";
  }
  const std::string s = ldpc::cli::format_number(0.5);
  std::setlocale(LC_NUMERIC, saved.c_str());
  EXPECT_EQ(s, "0.5");
}

TEST(Exact, SmallCase) {
  RunConfig c;
  c.command = Command::exact;
  c.n = 6;
  c.weight = 2;
  const Table t = ldpc::cli::run_exact(c);
  EXPECT_EQ(std::get<std::string>(t.rows[0][t.column("first_moment")]), "5910/1547");
}

TEST(Verify, SuitesPass) {
  for (const char* suite : {"closedform", "exact", "hayman", "endpoint", "locallimit"}) {
    RunConfig c;
    c.command = Command::verify;
    c.suite = suite;
    const Table t = ldpc::cli::run_verify(c);
    EXPECT_EQ(t.status, ldpc::cli::kExitOk) << suite;
    EXPECT_FALSE(t.rows.empty());
  }
}

TEST(Verify, SingleTermPolynomialIsSkipped) {
  RunConfig c;
  c.command = Command::verify;
  c.suite = "hayman";
  const Table t = ldpc::cli::run_verify(c);
  bool found = false;
  for (const auto& row : t.rows) {
    if (std::get<std::string>(row[1]) == "single_term") {
      found = true;
      EXPECT_EQ(std::get<std::string>(row[2]), "skip");
      EXPECT_EQ(std::get<std::string>(row[5]), "UNSUPPORTED_POLY");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Binary, ExitCodes) {
  if (!std::getenv("LDPC_MOMENTS_BIN")) GTEST_SKIP() << "binary path not provided";
  int status = -1;
  run_binary("bound --l 3 --r 6 --min 0.1 --max 0.4 --steps 3", &status);
  EXPECT_EQ(status, 0);
  run_binary("bound --l 3 --r 6 --epsilon 2", &status);
  EXPECT_EQ(status, 2);
  run_binary("bound --bogus", &status);
  EXPECT_EQ(status, 2);
  run_binary("verify --suite nothing", &status);
  EXPECT_EQ(status, 2);
  run_binary("table --pairs 3:6,3:4", &status);
  EXPECT_EQ(status, 2);
  const std::string out = run_binary("verify --suite closedform --format json", &status);
  EXPECT_EQ(status, 0);
  EXPECT_TRUE(nlohmann::json::accept(out));
  run_binary("exact --l 3 --r 6 --n 5 --weight 2", &status);
  EXPECT_EQ(status, 2);
}

TEST(Binary, ReproducibleFiles) {
  if (!std::getenv("LDPC_MOMENTS_BIN")) GTEST_SKIP() << "binary path not provided";
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "ldpc_cli_repro_a.csv";
  const auto b = dir / "ldpc_cli_repro_b.csv";
  int status = -1;
  for (const auto& p : {a, b}) {
    run_binary("mc --l 3 --r 6 --n 12 --weight 4 --samples 200 --seed 9 --out " + p.string(), &status);
    EXPECT_EQ(status, 0);
  }
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
  for (const auto& p : {a, b}) {
    run_binary("bound --l 3 --r 4 --steps 9 --format json --out " + p.string(), &status);
    EXPECT_EQ(status, 0);
  }
  EXPECT_EQ(slurp(a), slurp(b));
}
