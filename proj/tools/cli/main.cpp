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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ldpc/params.hpp"
#include "run.hpp"

using ldpc::cli::Command;
using ldpc::cli::RunConfig;

namespace {

struct Flags {
  std::string kind = "weight";
  std::string format = "csv";
  std::string pairs;
  int size = -1;
};

void add_common(CLI::App* sub, RunConfig& c, Flags& f) {
  sub->add_option("--kind", f.kind, "weight or stopping")
      ->check(CLI::IsMember({"weight", "stopping"}));
  sub->add_option("--l", c.left, "variable degree");
  sub->add_option("--r", c.right, "check degree");
  sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "output file (default stdout)");
}

void add_grid(CLI::App* sub, RunConfig& c) {
  sub->add_option("--min", c.grid_min, "first abscissa");
  sub->add_option("--max", c.grid_max, "last abscissa");
  sub->add_option("--steps", c.steps, "grid points");
}

void add_count(CLI::App* sub, RunConfig& c, Flags& f) {
  sub->add_option("--n", c.n, "block length");
  sub->add_option("--weight", c.weight, "codeword weight");
  sub->add_option("--size", f.size, "stopping set size");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ensemble moments and concentration bounds for regular LDPC codes"};
  app.require_subcommand(1);
  RunConfig c;
  Flags f;

  std::map<CLI::App*, Command> commands;
  auto* growth = app.add_subcommand("growth", "growth rate of the average count");
  add_common(growth, c, f);
  add_grid(growth, c);
  growth->add_option("--n", c.n, "also report the average count at this length");
  commands[growth] = Command::growth;

  auto* bound = app.add_subcommand("bound", "concentration bound curve");
  add_common(bound, c, f);
  add_grid(bound, c);
  bound->add_option("--epsilon", c.epsilon, "relative deviation");
  commands[bound] = Command::bound;

  auto* table = app.add_subcommand("table", "smallest root and bound per ensemble");
  add_common(table, c, f);
  table->add_option("--pairs", f.pairs, "comma-separated L:R list")->required();
  table->add_option("--epsilon", c.epsilon, "relative deviation");
  commands[table] = Command::table;

  auto* exact = app.add_subcommand("exact", "exact first and second moments");
  add_common(exact, c, f);
  add_count(exact, c, f);
  commands[exact] = Command::exact;

  auto* mc = app.add_subcommand("mc", "Monte-Carlo moments over sampled graphs");
  add_common(mc, c, f);
  add_count(mc, c, f);
  mc->add_option("--samples", c.samples, "number of graphs");
  mc->add_option("--seed", c.seed, "base seed; sample k uses seed + k");
  commands[mc] = Command::mc;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, c, f);
  verify->add_option("--suite", c.suite, "hayman, locallimit, closedform, endpoint, exact, mc")
      ->required();
  verify->add_option("--samples", c.samples, "samples for the mc suite");
  verify->add_option("--seed", c.seed, "seed for the mc suite");
  commands[verify] = Command::verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ldpc::cli::kExitUsage;
  }

  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) c.command = cmd;
  }
  try {
    c.kind = ldpc::parse_kind(f.kind);
    c.format = f.format == "json" ? ldpc::cli::Format::json : ldpc::cli::Format::csv;
    if (f.size >= 0) c.weight = f.size;
    if (!f.pairs.empty()) c.pairs = ldpc::cli::parse_pairs(f.pairs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ldpc::cli::kExitUsage;
  }
  return ldpc::cli::execute(c, std::cout, std::cerr);
}
