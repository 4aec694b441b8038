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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ldpc/params.hpp"

namespace ldpc::cli {

enum class Command { growth, bound, table, exact, mc, verify };
enum class Format { csv, json };

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Added to the smallest root when evaluating the tables; they list the
// one-sided limit from above.
inline constexpr double kMinAbscissaOffset = 1e-6;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::bound;
  Kind kind = Kind::weight;
  int left = 3;
  int right = 6;
  double epsilon = 0.95;
  double grid_min = 0.01;
  double grid_max = 0.99;
  int steps = 50;
  int n = 0;
  int weight = -1;  // --weight or --size
  long samples = 10000;
  std::uint64_t seed = 1;
  Format format = Format::csv;
  std::string out;  // empty: stdout
  std::vector<EnsembleParams> pairs;
  std::string suite;

  EnsembleParams params() const { return EnsembleParams(left, right); }
  // steps points from grid_min to grid_max inclusive.
  std::vector<double> grid() const;
};

// Throws UsageError.
void validate(const RunConfig& config);
std::vector<EnsembleParams> parse_pairs(const std::string& text);
Command parse_command(const std::string& text);
std::string_view to_string(Command command) noexcept;

// Empty cells print as nothing in CSV and as null in JSON.
using Cell = std::variant<std::monostate, std::string, double, long long, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  int status = kExitOk;

  void add_row(std::vector<Cell> row);
  std::size_t column(const std::string& name) const;
};

std::string format_number(double value);
std::string render(const Table& table, Format format);

Table run_growth(const RunConfig& config);
Table run_bound_curve(const RunConfig& config);
Table run_table(const RunConfig& config);
Table run_exact(const RunConfig& config);
Table run_mc(const RunConfig& config);
Table run_verify(const RunConfig& config);

// Validates, dispatches on config.command and writes the rendered table to
// config.out (or `out` when config.out is empty). Returns the exit status.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ldpc::cli
