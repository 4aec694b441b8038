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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include <fmt/format.h>
#include "json.hpp"

#include "run.hpp"

namespace ldpc::cli {

std::vector<double> RunConfig::grid() const {
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    g[i] = grid_min + (grid_max - grid_min) * i / (steps - 1);
  }
  g.back() = grid_max;
  return g;
}

void validate(const RunConfig& c) {
  if (!(c.epsilon > 0.0 && c.epsilon <= 1.0)) throw UsageError("--epsilon must lie in (0, 1]");
  if (c.command == Command::table) {
    if (c.pairs.empty()) throw UsageError("--pairs is required");
    for (const auto& p : c.pairs) {
      if (p.left() * c.pairs.front().right() != c.pairs.front().left() * p.right()) {
        throw UsageError("all --pairs must share one design rate");
      }
    }
    return;
  }
  if (c.command == Command::verify) {
    static const std::vector<std::string> suites = {"hayman", "locallimit", "closedform",
                                                    "endpoint", "exact", "mc"};
    if (std::find(suites.begin(), suites.end(), c.suite) == suites.end()) {
      throw UsageError("unknown --suite '" + c.suite + "'");
    }
    if (c.samples < 2) throw UsageError("--samples must be at least 2");
    return;
  }
  try {
    (void)c.params();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (c.command == Command::growth || c.command == Command::bound) {
    if (c.steps < 2) throw UsageError("--steps must be at least 2");
    if (!(c.grid_min < c.grid_max)) throw UsageError("--min must be below --max");
    if (!(c.grid_min > 0.0 && c.grid_max < 1.0)) {
      throw UsageError("grid must lie strictly inside (0, 1)");
    }
    return;
  }
  if (c.n <= 0) throw UsageError("--n is required");
  if (c.weight < 0 || c.weight > c.n) throw UsageError("--weight/--size must lie in [0, n]");
  if ((c.n * c.left) % c.right != 0) throw UsageError("n * l must be divisible by r");
  if (c.command == Command::mc && c.samples < 1) throw UsageError("--samples must be positive");
}

std::vector<EnsembleParams> parse_pairs(const std::string& text) {
  std::vector<EnsembleParams> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const std::size_t colon = item.find(':');
    int l = 0;
    int r = 0;
    bool ok = colon != std::string::npos;
    if (ok) {
      const char* b = item.data();
      auto [p1, e1] = std::from_chars(b, b + colon, l);
      auto [p2, e2] = std::from_chars(b + colon + 1, b + item.size(), r);
      ok = e1 == std::errc{} && e2 == std::errc{} && p1 == b + colon &&
           p2 == b + item.size();
    }
    if (!ok) throw UsageError("bad pair '" + item + "', expected L:R");
    try {
      out.emplace_back(l, r);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    pos = end + 1;
  }
  return out;
}

Command parse_command(const std::string& text) {
  for (Command c : {Command::growth, Command::bound, Command::table, Command::exact, Command::mc,
                    Command::verify}) {
    if (to_string(c) == text) return c;
  }
  throw UsageError("unknown command '" + text + "'");
}

std::string_view to_string(Command command) noexcept {
  switch (command) {
    case Command::growth: return "growth";
    case Command::bound: return "bound";
    case Command::table: return "table";
    case Command::exact: return "exact";
    case Command::mc: return "mc";
    case Command::verify: return "verify";
  }
  return "?";
}

void Table::add_row(std::vector<Cell> row) {
  row.resize(columns.size());
  rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column " + name);
  return static_cast<std::size_t>(it - columns.begin());
}

// fmt never consults the locale unless asked to with 'L'.
std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.10g}", value);
}

namespace {

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
      }
      return q + '"';
    }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return format_number(v);
      return v;
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string render(const Table& table, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
      rows.push_back(std::move(obj));
    }
    nlohmann::ordered_json doc = {{"columns", table.columns}, {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ldpc::cli
