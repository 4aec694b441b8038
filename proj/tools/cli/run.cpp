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

#include "run.hpp"

#include <fstream>
#include <ostream>

#include "ldpc/ensemble.hpp"
#include "ldpc/error.hpp"
#include "ldpc/exact.hpp"
#include "ldpc/first_moment.hpp"
#include "ldpc/second_moment.hpp"

namespace ldpc::cli {

namespace {

bool numerical(Errc code) {
  return code == Errc::no_convergence || code == Errc::variance_degenerate ||
         code == Errc::no_bracket || code == Errc::no_root || code == Errc::singular_b ||
         code == Errc::nonpositive_gf || code == Errc::internal_exponent_mismatch;
}

std::string error_cell(const Error& e) { return std::string(to_string(e.code())); }

std::string rational_text(const Rational& q) { return q.str(); }

}  // namespace

Table run_growth(const RunConfig& config) {
  const EnsembleParams params = config.params();
  Table t;
  t.columns = {"abscissa", "x", "growth", "b", "avg_count", "error"};
  for (double w : config.grid()) {
    try {
      const GrowthPoint gp = growth_point(params, config.kind, w);
      Cell count;
      if (config.n > 0) count = avg_count(params, config.kind, config.n, w).count;
      t.add_row({w, gp.saddle_x, gp.growth, gp.curvature_b, count, {}});
    } catch (const Error& e) {
      if (numerical(e.code())) t.status = kExitNumerical;
      t.add_row({w, {}, {}, {}, {}, error_cell(e)});
    }
  }
  return t;
}

Table run_bound_curve(const RunConfig& config) {
  const EnsembleParams params = config.params();
  Table t;
  t.columns = {"abscissa", "x", "growth", "delta", "bound", "cond1", "cond2"};
  for (double w : config.grid()) {
    std::vector<Cell> row = {w};
    try {
      const GrowthPoint gp = growth_point(params, config.kind, w);
      row.push_back(gp.saddle_x);
      row.push_back(gp.growth);
      if (gp.growth <= 0.0) {
        row.push_back({});
        row.push_back(std::string("markov"));
      } else {
        const ConcentrationReport rep = concentration(params, config.kind, w, config.epsilon);
        const bool ok = rep.condition1_ok && rep.condition2_ok;
        row.push_back(ok ? Cell(rep.delta) : Cell());
        row.push_back(ok ? Cell(rep.bound) : Cell());
        row.push_back(rep.condition1_ok);
        row.push_back(rep.condition2_ok);
      }
    } catch (const Error& e) {
      // The error code takes the bound field. Delta stays empty.
      if (numerical(e.code())) t.status = kExitNumerical;
      row.resize(3);
      row.push_back({});
      row.push_back(error_cell(e));
    }
    t.add_row(std::move(row));
  }
  return t;
}

Table run_table(const RunConfig& config) {
  Table t;
  t.columns = {"l", "r", "omega_min", "delta", "bound", "cond1", "cond2", "error"};
  for (const EnsembleParams& params : config.pairs) {
    std::vector<Cell> row = {static_cast<long long>(params.left()),
                             static_cast<long long>(params.right())};
    try {
      const double w0 = min_abscissa(params, config.kind);
      row.push_back(w0);
      const ConcentrationReport rep =
          concentration(params, config.kind, w0 + kMinAbscissaOffset, config.epsilon);
      const bool ok = rep.condition1_ok && rep.condition2_ok;
      row.push_back(ok ? Cell(rep.delta) : Cell());
      row.push_back(ok ? Cell(rep.bound) : Cell());
      row.push_back(rep.condition1_ok);
      row.push_back(rep.condition2_ok);
    } catch (const Error& e) {
      if (numerical(e.code())) t.status = kExitNumerical;
      row.resize(7);
      row.push_back(error_cell(e));
    }
    t.add_row(std::move(row));
  }
  return t;
}

Table run_exact(const RunConfig& config) {
  const EnsembleParams params = config.params();
  Table t;
  t.columns = {"l", "r", "kind", "n", "W", "first_moment", "first_moment_value",
               "second_moment", "second_moment_value"};
  const Rational m1 = exact_first_moment(params, config.n, config.weight, config.kind);
  const Rational m2 = exact_second_moment(params, config.n, config.weight, config.kind);
  t.add_row({static_cast<long long>(params.left()), static_cast<long long>(params.right()),
             std::string(to_string(config.kind)), static_cast<long long>(config.n),
             static_cast<long long>(config.weight), rational_text(m1), to_double(m1),
             rational_text(m2), to_double(m2)});
  return t;
}

Table run_mc(const RunConfig& config) {
  const EnsembleParams params = config.params();
  Table t;
  t.columns = {"l", "r", "kind", "n", "W", "samples", "seed", "mean", "variance", "halfwidth",
               "mean_sq", "variance_sq", "halfwidth_sq", "exact_mean", "exact_mean_sq"};
  const McMoments mc =
      mc_moments(params, config.n, config.weight, config.kind, config.samples, config.seed);
  const auto width = [](const MomentEstimate& e) {
    return e.degenerate ? Cell(std::string("undefined")) : Cell(e.halfwidth);
  };
  t.add_row({static_cast<long long>(params.left()), static_cast<long long>(params.right()),
             std::string(to_string(config.kind)), static_cast<long long>(config.n),
             static_cast<long long>(config.weight), static_cast<long long>(config.samples),
             std::to_string(config.seed), mc.count.mean, mc.count.variance, width(mc.count),
             mc.count_squared.mean, mc.count_squared.variance, width(mc.count_squared),
             to_double(exact_first_moment(params, config.n, config.weight, config.kind)),
             to_double(exact_second_moment(params, config.n, config.weight, config.kind))});
  return t;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Table table;
  try {
    validate(config);
    switch (config.command) {
      case Command::growth: table = run_growth(config); break;
      case Command::bound: table = run_bound_curve(config); break;
      case Command::table: table = run_table(config); break;
      case Command::exact: table = run_exact(config); break;
      case Command::mc: table = run_mc(config); break;
      case Command::verify: table = run_verify(config); break;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return numerical(e.code()) ? kExitNumerical : kExitUsage;
  }
  const std::string text = render(table, config.format);
  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write " << config.out << '\n';
      return kExitUsage;
    }
  }
  return table.status;
}

}  // namespace ldpc::cli
