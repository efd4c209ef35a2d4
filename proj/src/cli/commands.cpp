// Copyright 2026 The qdrate Authors
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

#include "qdrate/commands.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <variant>

#include "qdrate/observables.hpp"
#include "qdrate/solver.hpp"

namespace qdrate {

using nlohmann::json;

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::optional<SweepAxis> parse_sweep_axis(std::string_view name) {
  if (name == "regime") return SweepAxis::regime;
  if (name == "gamma0p") return SweepAxis::gamma0p;
  if (name == "epsilon") return SweepAxis::epsilon;
  if (name == "deltaU") return SweepAxis::deltaU;
  return std::nullopt;
}

namespace {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::json) {
      json doc{{"columns", columns}, {"rows", json::array()}};
      for (const auto& row : rows) {
        json r = json::array();
        for (const auto& c : row) {
          if (const double* x = std::get_if<double>(&c)) {
            r.push_back(std::isfinite(*x) ? json(*x) : json(nullptr));
          } else {
            r.push_back(std::get<std::string>(c));
          }
        }
        doc["rows"].push_back(std::move(r));
      }
      out << doc.dump(1) << '\n';
      return;
    }
    for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        out << (k ? "," : "");
        if (const double* x = std::get_if<double>(&row[k])) {
          out << format_number(*x);
        } else {
          out << std::get<std::string>(row[k]);
        }
      }
      out << '\n';
    }
  }
};

std::string coherence_column(const Scenario& s) {
  const auto& names = s.partition.reduced_labels;
  return "abs_sigma_bar_" + names.at(s.coherence_pair->first) + names.at(s.coherence_pair->second);
}

// Maps exceptions to exit codes with a one-line diagnostic.
template <typename Fn>
int guarded(std::ostream& err, Fn fn) {
  try {
    return fn();
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DegenerateKernelError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const ConvergenceError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  }
}

std::size_t initial_index(const RunSpec& spec, const StateSpace& space) {
  if (spec.initial_state.empty()) return 0;
  const auto idx = space.find(std::string_view(spec.initial_state));
  if (!idx) throw ModelError("no state labelled \"" + spec.initial_state + "\"");
  return *idx;
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

}  // namespace

int cmd_run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Scenario s = resolve_scenario(spec);
    const Liouvillian L = resolve_liouvillian(spec);
    const DensityMatrix sigma0 = DensityMatrix::pure(L.dim(), initial_index(spec, s.model.space));

    Trajectory tr;
    if (spec.solver.t_end > 0.0) {
      EvolveOptions opt;
      opt.rel_tol = spec.solver.rel_tol;
      opt.abs_tol = spec.solver.abs_tol;
      opt.output_grid = uniform_grid(spec.solver.t_end, spec.solver.grid_points);
      tr = evolve(L, sigma0, spec.solver.t_end, opt);
    } else {
      tr.times = {0.0};
      tr.states = {sigma0};
    }
    const auto qd = accumulated_charge(tr, s.detector);
    const auto qs = accumulated_charge(tr, s.system);

    Table table;
    table.columns = {"t", "I_D", "I_S", "Q_D", "Q_S"};
    for (std::size_t k = 0; k < s.model.size(); ++k) table.columns.push_back("p_" + s.model.space.label(k));
    if (s.coherence_pair) table.columns.push_back(coherence_column(s));

    for (std::size_t k = 0; k < tr.size(); ++k) {
      const DensityMatrix& st = tr.states[k];
      std::vector<Cell> row{tr.times[k], current(st, s.detector), current(st, s.system), qd[k], qs[k]};
      for (std::size_t i = 0; i < st.dim(); ++i) row.emplace_back(st.population(i));
      if (s.coherence_pair) {
        const Eigen::MatrixXcd bar = trace_out_detector(st.matrix(), s.partition);
        row.emplace_back(std::abs(bar(s.coherence_pair->first, s.coherence_pair->second)));
      }
      table.rows.push_back(std::move(row));
    }
    table.write(out, spec.output.format);
    return kExitOk;
  });
}

int cmd_steady(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Scenario s = resolve_scenario(spec);
    const Liouvillian L = resolve_liouvillian(spec);
    const DensityMatrix st = steady_state_direct(L);
    const double gap = spectral_gap(L);
    EvolveOptions opt;
    opt.rel_tol = std::min(spec.solver.rel_tol, 1e-11);
    opt.abs_tol = std::min(spec.solver.abs_tol, 1e-13);
    const DensityMatrix check =
        steady_state_by_integration(L, DensityMatrix::pure(L.dim(), initial_index(spec, s.model.space)), gap, opt);

    json doc;
    doc["scenario"] = to_string(spec.scenario);
    if (spec.scenario == ScenarioChoice::double_dot) doc["regime"] = to_string(spec.regime);
    doc["mode"] = to_string(spec.mode);
    doc["I_D"] = current(st, s.detector);
    doc["I_S"] = current(st, s.system);
    json occ = json::object();
    for (std::size_t k = 0; k < st.dim(); ++k) occ[s.model.space.label(k)] = st.population(k);
    doc["occupancies"] = occ;

    const Eigen::MatrixXcd bar = trace_out_detector(st.matrix(), s.partition);
    json red = json::object();
    json coh = json::array();
    const auto& names = s.partition.reduced_labels;
    for (std::size_t i = 0; i < names.size(); ++i) {
      red[names[i]] = bar(i, i).real();
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        coh.push_back({{"states", {names[i], names[j]}},
                       {"re", bar(i, j).real()},
                       {"im", bar(i, j).imag()},
                       {"abs", std::abs(bar(i, j))}});
      }
    }
    doc["reduced_occupancies"] = red;
    doc["coherences"] = coh;
    doc["residual"] = relative_residual(L, st);
    doc["spectral_gap"] = gap;
    doc["cross_check"] = {{"method", "integration"}, {"max_distance", st.max_distance(check)}};
    out << doc.dump(1) << '\n';
    return kExitOk;
  });
}

int cmd_sweep(const RunSpec& spec, SweepAxis axis, const std::vector<std::string>& values, unsigned jobs,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (spec.scenario != ScenarioChoice::double_dot) {
      throw ModelError("sweeps are defined for the double_dot scenario");
    }
    if (values.empty()) throw ModelError("sweep grid is empty");

    std::vector<RunSpec> points;
    for (const auto& v : values) {
      RunSpec p = spec;
      if (axis == SweepAxis::regime) {
        const auto r = parse_regime(v);
        if (!r) throw ModelError("unknown regime \"" + v + "\" (allowed: blocked, partial, open)");
        p.regime = *r;
      } else {
        errno = 0;
        char* end = nullptr;
        const double x = std::strtod(v.c_str(), &end);
        if (v.empty() || *end != '\0' || errno != 0 || !std::isfinite(x)) {
          throw ModelError("sweep value \"" + v + "\" is not a number");
        }
        if (axis == SweepAxis::gamma0p) {
          p.params.gamma0p = p.params.gamma0pp = x;
        } else if (axis == SweepAxis::epsilon) {
          p.params.epsilon = x;
        } else {
          p.params.deltaU = x;
        }
        p.params.validate();
      }
      points.push_back(std::move(p));
    }

    struct Row {
      double is = NAN, id = NAN, coherence = NAN;
      std::string status = "ok";
    };
    const auto rows = ordered_parallel_map<Row>(points.size(), jobs, [&](std::size_t k) {
      Row r;
      try {
        const Scenario s = resolve_scenario(points[k]);
        const DensityMatrix st = steady_state_direct(resolve_liouvillian(points[k]));
        r.is = current(st, s.system);
        r.id = current(st, s.detector);
        const Eigen::MatrixXcd bar = trace_out_detector(st.matrix(), s.partition);
        r.coherence = std::abs(bar(s.coherence_pair->first, s.coherence_pair->second));
      } catch (const std::exception& e) {
        r.status = sanitize(e.what());
      }
      return r;
    });

    static const char* axis_names[] = {"regime", "gamma0p", "epsilon", "deltaU"};
    Table table;
    table.columns = {axis_names[static_cast<int>(axis)], "I_S", "I_D",
                     coherence_column(resolve_scenario(spec)), "status"};
    bool failed = false;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Cell key = values[k];
      if (axis != SweepAxis::regime) key = std::strtod(values[k].c_str(), nullptr);
      table.rows.push_back({key, rows[k].is, rows[k].id, rows[k].coherence, rows[k].status});
      failed = failed || rows[k].status != "ok";
    }
    table.write(out, spec.output.format);
    if (failed) err << "error: some sweep points failed; see the status column\n";
    return failed ? kExitSolver : kExitOk;
  });
}

int cmd_validate(std::ostream& out, std::ostream& err, const ValidationOptions& options) {
  return guarded(err, [&] {
    const SelfCheckReport report = run_validation(options);
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
      passed += c.passed;
    }
    for (const auto& n : report.notes) out << "note: " << n << '\n';
    out << passed << "/" << report.checks.size() << " checks passed\n";
    return report.ok() ? kExitOk : kExitInput;
  });
}

}  // namespace qdrate
