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

// qdrate: command-line front end.
//
//   qdrate run      --config spec.json [--t-end 20 ...]
//   qdrate steady   --scenario single_dot --gamma0 1000
//   qdrate sweep    --axis gamma0p --values 0,1,10,100 --regime partial
//   qdrate validate
//   qdrate spec     (prints the resolved configuration)
//
// Flags override values from the config file.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdrate/commands.hpp"

namespace {

using nlohmann::json;

struct Overrides {
  std::string config;
  std::map<std::string, double> params;
  std::map<std::string, std::string> top;     // scenario, regime, mode, initial_state
  std::map<std::string, double> solver;       // rel_tol, abs_tol, t_end
  std::optional<std::size_t> grid_points;
  std::map<std::string, std::string> output;  // format, path
};

void add_spec_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
  for (const char* key : {"scenario", "regime", "mode"}) {
    cmd->add_option_function<std::string>(std::string("--") + key, [&o, key](const std::string& v) { o.top[key] = v; });
  }
  cmd->add_option_function<std::string>("--initial-state", [&o](const std::string& v) { o.top["initial_state"] = v; },
                                        "label of the initial pure state");
  for (const char* key : {"gamma0", "gamma0p", "gamma0pp", "gammaL", "gammaLp", "gammaR", "gammaRp", "omega",
                          "omegap", "epsilon", "deltaU"}) {
    cmd->add_option_function<double>(std::string("--") + key, [&o, key](double v) { o.params[key] = v; });
  }
  for (auto [flag, key] : {std::pair{"--rel-tol", "rel_tol"}, {"--abs-tol", "abs_tol"}, {"--t-end", "t_end"}}) {
    cmd->add_option_function<double>(flag, [&o, key = key](double v) { o.solver[key] = v; });
  }
  cmd->add_option_function<std::size_t>("--grid-points", [&o](std::size_t v) { o.grid_points = v; });
  cmd->add_option_function<std::string>("--format", [&o](const std::string& v) { o.output["format"] = v; },
                                        "csv or json");
  cmd->add_option_function<std::string>("-o,--output", [&o](const std::string& v) { o.output["path"] = v; },
                                        "write to this file instead of standard output");
}

qdrate::RunSpec resolve(const Overrides& o) {
  json doc = json::object();
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw qdrate::SpecError("cannot read " + o.config, "");
    std::stringstream buf;
    buf << in.rdbuf();
    doc = qdrate::parse_json_text(buf.str());
    if (!doc.is_object()) throw qdrate::SpecError("(root): expected an object", "");
  }
  for (const auto& [k, v] : o.top) doc[k] = v;
  for (const auto& [k, v] : o.params) doc["params"][k] = v;
  for (const auto& [k, v] : o.solver) doc["solver"][k] = v;
  if (o.grid_points) doc["solver"]["grid_points"] = *o.grid_points;
  for (const auto& [k, v] : o.output) doc["output"][k] = v;
  return qdrate::run_spec_from_json(doc);
}

// Runs `fn` with the configured output stream.
template <typename Fn>
int with_output(const qdrate::RunSpec& spec, Fn fn) {
  if (spec.output.path.empty()) return fn(std::cout);
  std::ofstream file(spec.output.path);
  if (!file) {
    std::cerr << "error: cannot write " << spec.output.path << '\n';
    return qdrate::kExitInput;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rate equations for quantum-dot devices watched by a point detector"};
  app.require_subcommand(1);

  Overrides run_o, steady_o, sweep_o, spec_o;
  auto* run = app.add_subcommand("run", "time evolution table (t, currents, charges, occupancies)");
  add_spec_options(run, run_o);
  auto* steady = app.add_subcommand("steady", "stationary observables as JSON");
  add_spec_options(steady, steady_o);
  auto* sweep = app.add_subcommand("sweep", "stationary observables along one parameter axis");
  add_spec_options(sweep, sweep_o);
  std::string axis;
  std::vector<std::string> values;
  unsigned jobs = 1;
  sweep->add_option("--axis", axis, "regime, gamma0p, epsilon or deltaU")->required();
  sweep->add_option("--values", values, "grid values")->required()->delimiter(',');
  sweep->add_option("-j,--jobs", jobs, "points solved concurrently")->check(CLI::Range(1u, 1024u));
  auto* validate = app.add_subcommand("validate", "run the built-in self-checks");
  auto* spec = app.add_subcommand("spec", "print the resolved configuration as JSON");
  add_spec_options(spec, spec_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qdrate::kExitInput;
  }

  auto resolved = [](const Overrides& o, qdrate::RunSpec& out) {
    try {
      out = resolve(o);
      return true;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return false;
    }
  };

  qdrate::RunSpec rs;
  if (*run) {
    if (!resolved(run_o, rs)) return qdrate::kExitInput;
    return with_output(rs, [&](std::ostream& out) { return qdrate::cmd_run(rs, out, std::cerr); });
  }
  if (*steady) {
    if (!resolved(steady_o, rs)) return qdrate::kExitInput;
    return with_output(rs, [&](std::ostream& out) { return qdrate::cmd_steady(rs, out, std::cerr); });
  }
  if (*sweep) {
    if (!resolved(sweep_o, rs)) return qdrate::kExitInput;
    const auto ax = qdrate::parse_sweep_axis(axis);
    if (!ax) {
      std::cerr << "error: --axis must be one of regime, gamma0p, epsilon, deltaU\n";
      return qdrate::kExitInput;
    }
    return with_output(rs, [&](std::ostream& out) { return qdrate::cmd_sweep(rs, *ax, values, jobs, out, std::cerr); });
  }
  if (*validate) return qdrate::cmd_validate(std::cout, std::cerr);
  if (*spec) {
    if (!resolved(spec_o, rs)) return qdrate::kExitInput;
    std::cout << qdrate::to_json(rs).dump(1) << '\n';
    return qdrate::kExitOk;
  }
  return qdrate::kExitInput;
}
