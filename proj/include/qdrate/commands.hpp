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

// Subcommands of the qdrate tool. Each writes its result to `out`,
// diagnostics to `err`, and returns the process exit code.

#ifndef QDRATE_COMMANDS_HPP
#define QDRATE_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qdrate/run_spec.hpp"
#include "qdrate/validation.hpp"

namespace qdrate {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitSolver = 2;

/// Trajectory table on the solver grid.
int cmd_run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Stationary observables as JSON, with an integration cross-check.
int cmd_steady(const RunSpec& spec, std::ostream& out, std::ostream& err);

enum class SweepAxis { regime, gamma0p, epsilon, deltaU };
std::optional<SweepAxis> parse_sweep_axis(std::string_view name);

/// One steady-state row per grid value, in grid order. The gamma0p axis sets
/// both gamma0p and gamma0pp.
int cmd_sweep(const RunSpec& spec, SweepAxis axis, const std::vector<std::string>& values, unsigned jobs,
              std::ostream& out, std::ostream& err);

int cmd_validate(std::ostream& out, std::ostream& err, const ValidationOptions& options = {});

/// "%.17g"
std::string format_number(double x);

}  // namespace qdrate

#endif  // QDRATE_COMMANDS_HPP
