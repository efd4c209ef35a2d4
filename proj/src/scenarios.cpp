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

#include "qdrate/scenarios.hpp"

#include <cmath>
#include <initializer_list>
#include <string>

#include "qdrate/solver.hpp"

namespace qdrate {

void ScenarioParams::validate() const {
  const std::pair<const char*, double> rates[] = {
      {"gamma0", gamma0}, {"gamma0p", gamma0p}, {"gamma0pp", gamma0pp},
      {"gammaL", gammaL}, {"gammaLp", gammaLp}, {"gammaR", gammaR},
      {"gammaRp", gammaRp},
  };
  for (const auto& [name, value] : rates) {
    if (!std::isfinite(value)) throw ModelError(std::string(name) + " is not finite");
    if (value < 0.0) throw ModelError(std::string(name) + " must be nonnegative");
  }
  for (double v : {omega, omegap, epsilon, deltaU}) {
    if (!std::isfinite(v)) throw ModelError("omega, omegap, epsilon and deltaU must be finite");
  }
}

ScenarioParams ScenarioParams::undistorted() const {
  ScenarioParams p = *this;
  p.gammaLp = gammaL;
  p.gammaRp = gammaR;
  p.omegap = omega;
  return p;
}

std::string_view to_string(FermiRegime regime) {
  switch (regime) {
    case FermiRegime::blocked: return "blocked";
    case FermiRegime::partial: return "partial";
    case FermiRegime::open: return "open";
  }
  return "?";
}

std::optional<FermiRegime> parse_regime(std::string_view name) {
  if (name == "blocked") return FermiRegime::blocked;
  if (name == "partial") return FermiRegime::partial;
  if (name == "open") return FermiRegime::open;
  return std::nullopt;
}

namespace {

StateSpace make_space(std::size_t sites, std::initializer_list<std::pair<const char*, const char*>> states) {
  StateSpace space;
  space.sites = sites;
  for (const auto& [label, bits] : states) {
    space.labels.emplace_back(label);
    space.states.push_back(Configuration::parse(bits));
  }
  return space;
}

}  // namespace

Scenario single_dot_model(const ScenarioParams& p) {
  p.validate();
  enum { a, b, c, d };
  Scenario s;
  s.model.space = make_space(2, {{"a", "00"}, {"b", "10"}, {"c", "01"}, {"d", "11"}});
  s.model.energies.assign(4, 0.0);
  // No c -> d: the occupied dot pushes the detector level above the Fermi sea.
  // The detector empties from d at 2 Gamma0' (both reservoirs).
  s.model.channels = {
      {a, b, p.gamma0},       {b, a, p.gamma0},   {d, c, 2.0 * p.gamma0p},
      {a, c, p.gammaL},       {b, d, p.gammaLp},  {c, a, p.gammaR},
      {d, b, p.gammaRp},
  };
  s.detector.entries = {{b, p.gamma0}, {d, p.gamma0p}};
  s.system.entries = {{c, p.gammaR}, {d, p.gammaRp}};
  s.partition = DetectorPartition::from_space(s.model.space, 0);
  s.coherence_pair = std::pair<std::size_t, std::size_t>{0, 1};
  require_valid(s.model);
  return s;
}

Scenario double_dot_model(const ScenarioParams& p, FermiRegime regime) {
  p.validate();
  enum { a, b, c, d, e, f };
  Scenario s;
  s.model.space = make_space(3, {{"a", "000"}, {"b", "100"}, {"c", "010"},
                                 {"d", "001"}, {"e", "110"}, {"f", "101"}});
  s.model.energies = {0.0, 0.0, 0.0, p.epsilon, 0.0, p.epsilon + p.deltaU};
  s.model.couplings = {{c, d, p.omega}, {e, f, p.omegap}};

  auto& ch = s.model.channels;
  ch = {{a, b, p.gamma0}, {b, a, p.gamma0}};
  switch (regime) {
    case FermiRegime::blocked:
      ch.insert(ch.end(), {{e, c, 2.0 * p.gamma0p}, {f, d, 2.0 * p.gamma0pp}});
      break;
    case FermiRegime::partial:
      ch.insert(ch.end(), {{e, c, 2.0 * p.gamma0p}, {f, d, p.gamma0pp}, {d, f, p.gamma0pp}});
      break;
    case FermiRegime::open:
      ch.insert(ch.end(), {{c, e, p.gamma0}, {e, c, p.gamma0}, {d, f, p.gamma0}, {f, d, p.gamma0}});
      break;
  }
  ch.insert(ch.end(), {{a, c, p.gammaL}, {b, e, p.gammaLp}, {d, a, p.gammaR}, {f, b, p.gammaRp}});

  if (regime == FermiRegime::open) {
    s.detector.entries = {{b, p.gamma0}, {e, p.gamma0}, {f, p.gamma0}};
  } else {
    s.detector.entries = {{b, p.gamma0}, {e, p.gamma0p}, {f, p.gamma0pp}};
  }
  s.system.entries = {{d, p.gammaR}, {f, p.gammaRp}};
  s.partition = DetectorPartition::from_space(s.model.space, 0);
  s.coherence_pair = std::pair<std::size_t, std::size_t>{1, 2};
  require_valid(s.model);
  return s;
}

Scenario detector_only_model(double gamma0) {
  if (!(gamma0 >= 0.0)) throw ModelError("gamma0 must be nonnegative");
  Scenario s;
  s.model.space = make_space(1, {{"a", "0"}, {"b", "1"}});
  s.model.channels = {{0, 1, gamma0}, {1, 0, gamma0}};
  s.detector.entries = {{1, gamma0}};
  s.partition = DetectorPartition::from_space(s.model.space, 0);
  require_valid(s.model);
  return s;
}

Scenario dot_only_model(double gammaL, double gammaR) {
  if (!(gammaL >= 0.0) || !(gammaR >= 0.0)) throw ModelError("rates must be nonnegative");
  Scenario s;
  s.model.space = make_space(1, {{"a", "0"}, {"c", "1"}});
  s.model.channels = {{0, 1, gammaL}, {1, 0, gammaR}};
  s.system.entries = {{1, gammaR}};
  s.partition = DetectorPartition::identity(s.model.space);
  require_valid(s.model);
  return s;
}

Liouvillian preset_liouvillian(ScenarioKind kind, const ScenarioParams& p, FermiRegime regime,
                               AssemblyMode mode) {
  if (kind == ScenarioKind::single_dot) {
    return mode == AssemblyMode::literal ? literal_liouvillian(p, LiteralForm::single_dot)
                                         : build_liouvillian(single_dot_model(p).model);
  }
  if (mode == AssemblyMode::literal) {
    if (regime == FermiRegime::blocked) return literal_liouvillian(p, LiteralForm::double_dot_blocked);
    if (regime == FermiRegime::partial) return literal_liouvillian(p, LiteralForm::double_dot_partial);
  }
  return build_liouvillian(double_dot_model(p, regime).model);
}

std::vector<SweepPoint> fermi_sweep(const ScenarioParams& p, const std::vector<FermiRegime>& regimes,
                                    AssemblyMode mode, unsigned jobs) {
  p.validate();
  return ordered_parallel_map<SweepPoint>(regimes.size(), jobs, [&](std::size_t k) {
    const FermiRegime regime = regimes[k];
    const Scenario scenario = double_dot_model(p, regime);
    const DensityMatrix sigma =
        steady_state_direct(preset_liouvillian(ScenarioKind::double_dot, p, regime, mode));
    const DensityMatrix bar = trace_out_detector(sigma, scenario.partition);
    return SweepPoint{regime, current(sigma, scenario.system), current(sigma, scenario.detector),
                      coherence_magnitude(bar, 1, 2)};
  });
}

}  // namespace qdrate
