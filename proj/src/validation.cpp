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

#include "qdrate/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "qdrate/observables.hpp"
#include "qdrate/scenarios.hpp"
#include "qdrate/solver.hpp"

namespace qdrate {

bool SelfCheckReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// Rates of the form k/64 so that the sums in both assemblies are exact.
ScenarioParams dyadic_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(1, 1024);
  auto draw = [&] { return k(rng) / 64.0; };
  ScenarioParams p;
  for (double* v : {&p.gamma0, &p.gamma0p, &p.gamma0pp, &p.gammaL, &p.gammaLp, &p.gammaR, &p.gammaRp,
                    &p.omega, &p.omegap}) {
    *v = draw();
  }
  p.epsilon = draw() - 8.0;
  p.deltaU = draw() - 8.0;
  return p;
}

ScenarioParams unit_double_dot(double detector_width) {
  ScenarioParams p;
  p.gamma0 = p.gamma0p = p.gamma0pp = detector_width;
  return p;
}

double system_current(const ScenarioParams& p, FermiRegime regime, AssemblyMode mode) {
  const Scenario s = double_dot_model(p, regime);
  return current(steady_state_direct(preset_liouvillian(ScenarioKind::double_dot, p, regime, mode)), s.system);
}

template <typename Fn>
CheckResult guarded(const std::string& name, Fn fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

}  // namespace

CheckResult compare_generic_literal(const std::string& name, const Liouvillian& generic,
                                    const Liouvillian& literal) {
  const auto diff = diff_on_support(generic, literal);
  if (diff.empty()) return {name, true, "identical on " + std::to_string(literal.support().size()) + " rows"};
  const HermitianCoords hc(generic.dim());
  const auto& d = diff.front();
  std::ostringstream os;
  os << diff.size() << " coefficient(s) differ, first d" << hc.name(d.row) << "/d" << hc.name(d.col)
     << fmt(": %.17g vs %.17g", d.reference, d.other);
  return {name, false, os.str()};
}

std::vector<std::string> partial_regime_differences() {
  // Distinct primes make each coefficient identifiable in the printout.
  ScenarioParams p;
  p.gamma0 = 1;
  p.gamma0p = 3;
  p.gamma0pp = 5;
  p.gammaR = 7;
  p = p.undistorted();
  const Liouvillian generic = build_liouvillian(double_dot_model(p, FermiRegime::partial).model);
  const Liouvillian literal = literal_liouvillian(p, LiteralForm::double_dot_partial);
  const StateSpace space = double_dot_model(p, FermiRegime::partial).model.space;
  const HermitianCoords hc(6);
  std::vector<std::string> out;
  out.push_back("partial regime, generic vs written (gamma0p=3, gamma0pp=5, gammaR=7):");
  for (const auto& d : diff_on_support(generic, literal)) {
    out.push_back("  d " + hc.name(d.row, &space) + " / d " + hc.name(d.col, &space) +
                  fmt(": generic %g, written %g", d.reference, d.other));
  }
  out.push_back("  generic: sigma_cd gain (2 gamma0p + gamma0pp)/2, sigma_ef decay (2 gamma0p + gammaR + gamma0pp)/2");
  out.push_back("  written: sigma_cd gain (gamma0p + gamma0pp)/2,   sigma_ef decay (gammaR + gamma0p + 2 gamma0pp)/2");
  out.push_back("  literal mode (the default for presets) uses the written form");
  return out;
}

SelfCheckReport run_validation(const ValidationOptions& options) {
  SelfCheckReport report;
  auto add = [&](CheckResult r) { report.checks.push_back(std::move(r)); };

  std::mt19937_64 rng(options.seed);
  std::vector<ScenarioParams> draws;
  for (unsigned k = 0; k < options.draws; ++k) draws.push_back(dyadic_params(rng));

  add(guarded("single dot: generic == written", [&] {
    for (const auto& p : draws) {
      auto r = compare_generic_literal("single dot: generic == written", build_liouvillian(single_dot_model(p).model),
                                       literal_liouvillian(p, LiteralForm::single_dot));
      if (!r.passed) return r;
    }
    return CheckResult{"single dot: generic == written", true, std::to_string(draws.size()) + " exact draws"};
  }));

  add(guarded("double dot blocked: generic == written", [&] {
    const std::string name = "double dot blocked: generic == written";
    for (const auto& raw : draws) {
      const ScenarioParams p = raw.undistorted();
      Liouvillian literal = literal_liouvillian(p, LiteralForm::double_dot_blocked);
      if (options.blocked_literal_perturbation) {
        const auto& x = *options.blocked_literal_perturbation;
        Eigen::MatrixXd m = literal.matrix();
        m(x.row, x.col) += x.delta;
        literal = Liouvillian(6, m, literal.support());
      }
      auto r = compare_generic_literal(name, build_liouvillian(double_dot_model(p, FermiRegime::blocked).model),
                                       literal);
      if (!r.passed) return r;
    }
    return CheckResult{name, true, std::to_string(draws.size()) + " exact draws"};
  }));

  add(guarded("double dot partial: differences confined to two coefficients", [&] {
    const std::string name = "double dot partial: differences confined to two coefficients";
    const HermitianCoords hc(6);
    const std::size_t c = 2, d = 3, e = 4, f = 5;
    for (const auto& raw : draws) {
      const ScenarioParams p = raw.undistorted();
      const auto diff = diff_on_support(build_liouvillian(double_dot_model(p, FermiRegime::partial).model),
                                        literal_liouvillian(p, LiteralForm::double_dot_partial));
      for (const auto& x : diff) {
        const bool expected = (x.col == hc.re(e, f) || x.col == hc.im(e, f)) &&
                              (x.row == hc.re(c, d) || x.row == hc.im(c, d) || x.row == x.col);
        if (!expected) return CheckResult{name, false, "unexpected entry d" + hc.name(x.row) + "/d" + hc.name(x.col)};
      }
      if (diff.size() != 4) return CheckResult{name, false, std::to_string(diff.size()) + " entries differ"};
    }
    return CheckResult{name, true, "sigma_cd gain and sigma_ef decay only"};
  }));

  add(guarded("generator conserves trace", [&] {
    double worst = 0.0;
    for (const auto& p : draws) {
      for (auto kind : {ScenarioKind::single_dot, ScenarioKind::double_dot}) {
        for (auto regime : {FermiRegime::blocked, FermiRegime::partial, FermiRegime::open}) {
          for (auto mode : {AssemblyMode::generic, AssemblyMode::literal}) {
            const Liouvillian L = preset_liouvillian(kind, p, regime, mode);
            const double scale = L.matrix().cwiseAbs().maxCoeff();
            const double sum = L.matrix().topRows(L.dim()).colwise().sum().cwiseAbs().maxCoeff();
            worst = std::max(worst, sum / scale);
          }
        }
      }
    }
    return CheckResult{"generator conserves trace", worst <= 1e-14, fmt("max |column trace| / scale = %.3g", worst)};
  }));

  add(guarded("baseline currents", [&] {
    double worst = 0.0;
    for (const auto& p : draws) {
      const auto want = analytic_baseline(p.gamma0, p.gammaL, p.gammaR);
      const Scenario det = detector_only_model(p.gamma0);
      const Scenario dot = dot_only_model(p.gammaL, p.gammaR);
      const double id = current(steady_state_direct(build_liouvillian(det.model)), det.detector);
      const double is = current(steady_state_direct(build_liouvillian(dot.model)), dot.system);
      worst = std::max({worst, std::abs(id - want.detector) / want.detector, std::abs(is - want.system) / want.system});
    }
    return CheckResult{"baseline currents", worst <= 1e-10, fmt("max relative error %.3g", worst)};
  }));

  add(guarded("single dot strong-detector limit", [&] {
    ScenarioParams p;
    p.gammaLp = 0.5;
    p.gammaR = 2.0;
    p.gamma0 = p.gamma0p = 2e3;
    const Scenario s = single_dot_model(p);
    const DensityMatrix st = steady_state_direct(build_liouvillian(s.model));
    const auto want = analytic_single_dot(p);
    const double is = current(st, s.system);
    const double e1 = std::abs(is - want.system_current) / want.system_current;
    const double e2 = std::abs(current(st, s.detector) / is - want.ratio) / want.ratio;
    return CheckResult{"single dot strong-detector limit", std::max(e1, e2) <= 5e-3,
                       fmt("I_S error %.3g, I_D/I_S error %.3g", e1, e2)};
  }));

  add(guarded("double dot undistorted current", [&] {
    const ScenarioParams p = unit_double_dot(1e3);
    const double is = system_current(p, FermiRegime::blocked, AssemblyMode::literal);
    const double want = analytic_double_dot(p);
    const double err = std::abs(is - want) / want;
    return CheckResult{"double dot undistorted current", err <= 5e-3, fmt("I_S %.9g vs %.9g", is, want)};
  }));

  add(guarded("double dot dephased current", [&] {
    ScenarioParams p = unit_double_dot(100);
    p.gamma0 = 1;
    const double is = system_current(p, FermiRegime::partial, AssemblyMode::literal);
    const double want = analytic_dephased(p);
    const double err = std::abs(is - want) / want;
    return CheckResult{"double dot dephased current", err <= 1e-8, fmt("I_S %.12g vs %.12g", is, want)};
  }));

  add(guarded("detector-position sweep", [&] {
    ScenarioParams p = unit_double_dot(100);
    p.gamma0 = 1;
    const auto pts = fermi_sweep(p, {FermiRegime::blocked, FermiRegime::partial, FermiRegime::open});
    const double same = std::abs(pts[0].system_current - pts[2].system_current);
    const double ratio = pts[1].system_current / pts[0].system_current;
    const double want = analytic_dephased(p) / analytic_double_dot(p);
    const bool ok = same <= 1e-6 && std::abs(ratio / want - 1) <= 1e-2;
    return CheckResult{"detector-position sweep", ok,
                       fmt("I_S = %.6g, %.6g, %.6g", pts[0].system_current, pts[1].system_current,
                           pts[2].system_current)};
  }));

  add(guarded("current suppression by the detector", [&] {
    double previous = INFINITY;
    bool ok = true;
    for (double g : {0.0, 1.0, 10.0, 100.0, 1e4}) {
      ScenarioParams p = unit_double_dot(g);
      p.gamma0 = 1;
      const double is = system_current(p, FermiRegime::partial, AssemblyMode::literal);
      ok = ok && is < previous;
      previous = is;
    }
    return CheckResult{"current suppression by the detector", ok, fmt("I_S at gamma0p = 1e4: %.3g", previous)};
  }));

  add(guarded("steady state cross-check", [&] {
    double worst = 0.0;
    const ScenarioParams p = draws.empty() ? ScenarioParams{} : draws.front();
    for (auto kind : {ScenarioKind::single_dot, ScenarioKind::double_dot}) {
      for (auto regime : {FermiRegime::blocked, FermiRegime::partial, FermiRegime::open}) {
        const Liouvillian L = preset_liouvillian(kind, p, regime, AssemblyMode::literal);
        const DensityMatrix direct = steady_state_direct(L);
        const DensityMatrix integ = steady_state_by_integration(L, DensityMatrix::pure(L.dim(), 0), spectral_gap(L));
        worst = std::max(worst, direct.max_distance(integ));
        if (kind == ScenarioKind::single_dot) break;
      }
    }
    return CheckResult{"steady state cross-check", worst <= 1e-6, fmt("max distance %.3g", worst)};
  }));

  report.notes = partial_regime_differences();
  return report;
}

}  // namespace qdrate
