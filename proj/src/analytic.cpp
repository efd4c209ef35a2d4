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

namespace qdrate {

BaselineCurrents analytic_baseline(double gamma0, double gammaL, double gammaR) {
  if (!(gamma0 >= 0.0) || !(gammaL >= 0.0) || !(gammaR >= 0.0)) {
    throw ModelError("rates must be nonnegative");
  }
  if (!(gammaL + gammaR > 0.0)) throw ModelError("gammaL + gammaR must be positive");
  return {gamma0 / 2.0, gammaL * gammaR / (gammaL + gammaR)};
}

SingleDotLimit analytic_single_dot(const ScenarioParams& p) {
  p.validate();
  const double fill = p.gammaL + p.gammaLp;
  if (!(fill + 2.0 * p.gammaR > 0.0) || !(fill > 0.0)) throw ModelError("gammaL + gammaLp must be positive");
  return {p.gammaR * fill / (fill + 2.0 * p.gammaR), p.gamma0 / fill};
}

double gamow_distortion(const GamowParams& g) {
  if (!(g.level > 0.0) || !(g.barrier > g.level)) throw ModelError("need barrier > level > 0");
  if (!(g.coulomb >= 0.0)) throw ModelError("Coulomb energy must be nonnegative");
  if (!(g.action > 0.0)) throw ModelError("quasiclassical action must be positive");
  return g.coulomb / (2.0 * g.level) + g.action * g.coulomb / (g.barrier - g.level);
}

double analytic_double_dot(const ScenarioParams& p) {
  p.validate();
  if (!(p.gammaL > 0.0)) throw ModelError("gammaL must be positive");
  const double GR = p.gammaR, W2 = p.omega * p.omega;
  return GR * W2 / (p.epsilon * p.epsilon + GR * GR / 4.0 + W2 * (2.0 + GR / p.gammaL));
}

double analytic_distorted(const ScenarioParams& p) {
  if (!(p.gamma0 > 0.0)) throw ModelError("gamma0 must be positive");
  const double i0 = analytic_double_dot(p);
  const double w = 4.0 * p.gamma0;
  const double alpha = p.deltaU * (p.deltaU + p.epsilon) / (w * w);
  return i0 * (1.0 - alpha * i0 / p.gamma0);
}

double analytic_dephased(const ScenarioParams& p) {
  p.validate();
  if (!(p.gammaL > 0.0) || !(p.gammaR > 0.0)) throw ModelError("gammaL and gammaR must be positive");
  const double GR = p.gammaR, G = p.gamma0p, W2 = p.omega * p.omega;
  const double eps2 = p.epsilon * p.epsilon;
  return GR * W2 / (eps2 * GR / (GR + G) + GR * (GR + G) / 4.0 + W2 * (2.0 + GR / p.gammaL));
}

}  // namespace qdrate
