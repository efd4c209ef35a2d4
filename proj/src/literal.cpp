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

// Rate equations written out by hand, term by term, for the two devices.
// Nothing here is derived from the channel rules; the generic assembly is
// checked against these tables.

#include <complex>

#include "qdrate/scenarios.hpp"

namespace qdrate {

namespace {

constexpr std::complex<double> I(0.0, 1.0);

Liouvillian single_dot(const ScenarioParams& p) {
  enum { a, b, c, d };
  const double G0 = p.gamma0, G0p = p.gamma0p;
  const double GL = p.gammaL, GLp = p.gammaLp, GR = p.gammaR, GRp = p.gammaRp;

  RateEquationBuilder eq(4);
  eq.add(a, a, a, a, -(G0 + GL));
  eq.add(a, a, b, b, G0);
  eq.add(a, a, c, c, GR);

  eq.add(b, b, b, b, -(G0 + GLp));
  eq.add(b, b, a, a, G0);
  eq.add(b, b, d, d, GRp);

  eq.add(c, c, c, c, -GR);
  eq.add(c, c, a, a, GL);
  eq.add(c, c, d, d, 2.0 * G0p);

  eq.add(d, d, d, d, -(2.0 * G0p + GRp));
  eq.add(d, d, b, b, GLp);

  return eq.finish({0, 1, 2, 3});
}

enum { a, b, c, d, e, f };

// Rows shared by the blocked and partial regimes: populations of a, b, c, e.
void double_dot_common(RateEquationBuilder& eq, const ScenarioParams& p) {
  const double G0 = p.gamma0, G0p = p.gamma0p;
  const double GL = p.gammaL, GR = p.gammaR, W = p.omega;

  eq.add(a, a, a, a, -(GL + G0));
  eq.add(a, a, b, b, G0);
  eq.add(a, a, d, d, GR);

  eq.add(b, b, b, b, -(GL + G0));
  eq.add(b, b, a, a, G0);
  eq.add(b, b, f, f, GR);

  eq.add(c, c, c, d, I * W);
  eq.add(c, c, d, c, -I * W);
  eq.add(c, c, a, a, GL);
  eq.add(c, c, e, e, 2.0 * G0p);

  eq.add(e, e, e, f, I * W);
  eq.add(e, e, f, e, -I * W);
  eq.add(e, e, e, e, -2.0 * G0p);
  eq.add(e, e, b, b, GL);
}

std::vector<std::size_t> double_dot_support() {
  const HermitianCoords hc(6);
  return {0, 1, 2, 3, 4, 5, hc.re(c, d), hc.im(c, d), hc.re(e, f), hc.im(e, f)};
}

Liouvillian double_dot_blocked(const ScenarioParams& p) {
  const double G0p = p.gamma0p, G0pp = p.gamma0pp;
  const double GR = p.gammaR, W = p.omega, eps = p.epsilon, dU = p.deltaU;

  RateEquationBuilder eq(6);
  double_dot_common(eq, p);

  eq.add(d, d, c, d, -I * W);
  eq.add(d, d, d, c, I * W);
  eq.add(d, d, d, d, -GR);
  eq.add(d, d, f, f, 2.0 * G0pp);

  eq.add(f, f, e, f, -I * W);
  eq.add(f, f, f, e, I * W);
  eq.add(f, f, f, f, -(GR + 2.0 * G0pp));

  eq.add(c, d, c, d, I * eps);
  eq.add(c, d, c, c, I * W);
  eq.add(c, d, d, d, -I * W);
  eq.add(c, d, c, d, -0.5 * GR);
  eq.add(c, d, e, f, G0p + G0pp);

  eq.add(e, f, e, f, I * (eps + dU));
  eq.add(e, f, e, e, I * W);
  eq.add(e, f, f, f, -I * W);
  eq.add(e, f, e, f, -(G0p + G0pp + GR / 2.0));

  return eq.finish(double_dot_support());
}

Liouvillian double_dot_partial(const ScenarioParams& p) {
  const double G0p = p.gamma0p, G0pp = p.gamma0pp;
  const double GR = p.gammaR, W = p.omega, eps = p.epsilon, dU = p.deltaU;

  RateEquationBuilder eq(6);
  double_dot_common(eq, p);

  eq.add(d, d, c, d, -I * W);
  eq.add(d, d, d, c, I * W);
  eq.add(d, d, d, d, -(GR + G0pp));
  eq.add(d, d, f, f, G0pp);

  eq.add(f, f, e, f, -I * W);
  eq.add(f, f, f, e, I * W);
  eq.add(f, f, f, f, -(GR + G0pp));
  eq.add(f, f, d, d, G0pp);

  eq.add(c, d, c, d, I * eps);
  eq.add(c, d, c, c, I * W);
  eq.add(c, d, d, d, -I * W);
  eq.add(c, d, c, d, -0.5 * (GR + G0pp));
  eq.add(c, d, e, f, 0.5 * (G0p + G0pp));

  eq.add(e, f, e, f, I * (eps + dU));
  eq.add(e, f, e, e, I * W);
  eq.add(e, f, f, f, -I * W);
  eq.add(e, f, e, f, -0.5 * (GR + G0p + 2.0 * G0pp));

  return eq.finish(double_dot_support());
}

}  // namespace

Liouvillian literal_liouvillian(const ScenarioParams& p, LiteralForm form) {
  p.validate();
  switch (form) {
    case LiteralForm::single_dot: return single_dot(p);
    case LiteralForm::double_dot_blocked: return double_dot_blocked(p);
    case LiteralForm::double_dot_partial: return double_dot_partial(p);
  }
  throw ModelError("unknown literal form");
}

}  // namespace qdrate
