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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qdrate/liouvillian.hpp"
#include "qdrate/model.hpp"
#include "qdrate/scenarios.hpp"

using namespace qdrate;

namespace {

RateModel two_state(double gl, double gr) {
  RateModel m;
  m.space.sites = 1;
  m.space.states = {Configuration::parse("0"), Configuration::parse("1")};
  m.space.labels = {"a", "c"};
  m.channels = {{0, 1, gl}, {1, 0, gr}};
  return m;
}

// Reduced double dot: a = empty, c = dot 1, d = dot 2.
RateModel traced_double_dot(double gl, double gr, double omega, double eps) {
  RateModel m;
  m.space.sites = 2;
  m.space.states = {Configuration::parse("00"), Configuration::parse("10"), Configuration::parse("01")};
  m.space.labels = {"a", "c", "d"};
  m.energies = {0.0, 0.0, eps};
  m.couplings = {{1, 2, omega}};
  m.channels = {{0, 1, gl}, {2, 0, gr}};
  return m;
}

std::vector<RateModel> preset_models(const ScenarioParams& p) {
  return {single_dot_model(p).model, double_dot_model(p, FermiRegime::blocked).model,
          double_dot_model(p, FermiRegime::partial).model, double_dot_model(p, FermiRegime::open).model,
          traced_double_dot(p.gammaL, p.gammaR, p.omega, p.epsilon)};
}

}  // namespace

TEST_CASE("configuration parsing and toggles") {
  auto a = Configuration::parse("010");
  CHECK(a.electrons() == 1);
  CHECK(a.str() == "010");
  CHECK_THROWS_AS(Configuration::parse("012"), ModelError);

  auto t = single_toggle(Configuration::parse("010"), Configuration::parse("110"));
  REQUIRE(t);
  CHECK(t->site == 0);
  CHECK(t->direction == Toggle::fill);
  CHECK_FALSE(single_toggle(Configuration::parse("010"), Configuration::parse("001")));
  CHECK(is_single_hop(Configuration::parse("010"), Configuration::parse("001")));
  CHECK_FALSE(is_single_hop(Configuration::parse("010"), Configuration::parse("011")));
}

TEST_CASE("validate_model reports each violated invariant") {
  SUBCASE("two-site channel") {
    RateModel m = two_state(1, 1);
    m.space.sites = 2;
    m.space.states = {Configuration::parse("00"), Configuration::parse("11")};
    auto r = validate_model(m);
    CHECK(r.mentions("not a one-electron transition"));
  }
  SUBCASE("negative rate") {
    RateModel m = two_state(-0.5, 1);
    auto r = validate_model(m);
    CHECK(r.mentions("negative rate"));
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].indices.front() == 0);
  }
  SUBCASE("structural problems") {
    RateModel m = two_state(1, 1);
    m.space.states.push_back(Configuration::parse("1"));
    m.channels.push_back({0, 1, 2.0});
    m.channels.push_back({0, 7, 1.0});
    m.couplings.push_back({0, 1, 1.0});
    auto r = validate_model(m);
    CHECK(r.mentions("duplicate configuration"));
    CHECK(r.mentions("duplicates channel"));
    CHECK(r.mentions("out of range"));
    CHECK(r.mentions("not a single-electron hop"));
    CHECK(r.mentions("label count"));
    CHECK_THROWS_AS(build_liouvillian(m), ModelError);
  }
  SUBCASE("empty space") {
    RateModel m;
    CHECK(validate_model(m).mentions("empty"));
  }
  SUBCASE("presets are valid") {
    ScenarioParams p;
    p.gamma0 = 3;
    for (auto regime : {FermiRegime::blocked, FermiRegime::partial, FermiRegime::open}) {
      CHECK(validate_model(double_dot_model(p, regime).model).ok());
    }
    CHECK(validate_model(single_dot_model(p).model).ok());
  }
  SUBCASE("zero-rate channels and states without escapes are fine") {
    RateModel m = two_state(1, 0);
    CHECK(validate_model(m).ok());
  }
}

TEST_CASE("classical two-state model") {
  const Liouvillian L = build_liouvillian(two_state(1, 1));
  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(2, 2);
  sigma(0, 0) = 1;
  const Eigen::MatrixXcd d = L.apply(sigma);
  CHECK(d(0, 0).real() == -1.0);
  CHECK(d(1, 1).real() == 1.0);
  CHECK(std::abs(d(0, 1)) == 0.0);
  CHECK(coherence_transfer_pairs(two_state(1, 1)).empty());
}

TEST_CASE("traced double dot reproduces the reduced rate equations") {
  const double gl = 0.7, gr = 1.3, w = 0.9, eps = 0.4;
  const RateModel m = traced_double_dot(gl, gr, w, eps);
  const Liouvillian L = build_liouvillian(m);
  const HermitianCoords hc(3);
  enum { a, c, d };
  // populations
  CHECK(L.coefficient(hc.pop(a), hc.pop(a)) == -gl);
  CHECK(L.coefficient(hc.pop(a), hc.pop(d)) == gr);
  CHECK(L.coefficient(hc.pop(c), hc.pop(a)) == gl);
  CHECK(L.coefficient(hc.pop(c), hc.im(c, d)) == -2 * w);  // i w (s_cd - s_dc) = -2 w Im s_cd
  CHECK(L.coefficient(hc.pop(d), hc.im(c, d)) == 2 * w);
  CHECK(L.coefficient(hc.pop(d), hc.pop(d)) == -gr);
  // coherence: i eps s_cd + i w (s_cc - s_dd) - gr/2 s_cd
  CHECK(L.coefficient(hc.re(c, d), hc.re(c, d)) == -gr / 2);
  CHECK(L.coefficient(hc.im(c, d), hc.im(c, d)) == -gr / 2);
  CHECK(L.coefficient(hc.re(c, d), hc.im(c, d)) == -eps);
  CHECK(L.coefficient(hc.im(c, d), hc.re(c, d)) == eps);
  CHECK(L.coefficient(hc.im(c, d), hc.pop(c)) == w);
  CHECK(L.coefficient(hc.im(c, d), hc.pop(d)) == -w);
  CHECK(L.coefficient(hc.re(c, d), hc.pop(c)) == 0.0);
}

TEST_CASE("double dot, blocked detector: coherence transfer between dot pairs") {
  ScenarioParams p;
  p.gamma0 = 5;
  p.gamma0p = 3;
  p.gamma0pp = 7;
  const Scenario s = double_dot_model(p, FermiRegime::blocked);
  enum { a, b, c, d, e, f };
  const HermitianCoords hc(6);
  const Liouvillian L = build_liouvillian(s.model);
  CHECK(L.coefficient(hc.re(c, d), hc.re(e, f)) == p.gamma0p + p.gamma0pp);
  CHECK(L.coefficient(hc.im(c, d), hc.im(e, f)) == p.gamma0p + p.gamma0pp);

  int into_dot_coherences = 0;
  for (const auto& t : coherence_transfer_pairs(s.model)) {
    if ((t.to_a == c && t.to_b == d) || (t.to_a == e && t.to_b == f)) {
      ++into_dot_coherences;
      CHECK(t.from_a == e);
      CHECK(t.from_b == f);
      CHECK(t.coefficient == p.gamma0p + p.gamma0pp);
    }
  }
  CHECK(into_dot_coherences == 1);
}

TEST_CASE("double dot, open detector: transfers both ways at gamma0") {
  ScenarioParams p;
  p.gamma0 = 4;
  p.gamma0p = 100;
  const auto pairs = coherence_transfer_pairs(double_dot_model(p, FermiRegime::open).model);
  enum { a, b, c, d, e, f };
  bool forward = false, backward = false;
  for (const auto& t : pairs) {
    if (t.from_a == c && t.from_b == d && t.to_a == e && t.to_b == f) {
      forward = true;
      CHECK(t.coefficient == p.gamma0);
    }
    if (t.from_a == e && t.from_b == f && t.to_a == c && t.to_b == d) {
      backward = true;
      CHECK(t.coefficient == p.gamma0);
    }
  }
  CHECK(forward);
  CHECK(backward);
}

TEST_CASE("generic assembly matches the direct complex evaluation") {
  std::mt19937_64 rng(7);
  for (int draw = 0; draw < 20; ++draw) {
    const ScenarioParams p = oracle::random_params(rng, false);
    for (const auto& m : preset_models(p)) {
      const Liouvillian L = build_liouvillian(m);
      for (int k = 0; k < 3; ++k) {
        const Eigen::MatrixXcd s = oracle::random_hermitian(m.size(), rng);
        const Eigen::MatrixXcd got = L.apply(s);
        const Eigen::MatrixXcd want = oracle::rate_equations(m, s);
        CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-12 * (1 + want.cwiseAbs().maxCoeff()));
      }
    }
  }
}

TEST_CASE("generator invariants: trace, Hermiticity, linearity") {
  std::mt19937_64 rng(11);
  for (int draw = 0; draw < 25; ++draw) {
    const ScenarioParams p = oracle::random_params(rng, false);
    for (const auto& m : preset_models(p)) {
      const Liouvillian L = build_liouvillian(m);
      const auto n = m.size();
      const Eigen::MatrixXcd s1 = oracle::random_hermitian(n, rng);
      const Eigen::MatrixXcd s2 = oracle::random_hermitian(n, rng);
      const Eigen::MatrixXcd d1 = oracle::rate_equations(m, s1);
      const double scale = 1 + L.matrix().cwiseAbs().maxCoeff();
      CHECK(std::abs(d1.trace()) <= 1e-13 * scale * n);
      CHECK((d1 - d1.adjoint()).cwiseAbs().maxCoeff() <= 1e-13 * scale);

      // Column sums over the population rows vanish: trace(L x) = 0 for every x.
      const Eigen::RowVectorXd col_trace = L.matrix().topRows(n).colwise().sum();
      CHECK(col_trace.cwiseAbs().maxCoeff() <= 1e-13 * scale);

      const double alpha = 0.37, beta = -1.9;
      const Eigen::MatrixXcd lhs = L.apply(Eigen::MatrixXcd(alpha * s1 + beta * s2));
      const Eigen::MatrixXcd rhs = alpha * L.apply(s1) + beta * L.apply(s2);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12 * scale);
    }
  }
}

TEST_CASE("generator is affine in each rate and each hopping element") {
  std::mt19937_64 rng(3);
  const ScenarioParams p = oracle::random_params(rng, true);
  const RateModel base = double_dot_model(p, FermiRegime::partial).model;
  auto with_rate = [&](std::size_t k, double r) {
    RateModel m = base;
    m.channels[k].rate = r;
    return build_liouvillian(m).matrix();
  };
  for (std::size_t k = 0; k < base.channels.size(); ++k) {
    const double r = base.channels[k].rate;
    const Eigen::MatrixXd l0 = with_rate(k, 0.0), l1 = with_rate(k, r), l2 = with_rate(k, 2 * r);
    CHECK(((l2 - l1) - (l1 - l0)).cwiseAbs().maxCoeff() <= 1e-12);

    // Terms of a channel live only on rows that involve its two states.
    const auto& ch = base.channels[k];
    const HermitianCoords hc(base.size());
    const Eigen::MatrixXd delta = l1 - l0;
    for (Eigen::Index row = 0; row < delta.rows(); ++row) {
      if (delta.row(row).cwiseAbs().maxCoeff() == 0.0) continue;
      const std::string name = hc.name(row, &base.space);
      const bool touches = name.find(base.space.label(ch.from)) != std::string::npos ||
                           name.find(base.space.label(ch.to)) != std::string::npos;
      CHECK_MESSAGE(touches, name);
    }
  }
  for (std::size_t k = 0; k < base.couplings.size(); ++k) {
    auto with_omega = [&](double w) {
      RateModel m = base;
      m.couplings[k].omega = w;
      return build_liouvillian(m).matrix();
    };
    const double w = base.couplings[k].omega;
    CHECK(((with_omega(2 * w) - with_omega(w)) - (with_omega(w) - with_omega(0))).cwiseAbs().maxCoeff() <=
          1e-12);
  }
}

TEST_CASE("restricted support") {
  const ScenarioParams p;
  const Liouvillian lit = literal_liouvillian(p, LiteralForm::double_dot_blocked);
  CHECK_FALSE(lit.full_support());
  CHECK(lit.support().size() == 10);
  CHECK(lit.active_matrix().rows() == 10);

  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(4, 4);
  bad(2, 0) = 1.0;
  CHECK_THROWS_AS(Liouvillian(2, bad, {0, 1}), ModelError);
  Eigen::MatrixXd reads_outside = Eigen::MatrixXd::Zero(4, 4);
  reads_outside(0, 2) = 1.0;
  CHECK_THROWS_AS(Liouvillian(2, reads_outside, {0, 1}), ModelError);
  CHECK_THROWS_AS(Liouvillian(2, Eigen::MatrixXd::Zero(4, 4), {0, 2, 3}), ModelError);
}

TEST_CASE("coordinate helpers") {
  const HermitianCoords hc(4);
  CHECK(hc.size() == 16);
  CHECK(hc.re(0, 1) == 4);
  CHECK(hc.im(0, 1) == 5);
  CHECK(hc.re(2, 3) == 14);
  std::mt19937_64 rng(1);
  const Eigen::MatrixXcd s = oracle::random_hermitian(4, rng);
  CHECK((hc.to_matrix(hc.to_coords(s)) - s).cwiseAbs().maxCoeff() == 0.0);
}
