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
#include <limits>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qdrate/observables.hpp"
#include "qdrate/scenarios.hpp"
#include "qdrate/solver.hpp"

using namespace qdrate;

namespace {

RateModel two_state(double gl, double gr) {
  RateModel m;
  m.space.sites = 1;
  m.space.states = {Configuration::parse("0"), Configuration::parse("1")};
  m.channels = {{0, 1, gl}, {1, 0, gr}};
  return m;
}

std::vector<Liouvillian> preset_generators(const ScenarioParams& p) {
  std::vector<Liouvillian> out;
  for (auto mode : {AssemblyMode::generic, AssemblyMode::literal}) {
    out.push_back(preset_liouvillian(ScenarioKind::single_dot, p, FermiRegime::blocked, mode));
    for (auto r : {FermiRegime::blocked, FermiRegime::partial, FermiRegime::open}) {
      out.push_back(preset_liouvillian(ScenarioKind::double_dot, p, r, mode));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("two-state relaxation matches the exponential solution") {
  const Liouvillian L = build_liouvillian(two_state(1, 1));
  EvolveOptions opt;
  opt.rel_tol = 1e-11;
  opt.abs_tol = 1e-13;
  opt.output_grid = uniform_grid(1.0, 11);
  const Trajectory tr = evolve(L, DensityMatrix::pure(2, 0), 1.0, opt);
  REQUIRE(tr.size() == 11);
  CHECK(tr.times.front() == 0.0);
  CHECK(tr.times.back() == 1.0);
  for (std::size_t k = 0; k < tr.size(); ++k) {
    const double want = 0.5 * (1 + std::exp(-2 * tr.times[k]));
    CHECK(tr.states[k].population(0) == doctest::Approx(want).epsilon(1e-9));
  }
  CHECK(tr.states.back().population(0) == doctest::Approx(0.5677).epsilon(1e-4));
}

TEST_CASE("evolution keeps the trace and starts from the given state") {
  std::mt19937_64 rng(5);
  for (int draw = 0; draw < 4; ++draw) {
    const ScenarioParams p = oracle::random_params(rng, false);
    for (const auto& L : preset_generators(p)) {
      EvolveOptions opt;
      opt.output_grid = uniform_grid(5.0, 21);
      const Trajectory tr = evolve(L, DensityMatrix::pure(L.dim(), 0), 5.0, opt);
      CHECK(tr.states.front().max_distance(DensityMatrix::pure(L.dim(), 0)) == 0.0);
      for (const auto& s : tr.states) {
        CHECK(std::abs(s.trace() - 1.0) <= kTraceDriftLimit);
        CHECK((s.matrix() - s.matrix().adjoint()).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }
}

TEST_CASE("currents vanish at t = 0 from the empty state") {
  ScenarioParams p;
  const Scenario s = single_dot_model(p);
  const Trajectory tr = evolve(build_liouvillian(s.model), DensityMatrix::pure(4, 0), 1.0);
  CHECK(current(tr.states.front(), s.system) == 0.0);
  CHECK(current(tr.states.front(), s.detector) == 0.0);
}

TEST_CASE("evolve rejects bad input") {
  const Liouvillian L = build_liouvillian(two_state(1, 1));
  CHECK_THROWS_AS(evolve(L, DensityMatrix::pure(2, 0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(evolve(L, DensityMatrix::pure(3, 0), 1.0), ModelError);
}

TEST_CASE("step-size underflow is reported with the failing time") {
  // A stiff model with an unreachable tolerance forces the step below its floor.
  const Liouvillian L = build_liouvillian(two_state(1e6, 1));
  EvolveOptions opt;
  opt.rel_tol = 1e-300;
  opt.abs_tol = 1e-300;
  try {
    evolve(L, DensityMatrix::pure(2, 0), 1.0, opt);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.time() >= 0.0);
    CHECK(e.time() < 1.0);
    CHECK(std::string(e.what()).find("t = ") != std::string::npos);
  }
}

TEST_CASE("step budget exhaustion is reported") {
  const Liouvillian L = build_liouvillian(two_state(1e4, 1e4));
  EvolveOptions opt;
  opt.max_steps = 10;
  CHECK_THROWS_AS(evolve(L, DensityMatrix::pure(2, 0), 10.0, opt), SolverError);
}

TEST_CASE("tighter tolerance moves the output by less than the coarse tolerance") {
  ScenarioParams p;
  p.gamma0 = 3;
  p.epsilon = 0.5;
  const Liouvillian L = preset_liouvillian(ScenarioKind::double_dot, p, FermiRegime::partial,
                                           AssemblyMode::generic);
  EvolveOptions coarse;
  coarse.rel_tol = 1e-7;
  coarse.abs_tol = 1e-9;
  coarse.output_grid = uniform_grid(4.0, 9);
  EvolveOptions fine = coarse;
  fine.rel_tol /= 2;
  const Trajectory a = evolve(L, DensityMatrix::pure(6, 0), 4.0, coarse);
  const Trajectory b = evolve(L, DensityMatrix::pure(6, 0), 4.0, fine);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a.states[k].max_distance(b.states[k]) <= coarse.rel_tol);
  }
}

TEST_CASE("direct steady states") {
  SUBCASE("two-state") {
    const DensityMatrix s = steady_state_direct(build_liouvillian(two_state(1, 1)));
    CHECK(s.population(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.population(1) == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("detector alone") {
    const Scenario s = detector_only_model(4.0);
    const DensityMatrix st = steady_state_direct(build_liouvillian(s.model));
    CHECK(st.population(1) == doctest::Approx(0.5));
    CHECK(current(st, s.detector) == doctest::Approx(2.0));
  }
  SUBCASE("single isolated state") {
    RateModel m;
    m.space.sites = 1;
    m.space.states = {Configuration::parse("0")};
    const Liouvillian L = build_liouvillian(m);
    CHECK(steady_state_direct(L).population(0) == 1.0);
    CHECK(std::isinf(spectral_gap(L)));
  }
  SUBCASE("disconnected states") {
    RateModel m = two_state(0, 0);
    try {
      steady_state_direct(build_liouvillian(m));
      FAIL("expected DegenerateKernelError");
    } catch (const DegenerateKernelError& e) {
      // Both populations and the (Re, Im) coherence pair are stationary.
      CHECK(e.kernel_dimension() == 4);
    }
    CHECK_THROWS_AS(spectral_gap(build_liouvillian(m)), DegenerateKernelError);
  }
}

TEST_CASE("steady states of the presets: unique, physical, stationary") {
  std::mt19937_64 rng(17);
  for (int draw = 0; draw < 10; ++draw) {
    const ScenarioParams p = oracle::random_params(rng, false);
    for (const auto& L : preset_generators(p)) {
      CHECK(kernel_dimension(L) == 1);
      const DensityMatrix s = steady_state_direct(L);
      CHECK(relative_residual(L, s) <= 1e-12);
      CHECK(std::abs(s.trace() - 1.0) <= 1e-12);
      for (std::size_t k = 0; k < s.dim(); ++k) CHECK(s.population(k) >= -1e-12);
      // Positive semidefinite up to roundoff.
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s.matrix());
      CHECK(es.eigenvalues().minCoeff() >= -1e-10);
    }
  }
}

TEST_CASE("steady state by integration agrees with the direct solve") {
  std::mt19937_64 rng(23);
  for (int draw = 0; draw < 3; ++draw) {
    const ScenarioParams p = oracle::random_params(rng, false);
    for (const auto& L : preset_generators(p)) {
      const DensityMatrix direct = steady_state_direct(L);
      const DensityMatrix integ = steady_state_by_integration(L, DensityMatrix::pure(L.dim(), 0), spectral_gap(L));
      CHECK(direct.max_distance(integ) <= 1e-6);
    }
  }
  SUBCASE("an already stationary state is unchanged") {
    const Liouvillian L = build_liouvillian(two_state(1, 3));
    const DensityMatrix s = steady_state_direct(L);
    CHECK(steady_state_by_integration(L, s, spectral_gap(L)).max_distance(s) <= 1e-12);
  }
}

TEST_CASE("spectral gap") {
  // Populations relax at GL + GR = 2, the coherence at (GL + GR) / 2 = 1; the
  // gap is taken over the whole Hermitian space.
  const Liouvillian two = build_liouvillian(two_state(1, 1));
  Eigen::EigenSolver<Eigen::MatrixXd> pops(two.matrix().topLeftCorner(2, 2));
  CHECK(pops.eigenvalues().real().minCoeff() == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(spectral_gap(two) == doctest::Approx(1.0).epsilon(1e-12));
  ScenarioParams p;
  p.epsilon = 0.3;
  const Liouvillian L = build_liouvillian(single_dot_model(p).model);
  const double g = spectral_gap(L);
  CHECK(g > 0.0);
  for (double k : {0.5, 3.0}) {
    ScenarioParams q = p;
    for (double* v : {&q.gamma0, &q.gamma0p, &q.gamma0pp, &q.gammaL, &q.gammaLp, &q.gammaR, &q.gammaRp,
                      &q.omega, &q.omegap, &q.epsilon})
      *v *= k;
    CHECK(spectral_gap(build_liouvillian(single_dot_model(q).model)) == doctest::Approx(k * g).epsilon(1e-9));
  }
  std::mt19937_64 rng(29);
  for (int draw = 0; draw < 5; ++draw) {
    for (const auto& Lp : preset_generators(oracle::random_params(rng, false))) CHECK(spectral_gap(Lp) > 0.0);
  }
}

TEST_CASE("density matrix validation") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  CHECK_NOTHROW(DensityMatrix{m});
  m(0, 1) = std::complex<double>(0.1, 0.2);
  CHECK_THROWS_AS(DensityMatrix{m}, ModelError);
  m(1, 0) = std::conj(m(0, 1));
  CHECK_NOTHROW(DensityMatrix{m});
  m(1, 1) = 0.6;
  CHECK_THROWS_AS(DensityMatrix{m}, ModelError);
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{m}, ModelError);
  CHECK_THROWS_AS(DensityMatrix{Eigen::MatrixXcd::Zero(2, 3)}, ModelError);
}
