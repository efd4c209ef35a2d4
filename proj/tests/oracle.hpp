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

// Test-only reference implementations. These evaluate the rate equations
// directly on complex matrices, entry by entry, without the real
// coordinatization or the term builder used by the library.

#ifndef QDRATE_TESTS_ORACLE_HPP
#define QDRATE_TESTS_ORACLE_HPP

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qdrate/model.hpp"
#include "qdrate/scenarios.hpp"

namespace oracle {

using cplx = std::complex<double>;

// Site flipped by a -> b with the new occupancy, or -1 when not a single flip.
inline std::pair<int, int> flip(const qdrate::Configuration& from, const qdrate::Configuration& to) {
  int site = -1;
  for (std::size_t s = 0; s < from.occupancy.size(); ++s) {
    if (from.occupancy[s] != to.occupancy[s]) {
      if (site >= 0) return {-1, -1};
      site = static_cast<int>(s);
    }
  }
  return {site, site >= 0 ? to.occupancy[site] : -1};
}

// d(sigma)/dt of the modified rate equations evaluated literally.
inline Eigen::MatrixXcd rate_equations(const qdrate::RateModel& m, const Eigen::MatrixXcd& s) {
  const std::size_t n = m.size();
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
  for (const auto& c : m.couplings) omega(c.a, c.b) = omega(c.b, c.a) = c.omega;
  Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(n, n);  // gamma(x, y) = rate x -> y
  for (const auto& ch : m.channels) gamma(ch.from, ch.to) = ch.rate;
  const cplx i(0, 1);

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      cplx v = 0;
      double out_a = gamma.row(a).sum(), out_b = gamma.row(b).sum();
      if (a == b) {
        for (std::size_t k = 0; k < n; ++k) {
          if (k == a) continue;
          v += i * omega(a, k) * (s(a, k) - s(k, a));
          v += s(k, k) * gamma(k, a);
        }
        v -= s(a, a) * out_a;
      } else {
        v += i * (m.energy(b) - m.energy(a)) * s(a, b);
        for (std::size_t k = 0; k < n; ++k) {
          if (k != b) v += i * s(a, k) * omega(k, b);
          if (k != a) v -= i * omega(a, k) * s(k, b);
        }
        v -= 0.5 * s(a, b) * (out_a + out_b);
        for (std::size_t ap = 0; ap < n; ++ap) {
          for (std::size_t bp = 0; bp < n; ++bp) {
            if (gamma(ap, a) == 0.0 && gamma(bp, b) == 0.0) continue;
            bool ch_a = false, ch_b = false;
            for (const auto& ch : m.channels) {
              ch_a |= ch.from == ap && ch.to == a;
              ch_b |= ch.from == bp && ch.to == b;
            }
            if (!ch_a || !ch_b) continue;
            auto fa = flip(m.space.states[ap], m.space.states[a]);
            auto fb = flip(m.space.states[bp], m.space.states[b]);
            if (fa != fb || fa.first < 0) continue;
            v += 0.5 * s(ap, bp) * (gamma(ap, a) + gamma(bp, b));
          }
        }
      }
      out(a, b) = v;
    }
  }
  return out;
}

inline Eigen::MatrixXcd random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = u(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = cplx(u(rng), u(rng));
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

// Values k/64, k in [1, 64 * max]: sums and halvings of a few of them are exact.
inline double dyadic(std::mt19937_64& rng, int max = 16) {
  std::uniform_int_distribution<int> k(1, 64 * max);
  return k(rng) / 64.0;
}

inline qdrate::ScenarioParams random_params(std::mt19937_64& rng, bool exact) {
  std::uniform_real_distribution<double> u(0.05, 5.0);
  auto draw = [&] { return exact ? dyadic(rng) : u(rng); };
  qdrate::ScenarioParams p;
  p.gamma0 = draw();
  p.gamma0p = draw();
  p.gamma0pp = draw();
  p.gammaL = draw();
  p.gammaLp = draw();
  p.gammaR = draw();
  p.gammaRp = draw();
  p.omega = draw();
  p.omegap = draw();
  p.epsilon = draw() - 4.0;
  p.deltaU = draw() - 4.0;
  return p;
}

}  // namespace oracle

#endif  // QDRATE_TESTS_ORACLE_HPP
