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

// Detector + single-dot and detector + double-dot devices, their
// hand-transcribed rate equations, and closed-form currents.
//
// Device states (site 0 is always the detector well):
//
//   single dot  a = 00, b = 10 (detector), c = 01 (dot), d = 11
//   double dot  a = 000, b = 100, c = 010 (dot 1), d = 001 (dot 2),
//               e = 110, f = 101
//
// The double dot holds at most one electron. Which detector channels exist
// depends on where the detector's Fermi level sits (FermiRegime).

#ifndef QDRATE_SCENARIOS_HPP
#define QDRATE_SCENARIOS_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qdrate/liouvillian.hpp"
#include "qdrate/model.hpp"
#include "qdrate/observables.hpp"

namespace qdrate {

/// Physical rates and energies of the two devices. Primed quantities are the
/// system parameters while the detector is occupied; gamma0p / gamma0pp are
/// the detector widths with dot 1 / dot 2 occupied.
struct ScenarioParams {
  double gamma0 = 1.0;
  double gamma0p = 1.0;
  double gamma0pp = 1.0;
  double gammaL = 1.0;
  double gammaLp = 1.0;
  double gammaR = 1.0;
  double gammaRp = 1.0;
  double omega = 1.0;
  double omegap = 1.0;
  /// E2 - E1
  double epsilon = 0.0;
  /// U2 - U1
  double deltaU = 0.0;

  /// Throws ModelError when a rate or width is negative or anything is not finite.
  void validate() const;

  /// Copy with gammaLp = gammaL, gammaRp = gammaR, omegap = omega.
  ScenarioParams undistorted() const;

  friend bool operator==(const ScenarioParams&, const ScenarioParams&) = default;
};

/// Position of the detector's left Fermi level relative to E0 + U1, E0 + U2.
enum class FermiRegime {
  /// Any system electron blocks the detector.
  blocked,
  /// The detector stays open while dot 2 (the weaker-coupled dot) is occupied.
  partial,
  /// The detector is never blocked.
  open,
};

std::string_view to_string(FermiRegime regime);
std::optional<FermiRegime> parse_regime(std::string_view name);

/// A device: rate model, collectors and the detector partition.
struct Scenario {
  RateModel model;
  CollectorSpec detector;
  CollectorSpec system;
  DetectorPartition partition;
  /// Reduced-state pair whose coherence is reported, if any.
  std::optional<std::pair<std::size_t, std::size_t>> coherence_pair;
};

Scenario single_dot_model(const ScenarioParams& p);
Scenario double_dot_model(const ScenarioParams& p, FermiRegime regime);
/// Detector alone: empty <-> occupied at gamma0 both ways.
Scenario detector_only_model(double gamma0);
/// Single dot alone: filled at gammaL, emptied at gammaR.
Scenario dot_only_model(double gammaL, double gammaR);

/// Hand-transcribed equation sets. Each covers the populations plus the
/// coherences that are written out; other coherences are outside its support.
enum class LiteralForm {
  /// Detector + single dot populations (primed system rates kept).
  single_dot,
  /// Detector + double dot, detector blocked by any system electron. Written
  /// for undistorted system rates: gammaLp, gammaRp, omegap are not used.
  double_dot_blocked,
  /// As double_dot_blocked with the dot-2 rows replaced for the partial
  /// regime, coefficients copied as written.
  double_dot_partial,
};

Liouvillian literal_liouvillian(const ScenarioParams& p, LiteralForm form);

enum class ScenarioKind { single_dot, double_dot };
enum class AssemblyMode { generic, literal };

/// Generator for a preset. Literal mode uses the transcribed equations; the
/// open regime has none and falls back to the generic assembly.
Liouvillian preset_liouvillian(ScenarioKind kind, const ScenarioParams& p, FermiRegime regime,
                               AssemblyMode mode);

// Closed-form currents (e = 1).

struct BaselineCurrents {
  double detector = 0.0;
  double system = 0.0;
};

/// Currents without electrostatic coupling: Gamma0/2 and GL GR / (GL + GR).
BaselineCurrents analytic_baseline(double gamma0, double gammaL, double gammaR);

struct SingleDotLimit {
  double system_current = 0.0;
  /// I_D / I_S
  double ratio = 0.0;
};

/// Strong-detector limit (Gamma0, Gamma0' >> system rates) of the single dot.
SingleDotLimit analytic_single_dot(const ScenarioParams& p);

struct GamowParams {
  double coulomb = 0.0;      ///< U
  double level = 1.0;        ///< E1
  double barrier = 2.0;      ///< V
  double action = 1.0;       ///< S = [2m(V - E1)]^{1/2} L
};

/// Relative shift (GL' - GL) / GL of a quasiclassical tunneling width when the
/// level is raised by U.
double gamow_distortion(const GamowParams& g);

/// Resonant current through the double dot without detector influence.
double analytic_double_dot(const ScenarioParams& p);

/// Detector-distorted double-dot current I0 (1 - alpha I0 / Gamma0) with
/// alpha = dU (dU + eps) / (4 Gamma0)^2; asymptotic in Gamma0.
double analytic_distorted(const ScenarioParams& p);

/// Double-dot current suppressed by the detector in the partial regime
/// (gamma0pp taken equal to gamma0p).
double analytic_dephased(const ScenarioParams& p);

struct SweepPoint {
  FermiRegime regime = FermiRegime::blocked;
  double system_current = 0.0;
  double detector_current = 0.0;
  /// |reduced sigma_cd| between the two dots.
  double coherence = 0.0;
};

/// Stationary observables of the double dot for each regime, in input order.
/// `jobs` > 1 evaluates points concurrently.
std::vector<SweepPoint> fermi_sweep(const ScenarioParams& p, const std::vector<FermiRegime>& regimes,
                                    AssemblyMode mode = AssemblyMode::literal, unsigned jobs = 1);

/// Runs fn(0..count-1) on up to `jobs` threads; results keep index order.
template <typename T, typename Fn>
std::vector<T> ordered_parallel_map(std::size_t count, unsigned jobs, Fn fn);

}  // namespace qdrate

#include "qdrate/detail/parallel.hpp"

#endif  // QDRATE_SCENARIOS_HPP
