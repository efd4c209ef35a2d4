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

// State spaces, coherent couplings and incoherent channels of a
// multi-dot device, and the structural checks that make a model usable.
//
// A device is described by a set of localized levels ("sites": detector well,
// dot 1, dot 2, ...). Each allowed charge configuration is listed explicitly;
// configurations forbidden by Coulomb exclusion are simply absent. Units are
// hbar = e = 1, so energies and rates share one inverse-time unit.

#ifndef QDRATE_MODEL_HPP
#define QDRATE_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdrate {

/// Thrown when a model, parameter set or partition violates its invariants.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Toggle { fill, empty };

/// Occupation pattern over the sites of a device (0 = empty, 1 = occupied).
struct Configuration {
  std::vector<std::uint8_t> occupancy;

  /// Parses a bit string such as "101" (site 0 first).
  static Configuration parse(std::string_view bits);

  std::size_t size() const { return occupancy.size(); }
  bool occupied(std::size_t site) const { return occupancy.at(site) != 0; }
  std::size_t electrons() const;
  std::string str() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// A single site flipped between two configurations.
struct SiteToggle {
  std::size_t site = 0;
  Toggle direction = Toggle::fill;

  friend bool operator==(const SiteToggle&, const SiteToggle&) = default;
};

/// Returns the toggled site when `to` differs from `from` in exactly one site.
std::optional<SiteToggle> single_toggle(const Configuration& from, const Configuration& to);

/// True when `a` and `b` differ by moving one electron between two sites.
bool is_single_hop(const Configuration& a, const Configuration& b);

/// Ordered list of configurations; the order fixes the density-matrix indices.
struct StateSpace {
  std::size_t sites = 0;
  std::vector<Configuration> states;
  /// Either empty or one label per state.
  std::vector<std::string> labels;

  std::size_t size() const { return states.size(); }
  std::string label(std::size_t state) const;
  std::optional<std::size_t> find(const Configuration& c) const;
  std::optional<std::size_t> find(std::string_view label) const;

  friend bool operator==(const StateSpace&, const StateSpace&) = default;
};

/// Hopping matrix element between two states (symmetric, real).
struct CoherentCoupling {
  std::size_t a = 0;
  std::size_t b = 0;
  double omega = 0.0;

  friend bool operator==(const CoherentCoupling&, const CoherentCoupling&) = default;
};

/// Transition `from -> to` at `rate` caused by tunneling to or from a reservoir.
/// The toggled site and its direction follow from the two configurations; see
/// channel_toggle().
struct IncoherentChannel {
  std::size_t from = 0;
  std::size_t to = 0;
  double rate = 0.0;

  friend bool operator==(const IncoherentChannel&, const IncoherentChannel&) = default;
};

struct RateModel {
  StateSpace space;
  /// Level energy per state; empty means all zero.
  std::vector<double> energies;
  std::vector<CoherentCoupling> couplings;
  std::vector<IncoherentChannel> channels;

  std::size_t size() const { return space.size(); }
  double energy(std::size_t state) const { return energies.empty() ? 0.0 : energies.at(state); }

  friend bool operator==(const RateModel&, const RateModel&) = default;
};

/// Site/direction of a channel. Only meaningful for validated models.
SiteToggle channel_toggle(const RateModel& model, const IncoherentChannel& channel);

struct Violation {
  std::string message;
  /// State, coupling or channel indices the message refers to.
  std::vector<std::size_t> indices;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool mentions(std::string_view text) const;
  std::string str() const;
};

/// Checks every structural invariant of a model. Never throws; each
/// violation becomes one report entry.
ValidationReport validate_model(const RateModel& model);

/// Throws ModelError carrying the full report when the model is invalid.
void require_valid(const RateModel& model);

}  // namespace qdrate

#endif  // QDRATE_MODEL_HPP
