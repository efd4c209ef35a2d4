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

// Currents, collected charge and detector-traced density matrices.

#ifndef QDRATE_OBSERVABLES_HPP
#define QDRATE_OBSERVABLES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdrate/density_matrix.hpp"
#include "qdrate/model.hpp"
#include "qdrate/solver.hpp"

namespace qdrate {

struct CollectorEntry {
  std::size_t state = 0;
  /// Partial width for tunneling from `state` into the collector.
  double width = 0.0;

  friend bool operator==(const CollectorEntry&, const CollectorEntry&) = default;
};

/// States whose collector-adjacent well is occupied, with their partial widths.
struct CollectorSpec {
  std::vector<CollectorEntry> entries;

  /// Throws ModelError for out-of-range states or negative widths.
  void validate(std::size_t dim) const;

  friend bool operator==(const CollectorSpec&, const CollectorSpec&) = default;
};

/// Maps every state of the full device to (detector bit, reduced state).
struct DetectorPartition {
  std::vector<bool> detector_occupied;
  std::vector<std::size_t> reduced_state;
  std::size_t reduced_dim = 0;
  std::vector<std::string> reduced_labels;

  /// Groups states of `space` that differ only in `detector_site`.
  static DetectorPartition from_space(const StateSpace& space, std::size_t detector_site);
  /// Every state is its own reduced state (no detector).
  static DetectorPartition identity(const StateSpace& space);

  /// Throws ModelError unless the map is total on `dim` states and each
  /// reduced state collects at most one state per detector bit.
  void validate(std::size_t dim) const;
};

/// sum_c sigma_cc * width_c. Reads only the populations.
double current(const DensityMatrix& sigma, const CollectorSpec& spec);

/// Reduced matrix: sum over the detector bit of matching entries. Linear and
/// trace preserving; never renormalizes.
Eigen::MatrixXcd trace_out_detector(const Eigen::MatrixXcd& sigma, const DetectorPartition& partition);
DensityMatrix trace_out_detector(const DensityMatrix& sigma, const DetectorPartition& partition);

/// Q(t) = integral of the current from 0 to t (trapezoidal on the trajectory
/// grid); Q(0) = 0.
std::vector<double> accumulated_charge(const Trajectory& trajectory, const CollectorSpec& spec);

/// |sigma_ij| for i != j.
double coherence_magnitude(const DensityMatrix& sigma_bar, std::size_t i, std::size_t j);

}  // namespace qdrate

#endif  // QDRATE_OBSERVABLES_HPP
