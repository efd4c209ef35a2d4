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

#include "qdrate/observables.hpp"

#include <cmath>
#include <map>

namespace qdrate {

void CollectorSpec::validate(std::size_t dim) const {
  for (const auto& e : entries) {
    if (e.state >= dim) throw ModelError("collector state " + std::to_string(e.state) + " out of range");
    if (!(e.width >= 0.0)) throw ModelError("collector width must be nonnegative");
  }
}

DetectorPartition DetectorPartition::from_space(const StateSpace& space, std::size_t detector_site) {
  if (detector_site >= space.sites) throw ModelError("detector site out of range");
  DetectorPartition p;
  std::map<std::vector<std::uint8_t>, std::size_t> reduced;
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto occupancy = space.states[i].occupancy;
    p.detector_occupied.push_back(occupancy.at(detector_site) != 0);
    occupancy[detector_site] = 0;
    auto [it, inserted] = reduced.emplace(occupancy, p.reduced_dim);
    if (inserted) {
      ++p.reduced_dim;
      // Reduced states are named after their detector-empty member when it exists.
      p.reduced_labels.push_back(space.label(i));
    } else if (!p.detector_occupied.back()) {
      p.reduced_labels[it->second] = space.label(i);
    }
    p.reduced_state.push_back(it->second);
  }
  p.validate(space.size());
  return p;
}

DetectorPartition DetectorPartition::identity(const StateSpace& space) {
  DetectorPartition p;
  p.reduced_dim = space.size();
  for (std::size_t i = 0; i < space.size(); ++i) {
    p.detector_occupied.push_back(false);
    p.reduced_state.push_back(i);
    p.reduced_labels.push_back(space.label(i));
  }
  return p;
}

void DetectorPartition::validate(std::size_t dim) const {
  if (detector_occupied.size() != dim || reduced_state.size() != dim) {
    throw ModelError("detector partition does not cover all " + std::to_string(dim) + " states");
  }
  std::vector<int> empty_count(reduced_dim, 0);
  std::vector<int> full_count(reduced_dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (reduced_state[i] >= reduced_dim) throw ModelError("detector partition maps outside reduced space");
    ++(detector_occupied[i] ? full_count : empty_count)[reduced_state[i]];
  }
  for (std::size_t r = 0; r < reduced_dim; ++r) {
    if (empty_count[r] > 1 || full_count[r] > 1 || empty_count[r] + full_count[r] == 0) {
      throw ModelError("reduced state " + std::to_string(r) + " is not a detector pair");
    }
  }
}

double current(const DensityMatrix& sigma, const CollectorSpec& spec) {
  spec.validate(sigma.dim());
  double i = 0.0;
  for (const auto& e : spec.entries) i += sigma.population(e.state) * e.width;
  return i;
}

Eigen::MatrixXcd trace_out_detector(const Eigen::MatrixXcd& sigma, const DetectorPartition& partition) {
  const auto n = static_cast<std::size_t>(sigma.rows());
  partition.validate(n);
  Eigen::MatrixXcd bar = Eigen::MatrixXcd::Zero(partition.reduced_dim, partition.reduced_dim);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (partition.detector_occupied[p] != partition.detector_occupied[q]) continue;
      bar(partition.reduced_state[p], partition.reduced_state[q]) += sigma(p, q);
    }
  }
  return bar;
}

DensityMatrix trace_out_detector(const DensityMatrix& sigma, const DetectorPartition& partition) {
  return DensityMatrix(trace_out_detector(sigma.matrix(), partition));
}

std::vector<double> accumulated_charge(const Trajectory& trajectory, const CollectorSpec& spec) {
  std::vector<double> q;
  q.reserve(trajectory.size());
  double previous = 0.0;
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    const double i = current(trajectory.states[k], spec);
    if (k == 0) {
      q.push_back(0.0);
    } else {
      const double dt = trajectory.times[k] - trajectory.times[k - 1];
      q.push_back(q.back() + 0.5 * dt * (previous + i));
    }
    previous = i;
  }
  return q;
}

double coherence_magnitude(const DensityMatrix& sigma_bar, std::size_t i, std::size_t j) {
  if (i == j) throw ModelError("coherence needs two distinct states");
  if (i >= sigma_bar.dim() || j >= sigma_bar.dim()) throw ModelError("coherence index out of range");
  return std::abs(sigma_bar(i, j));
}

}  // namespace qdrate
