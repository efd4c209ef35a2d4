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

// Time evolution and stationary states of d(sigma)/dt = L sigma.

#ifndef QDRATE_SOLVER_HPP
#define QDRATE_SOLVER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdrate/density_matrix.hpp"
#include "qdrate/liouvillian.hpp"

namespace qdrate {

/// Integration failure (step-size underflow, step budget, trace drift).
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double time);
  /// Simulation time at which the failure happened.
  double time() const { return time_; }

 private:
  double time_;
};

/// The generator does not have exactly one stationary state.
class DegenerateKernelError : public std::runtime_error {
 public:
  explicit DegenerateKernelError(std::size_t kernel_dimension);
  std::size_t kernel_dimension() const { return kernel_dimension_; }

 private:
  std::size_t kernel_dimension_;
};

/// Steady state obtained by integration did not settle within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual);
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct EvolveOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  /// Upper bound on the step size; 0 leaves it unbounded.
  double max_step = 0.0;
  /// Output times in (0, t_end]; t = 0 and t_end are always included.
  std::vector<double> output_grid;
  /// Budget of attempted steps per output interval.
  std::size_t max_steps = 50'000'000;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  /// Largest |trace - 1| seen at an output point before renormalization.
  double max_trace_drift = 0.0;

  std::size_t size() const { return times.size(); }
};

/// Largest trace deviation tolerated at an output point; smaller drift is
/// renormalized away, larger drift is reported as a SolverError.
inline constexpr double kTraceDriftLimit = 1e-9;

/// Integrates the rate equations from sigma0 up to t_end (> 0) with an
/// adaptive Dormand-Prince 5(4) stepper. Coordinates outside the generator's
/// support stay at their initial values.
Trajectory evolve(const Liouvillian& liouvillian, const DensityMatrix& sigma0, double t_end,
                  const EvolveOptions& options = {});

/// Equally spaced grid of `points` samples on [0, t_end].
std::vector<double> uniform_grid(double t_end, std::size_t points);

/// Number of singular values of the active generator below
/// 1e-10 * (largest singular value).
std::size_t kernel_dimension(const Liouvillian& liouvillian);

/// Unique unit-trace kernel element. Throws DegenerateKernelError when the
/// kernel is not one-dimensional.
DensityMatrix steady_state_direct(const Liouvillian& liouvillian);

/// ||L sigma||_2 / ||L||_2 on the active coordinates.
double relative_residual(const Liouvillian& liouvillian, const DensityMatrix& sigma);

/// Tolerances used by steady_state_by_integration unless given: rel 1e-11, abs 1e-13.
inline EvolveOptions steady_integration_options() {
  EvolveOptions o;
  o.rel_tol = 1e-11;
  o.abs_tol = 1e-13;
  return o;
}

/// Integrates for about 20 / gap_hint (repeating up to a small budget) until
/// the state stops moving; throws ConvergenceError with the final residual
/// otherwise.
DensityMatrix steady_state_by_integration(const Liouvillian& liouvillian, const DensityMatrix& sigma0,
                                          double gap_hint, EvolveOptions options = steady_integration_options());

/// Smallest |Re lambda| over the nonzero eigenvalues. Throws
/// DegenerateKernelError when the kernel is not one-dimensional.
double spectral_gap(const Liouvillian& liouvillian);

}  // namespace qdrate

#endif  // QDRATE_SOLVER_HPP
