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

#include "qdrate/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/numeric/odeint.hpp>

namespace qdrate {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr double kKernelThreshold = 1e-10;

using State = std::vector<double>;

struct LinearSystem {
  const Eigen::MatrixXd* a;

  void operator()(const State& x, State& dxdt, double /*t*/) const {
    const auto m = static_cast<Eigen::Index>(x.size());
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), m);
    Eigen::Map<Eigen::VectorXd> dv(dxdt.data(), m);
    dv.noalias() = (*a) * xv;
  }
};

std::string format_time(const char* what, double t) {
  std::ostringstream os;
  os.precision(17);
  os << what << " at t = " << t;
  return os.str();
}

Eigen::VectorXd gather(const Eigen::VectorXd& full, const std::vector<std::size_t>& support) {
  Eigen::VectorXd x(support.size());
  for (std::size_t k = 0; k < support.size(); ++k) x(k) = full(support[k]);
  return x;
}

double population_sum(const Eigen::VectorXd& full, std::size_t n) {
  double tr = 0.0;
  for (std::size_t i = 0; i < n; ++i) tr += full(i);
  return tr;
}

Eigen::JacobiSVD<Eigen::MatrixXd> svd_of(const Eigen::MatrixXd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(a, Eigen::ComputeFullV);
}

std::size_t count_kernel(const Eigen::VectorXd& singular) {
  const double largest = singular.size() ? singular(0) : 0.0;
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < singular.size(); ++i) {
    if (singular(i) <= kKernelThreshold * largest) ++k;
  }
  return k;
}

}  // namespace

SolverError::SolverError(const std::string& what, double time)
    : std::runtime_error(format_time(what.c_str(), time)), time_(time) {}

DegenerateKernelError::DegenerateKernelError(std::size_t kernel_dimension)
    : std::runtime_error("stationary state is not unique: kernel dimension " +
                         std::to_string(kernel_dimension)),
      kernel_dimension_(kernel_dimension) {}

ConvergenceError::ConvergenceError(const std::string& what, double residual)
    : std::runtime_error(what), residual_(residual) {}

std::vector<double> uniform_grid(double t_end, std::size_t points) {
  if (points < 2 || t_end <= 0.0) return {0.0};
  std::vector<double> grid(points);
  for (std::size_t k = 0; k < points; ++k) {
    grid[k] = t_end * static_cast<double>(k) / static_cast<double>(points - 1);
  }
  grid.back() = t_end;
  return grid;
}

Trajectory evolve(const Liouvillian& liouvillian, const DensityMatrix& sigma0, double t_end,
                  const EvolveOptions& options) {
  const std::size_t n = liouvillian.dim();
  if (sigma0.dim() != n) throw ModelError("initial state dimension does not match the generator");
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (!(options.rel_tol > 0.0) || !(options.abs_tol >= 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }

  std::vector<double> targets;
  for (double t : options.output_grid) {
    if (t < 0.0 || t > t_end) throw std::invalid_argument("output time outside [0, t_end]");
    if (t > 0.0) targets.push_back(t);
  }
  targets.push_back(t_end);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  const auto& support = liouvillian.support();
  const Eigen::MatrixXd active = liouvillian.active_matrix();
  Eigen::VectorXd full = sigma0.coords();
  const Eigen::VectorXd x0 = gather(full, support);
  State x(x0.data(), x0.data() + x0.size());
  LinearSystem system{&active};

  const double pop_tolerance = std::max(DensityMatrix::default_tolerance,
                                        10.0 * (options.abs_tol + options.rel_tol));

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(sigma0);

  auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol,
                                         odeint::runge_kutta_dopri5<State>());

  const double scale = active.size() ? active.cwiseAbs().rowwise().sum().maxCoeff() : 0.0;
  double dt = scale > 0.0 ? 1e-2 / scale : t_end;
  if (options.max_step > 0.0) dt = std::min(dt, options.max_step);
  double t = 0.0;

  for (double target : targets) {
    std::size_t attempts = 0;
    while (t < target) {
      const double remaining = target - t;
      if (remaining <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, target)) {
        t = target;
        break;
      }
      double trial = dt;
      if (options.max_step > 0.0) trial = std::min(trial, options.max_step);
      const bool landing = trial >= remaining;
      if (landing) trial = remaining;
      if (!landing && trial < 1e-14 * std::max(1.0, std::abs(t))) throw SolverError("step size underflow", t);
      if (++attempts > options.max_steps) throw SolverError("step budget exhausted", t);

      double t_step = t;
      const double proposed = dt;
      if (stepper.try_step(system, x, t_step, trial) == odeint::success) {
        t = landing ? target : t_step;
        dt = landing ? std::max(proposed, trial) : trial;
      } else {
        dt = trial;
      }
    }

    for (std::size_t k = 0; k < support.size(); ++k) full(support[k]) = x[k];
    const double tr = population_sum(full, n);
    traj.max_trace_drift = std::max(traj.max_trace_drift, std::abs(tr - 1.0));
    if (!(std::abs(tr - 1.0) <= kTraceDriftLimit)) throw SolverError("trace drift exceeds 1e-9", t);
    traj.times.push_back(target);
    traj.states.push_back(DensityMatrix::from_coords(full / tr, n, pop_tolerance));
  }
  return traj;
}

std::size_t kernel_dimension(const Liouvillian& liouvillian) {
  return count_kernel(svd_of(liouvillian.active_matrix()).singularValues());
}

DensityMatrix steady_state_direct(const Liouvillian& liouvillian) {
  const std::size_t n = liouvillian.dim();
  const Eigen::MatrixXd active = liouvillian.active_matrix();
  const auto m = active.rows();
  const std::size_t dim = count_kernel(svd_of(active).singularValues());
  if (dim != 1) throw DegenerateKernelError(dim);

  // Kernel element with unit trace: append the trace row to L and solve the
  // consistent overdetermined system [L; tr] x = [0; 1].
  Eigen::MatrixXd bordered = Eigen::MatrixXd::Zero(m + 1, m);
  bordered.topRows(m) = active;
  const auto& support = liouvillian.support();
  for (Eigen::Index k = 0; k < m; ++k) {
    if (support[k] < n) bordered(m, k) = 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  rhs(m) = 1.0;
  const Eigen::VectorXd x = bordered.colPivHouseholderQr().solve(rhs);

  Eigen::VectorXd full = Eigen::VectorXd::Zero(n * n);
  for (Eigen::Index k = 0; k < m; ++k) full(support[k]) = x(k);
  return DensityMatrix::from_coords(full / population_sum(full, n), n);
}

double relative_residual(const Liouvillian& liouvillian, const DensityMatrix& sigma) {
  const Eigen::MatrixXd active = liouvillian.active_matrix();
  const Eigen::VectorXd x = gather(sigma.coords(), liouvillian.support());
  const double norm = Eigen::JacobiSVD<Eigen::MatrixXd>(active).singularValues()(0);
  const double r = (active * x).norm();
  return norm > 0.0 ? r / norm : r;
}

DensityMatrix steady_state_by_integration(const Liouvillian& liouvillian, const DensityMatrix& sigma0,
                                          double gap_hint, EvolveOptions options) {
  if (!(gap_hint > 0.0)) throw std::invalid_argument("gap hint must be positive");
  constexpr int kChunks = 8;
  constexpr double kSettled = 1e-9;

  const double horizon = 20.0 / gap_hint;
  options.output_grid.clear();
  const Eigen::MatrixXd active = liouvillian.active_matrix();
  DensityMatrix state = sigma0;
  double distance = std::numeric_limits<double>::infinity();
  for (int chunk = 0; chunk < kChunks; ++chunk) {
    // Rough distance to the fixed point: ||L x|| / gap.
    const Eigen::VectorXd x = gather(state.coords(), liouvillian.support());
    distance = (active * x).cwiseAbs().maxCoeff() / gap_hint;
    if (distance <= kSettled) return state;
    state = evolve(liouvillian, state, horizon, options).states.back();
  }
  const Eigen::VectorXd x = gather(state.coords(), liouvillian.support());
  distance = (active * x).cwiseAbs().maxCoeff() / gap_hint;
  if (distance <= kSettled) return state;
  std::ostringstream os;
  os << "steady state not reached after " << kChunks << " horizons of " << horizon
     << "; residual " << distance;
  throw ConvergenceError(os.str(), distance);
}

double spectral_gap(const Liouvillian& liouvillian) {
  const Eigen::MatrixXd active = liouvillian.active_matrix();
  const std::size_t dim = count_kernel(svd_of(active).singularValues());
  if (dim != 1) throw DegenerateKernelError(dim);

  Eigen::EigenSolver<Eigen::MatrixXd> es(active, false);
  if (es.info() != Eigen::Success) throw SolverError("eigenvalue computation failed", 0.0);
  std::vector<std::complex<double>> eig(es.eigenvalues().data(),
                                        es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(eig.begin(), eig.end(),
            [](const auto& l, const auto& r) { return std::abs(l) < std::abs(r); });
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < eig.size(); ++k) gap = std::min(gap, std::abs(eig[k].real()));
  const double scale = active.cwiseAbs().maxCoeff();
  if (!(gap > kKernelThreshold * scale)) throw SolverError("generator has a non-decaying mode", 0.0);
  return gap;
}

}  // namespace qdrate
