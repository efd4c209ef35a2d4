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

#ifndef QDRATE_DENSITY_MATRIX_HPP
#define QDRATE_DENSITY_MATRIX_HPP

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qdrate {

/// Hermitian, unit-trace matrix over the states of a model. Construction
/// validates the invariants within `tolerance` and throws ModelError on
/// violation.
class DensityMatrix {
 public:
  static constexpr double default_tolerance = 1e-9;

  explicit DensityMatrix(Eigen::MatrixXcd sigma, double tolerance = default_tolerance);

  /// |state><state|
  static DensityMatrix pure(std::size_t dim, std::size_t state);
  static DensityMatrix from_coords(const Eigen::VectorXd& coords, std::size_t dim,
                                   double tolerance = default_tolerance);

  std::size_t dim() const { return static_cast<std::size_t>(sigma_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return sigma_; }
  Eigen::VectorXd coords() const;

  std::complex<double> operator()(std::size_t i, std::size_t j) const { return sigma_(i, j); }
  double population(std::size_t i) const { return sigma_(i, i).real(); }
  double trace() const { return sigma_.trace().real(); }

  /// Largest absolute entry of the difference.
  double max_distance(const DensityMatrix& other) const;

 private:
  Eigen::MatrixXcd sigma_;
};

}  // namespace qdrate

#endif  // QDRATE_DENSITY_MATRIX_HPP
