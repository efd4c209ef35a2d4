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

#include "qdrate/density_matrix.hpp"

#include <cmath>
#include <string>

#include "qdrate/liouvillian.hpp"
#include "qdrate/model.hpp"

namespace qdrate {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd sigma, double tolerance) : sigma_(std::move(sigma)) {
  if (sigma_.rows() == 0 || sigma_.rows() != sigma_.cols()) {
    throw ModelError("density matrix must be square and nonempty");
  }
  const double asym = (sigma_ - sigma_.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= tolerance)) {
    throw ModelError("density matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
  }
  const double tr = sigma_.trace().real();
  if (!(std::abs(tr - 1.0) <= tolerance)) {
    throw ModelError("density matrix trace " + std::to_string(tr) + " differs from 1");
  }
  for (Eigen::Index i = 0; i < sigma_.rows(); ++i) {
    const double p = sigma_(i, i).real();
    if (p < -tolerance || p > 1.0 + tolerance) {
      throw ModelError("population " + std::to_string(i) + " = " + std::to_string(p) +
                       " outside [0, 1]");
    }
  }
}

DensityMatrix DensityMatrix::pure(std::size_t dim, std::size_t state) {
  if (state >= dim) throw ModelError("pure state index out of range");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(state, state) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_coords(const Eigen::VectorXd& coords, std::size_t dim,
                                         double tolerance) {
  if (static_cast<std::size_t>(coords.size()) != dim * dim) {
    throw ModelError("coordinate vector has wrong length");
  }
  return DensityMatrix(HermitianCoords(dim).to_matrix(coords), tolerance);
}

Eigen::VectorXd DensityMatrix::coords() const { return HermitianCoords(dim()).to_coords(sigma_); }

double DensityMatrix::max_distance(const DensityMatrix& other) const {
  if (other.dim() != dim()) throw ModelError("density matrices differ in dimension");
  return (sigma_ - other.sigma_).cwiseAbs().maxCoeff();
}

}  // namespace qdrate
