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

// Real linear generator of the density-matrix rate equations.
//
// Hermitian n x n matrices are stored as n^2 real coordinates: the n
// populations first, then (Re, Im) of every upper-triangle element in
// row-major order. With that layout the generator is a real matrix and
// Hermiticity of the evolved state holds by construction.

#ifndef QDRATE_LIOUVILLIAN_HPP
#define QDRATE_LIOUVILLIAN_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdrate/model.hpp"

namespace qdrate {

/// Index arithmetic for the real coordinatization of Hermitian matrices.
class HermitianCoords {
 public:
  explicit HermitianCoords(std::size_t n) : n_(n) {}

  std::size_t dim() const { return n_; }
  std::size_t size() const { return n_ * n_; }

  std::size_t pop(std::size_t i) const { return i; }
  /// Requires i < j.
  std::size_t re(std::size_t i, std::size_t j) const { return n_ + 2 * pair_index(i, j); }
  std::size_t im(std::size_t i, std::size_t j) const { return re(i, j) + 1; }

  /// Human-readable name of a coordinate, e.g. "pop(c)" or "im(c,d)".
  std::string name(std::size_t coord, const StateSpace* space = nullptr) const;

  Eigen::VectorXd to_coords(const Eigen::MatrixXcd& sigma) const;
  Eigen::MatrixXcd to_matrix(const Eigen::VectorXd& coords) const;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }

  std::size_t n_;
};

/// Generator L of d(sigma)/dt = L sigma on the real coordinates.
///
/// A Liouvillian may act on a subset of coordinates (its support). Rows
/// outside the support are zero, so those coordinates stay frozen, and rows
/// inside never read coordinates outside it. Printed equation sets that cover
/// only some coherences are represented this way.
class Liouvillian {
 public:
  /// Full support.
  Liouvillian(std::size_t dim, Eigen::MatrixXd matrix);
  /// Restricted support; `support` must contain every population coordinate.
  Liouvillian(std::size_t dim, Eigen::MatrixXd matrix, std::vector<std::size_t> support);

  std::size_t dim() const { return dim_; }
  HermitianCoords coords() const { return HermitianCoords(dim_); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const std::vector<std::size_t>& support() const { return support_; }
  bool full_support() const { return static_cast<Eigen::Index>(support_.size()) == matrix_.rows(); }
  bool in_support(std::size_t coord) const;

  /// The matrix restricted to support rows and columns.
  Eigen::MatrixXd active_matrix() const;

  double coefficient(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  Eigen::VectorXd apply(const Eigen::VectorXd& coords) const { return matrix_ * coords; }
  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& sigma) const;

 private:
  std::size_t dim_;
  Eigen::MatrixXd matrix_;
  std::vector<std::size_t> support_;
};

/// Accumulates complex rate-equation terms
///   d sigma_ab / dt += coefficient * sigma_pq
/// for targets on or above the diagonal and converts them to real form.
class RateEquationBuilder {
 public:
  explicit RateEquationBuilder(std::size_t n);

  void add(std::size_t a, std::size_t b, std::size_t p, std::size_t q,
           std::complex<double> coefficient);

  Liouvillian finish() const;
  Liouvillian finish(std::vector<std::size_t> support) const;

 private:
  HermitianCoords coords_;
  Eigen::MatrixXd matrix_;
};

/// A coherence-transfer term: sigma_{from_a from_b} feeds sigma_{to_a to_b}.
struct TransferTerm {
  std::size_t from_a = 0;
  std::size_t from_b = 0;
  std::size_t to_a = 0;
  std::size_t to_b = 0;
  double coefficient = 0.0;
};

/// All pairs of channels a'->a, b'->b (a < b) that flip the same site in the
/// same direction; coefficient is the mean of their rates.
std::vector<TransferTerm> coherence_transfer_pairs(const RateModel& model);

/// Assembles the generator of the modified rate equations for `model`.
/// Throws ModelError for an invalid model.
Liouvillian build_liouvillian(const RateModel& model);

struct CoefficientDiff {
  std::size_t row = 0;
  std::size_t col = 0;
  double reference = 0.0;
  double other = 0.0;
};

/// Entries in the support rows of `other` where the two generators differ by
/// more than `tolerance` (zero means exact equality).
std::vector<CoefficientDiff> diff_on_support(const Liouvillian& reference, const Liouvillian& other,
                                             double tolerance = 0.0);

}  // namespace qdrate

#endif  // QDRATE_LIOUVILLIAN_HPP
