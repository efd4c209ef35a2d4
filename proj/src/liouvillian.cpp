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

#include "qdrate/liouvillian.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace qdrate {

std::string HermitianCoords::name(std::size_t coord, const StateSpace* space) const {
  auto label = [space](std::size_t i) {
    return space ? space->label(i) : std::to_string(i);
  };
  if (coord < n_) return "pop(" + label(coord) + ")";
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (re(i, j) == coord) return "re(" + label(i) + "," + label(j) + ")";
      if (im(i, j) == coord) return "im(" + label(i) + "," + label(j) + ")";
    }
  }
  return "coord(" + std::to_string(coord) + ")";
}

Eigen::VectorXd HermitianCoords::to_coords(const Eigen::MatrixXcd& sigma) const {
  Eigen::VectorXd x(size());
  for (std::size_t i = 0; i < n_; ++i) x(pop(i)) = sigma(i, i).real();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      x(re(i, j)) = sigma(i, j).real();
      x(im(i, j)) = sigma(i, j).imag();
    }
  }
  return x;
}

Eigen::MatrixXcd HermitianCoords::to_matrix(const Eigen::VectorXd& x) const {
  Eigen::MatrixXcd sigma(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) sigma(i, i) = x(pop(i));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      sigma(i, j) = {x(re(i, j)), x(im(i, j))};
      sigma(j, i) = std::conj(sigma(i, j));
    }
  }
  return sigma;
}

namespace {

std::vector<std::size_t> all_coords(std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = i;
  return v;
}

}  // namespace

Liouvillian::Liouvillian(std::size_t dim, Eigen::MatrixXd matrix)
    : Liouvillian(dim, std::move(matrix), all_coords(dim * dim)) {}

Liouvillian::Liouvillian(std::size_t dim, Eigen::MatrixXd matrix, std::vector<std::size_t> support)
    : dim_(dim), matrix_(std::move(matrix)), support_(std::move(support)) {
  const auto size = static_cast<Eigen::Index>(dim_ * dim_);
  if (matrix_.rows() != size || matrix_.cols() != size) {
    throw ModelError("Liouvillian matrix must be " + std::to_string(size) + "x" + std::to_string(size));
  }
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
    throw ModelError("Liouvillian support has duplicate coordinates");
  }
  if (!support_.empty() && support_.back() >= dim_ * dim_) {
    throw ModelError("Liouvillian support coordinate out of range");
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!in_support(i)) throw ModelError("Liouvillian support must contain every population");
  }
  std::vector<bool> active(dim_ * dim_, false);
  for (auto c : support_) active[c] = true;
  for (Eigen::Index r = 0; r < size; ++r) {
    for (Eigen::Index c = 0; c < size; ++c) {
      if (matrix_(r, c) == 0.0) continue;
      if (!active[r]) throw ModelError("Liouvillian has a nonzero row outside its support");
      if (!active[c]) throw ModelError("Liouvillian support rows read a coordinate outside the support");
    }
  }
}

bool Liouvillian::in_support(std::size_t coord) const {
  return std::binary_search(support_.begin(), support_.end(), coord);
}

Eigen::MatrixXd Liouvillian::active_matrix() const {
  const auto m = static_cast<Eigen::Index>(support_.size());
  Eigen::MatrixXd a(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) a(r, c) = matrix_(support_[r], support_[c]);
  }
  return a;
}

Eigen::MatrixXcd Liouvillian::apply(const Eigen::MatrixXcd& sigma) const {
  const HermitianCoords hc(dim_);
  return hc.to_matrix(matrix_ * hc.to_coords(sigma));
}

RateEquationBuilder::RateEquationBuilder(std::size_t n)
    : coords_(n), matrix_(Eigen::MatrixXd::Zero(n * n, n * n)) {}

void RateEquationBuilder::add(std::size_t a, std::size_t b, std::size_t p, std::size_t q,
                              std::complex<double> coefficient) {
  const std::size_t n = coords_.dim();
  if (a > b || b >= n || p >= n || q >= n) throw ModelError("rate equation term index out of range");
  const double cr = coefficient.real();
  const double ci = coefficient.imag();

  // coefficient * sigma_pq split into its real and imaginary parts, written as
  // row contributions on the coordinates of sigma_pq.
  auto accumulate = [&](std::size_t row_re, std::size_t row_im, bool diagonal_target) {
    if (p == q) {
      matrix_(row_re, coords_.pop(p)) += cr;
      if (!diagonal_target) matrix_(row_im, coords_.pop(p)) += ci;
      return;
    }
    const bool upper = p < q;
    const std::size_t x = upper ? coords_.re(p, q) : coords_.re(q, p);
    const std::size_t y = upper ? coords_.im(p, q) : coords_.im(q, p);
    // sigma_pq = x + i s y with s = +1 above the diagonal, -1 below.
    if (upper) {
      matrix_(row_re, x) += cr;
      matrix_(row_re, y) += -ci;
      if (!diagonal_target) {
        matrix_(row_im, x) += ci;
        matrix_(row_im, y) += cr;
      }
    } else {
      matrix_(row_re, x) += cr;
      matrix_(row_re, y) += ci;
      if (!diagonal_target) {
        matrix_(row_im, x) += ci;
        matrix_(row_im, y) += -cr;
      }
    }
  };

  if (a == b) {
    accumulate(coords_.pop(a), coords_.pop(a), true);
  } else {
    accumulate(coords_.re(a, b), coords_.im(a, b), false);
  }
}

Liouvillian RateEquationBuilder::finish() const { return Liouvillian(coords_.dim(), matrix_); }

Liouvillian RateEquationBuilder::finish(std::vector<std::size_t> support) const {
  return Liouvillian(coords_.dim(), matrix_, std::move(support));
}

std::vector<TransferTerm> coherence_transfer_pairs(const RateModel& model) {
  std::vector<TransferTerm> terms;
  const auto& channels = model.channels;
  for (const auto& first : channels) {
    const auto t1 = channel_toggle(model, first);
    for (const auto& second : channels) {
      if (first.to >= second.to) continue;
      if (channel_toggle(model, second) != t1) continue;
      terms.push_back({first.from, second.from, first.to, second.to, 0.5 * (first.rate + second.rate)});
    }
  }
  std::sort(terms.begin(), terms.end(), [](const TransferTerm& l, const TransferTerm& r) {
    return std::tie(l.to_a, l.to_b, l.from_a, l.from_b) < std::tie(r.to_a, r.to_b, r.from_a, r.from_b);
  });
  return terms;
}

Liouvillian build_liouvillian(const RateModel& model) {
  require_valid(model);
  const std::size_t n = model.size();
  const std::complex<double> i_unit(0.0, 1.0);

  std::vector<double> escape(n, 0.0);
  for (const auto& ch : model.channels) escape[ch.from] += ch.rate;

  RateEquationBuilder eq(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (a != b) eq.add(a, b, a, b, i_unit * (model.energy(b) - model.energy(a)));

      // i (sum_b' sigma_ab' Omega_b'b - sum_a' Omega_aa' sigma_a'b)
      for (const auto& c : model.couplings) {
        for (auto [p, q] : {std::pair{c.a, c.b}, std::pair{c.b, c.a}}) {
          if (q == b) eq.add(a, b, a, p, i_unit * c.omega);
          if (p == a) eq.add(a, b, q, b, -i_unit * c.omega);
        }
      }

      eq.add(a, b, a, b, -0.5 * (escape[a] + escape[b]));

      if (a == b) {
        for (const auto& ch : model.channels) {
          if (ch.to == a) eq.add(a, a, ch.from, ch.from, ch.rate);
        }
      }
    }
  }
  for (const auto& t : coherence_transfer_pairs(model)) {
    eq.add(t.to_a, t.to_b, t.from_a, t.from_b, t.coefficient);
  }
  return eq.finish();
}

std::vector<CoefficientDiff> diff_on_support(const Liouvillian& reference, const Liouvillian& other,
                                             double tolerance) {
  if (reference.dim() != other.dim()) throw ModelError("cannot compare Liouvillians of different size");
  std::vector<CoefficientDiff> diffs;
  const auto size = other.matrix().cols();
  for (auto row : other.support()) {
    for (Eigen::Index col = 0; col < size; ++col) {
      const double r = reference.coefficient(row, col);
      const double o = other.coefficient(row, col);
      const bool differs = tolerance == 0.0 ? r != o : std::abs(r - o) > tolerance;
      if (differs) diffs.push_back({row, static_cast<std::size_t>(col), r, o});
    }
  }
  return diffs;
}

}  // namespace qdrate
