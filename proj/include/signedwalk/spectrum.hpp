// Copyright 2026 The signedwalk Authors
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

#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "signedwalk/errors.hpp"

namespace signedwalk {

struct JacobiOptions {
  // Converged when the off-diagonal Frobenius mass drops below
  // relative_tolerance * ||A||_F.
  double relative_tolerance = 1e-14;
  int max_sweeps = 100;
  // Eigenvalues closer than this (times max(1, ||A||_max)) share a projector.
  double grouping_tolerance = 1e-8;
  double symmetry_tolerance = 1e-12;
};

/// Contiguous run of (numerically) equal eigenvalues in a Spectrum.
template <typename Scalar>
struct Eigenspace {
  Scalar value;
  Eigen::Index first;
  Eigen::Index dimension;
};

/// Eigenvalues in descending order with orthonormal eigenvector columns.
template <typename Scalar>
class Spectrum {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Spectrum(Vector eigenvalues, Matrix eigenvectors,
           std::vector<Eigenspace<Scalar>> spaces)
      : values_(std::move(eigenvalues)),
        vectors_(std::move(eigenvectors)),
        spaces_(std::move(spaces)) {}

  Eigen::Index size() const { return values_.size(); }
  const Vector& eigenvalues() const { return values_; }
  const Matrix& eigenvectors() const { return vectors_; }
  const std::vector<Eigenspace<Scalar>>& eigenspaces() const {
    return spaces_;
  }

  // Orthogonal projector E_alpha onto the i-th distinct eigenspace.
  Matrix projector(std::size_t i) const {
    const auto& s = spaces_.at(i);
    const auto block = vectors_.middleCols(s.first, s.dimension);
    return block * block.transpose();
  }

  Matrix reconstruct() const {
    return vectors_ * values_.asDiagonal() * vectors_.transpose();
  }

 private:
  Vector values_;
  Matrix vectors_;
  std::vector<Eigenspace<Scalar>> spaces_;
};

namespace detail {

template <typename Scalar>
Scalar off_diagonal_norm(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  Scalar sum = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

}  // namespace detail

/// Cyclic Jacobi eigendecomposition of a real symmetric matrix.
///
/// Rotations sweep the strict upper triangle in row-major order; during the
/// first three sweeps pivots below 0.2 * off / n^2 are skipped. The result is
/// deterministic for a fixed input.
template <typename Derived>
Spectrum<typename Derived::Scalar> eig_sym(const Eigen::MatrixBase<Derived>& input,
                                           const JacobiOptions& options = {}) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using std::abs;
  using std::sqrt;

  if (input.rows() != input.cols()) {
    throw DomainError("eig_sym requires a square matrix");
  }
  Matrix a = input;
  const Eigen::Index n = a.rows();
  const Scalar max_abs = n == 0 ? Scalar(0) : a.cwiseAbs().maxCoeff();
  if (n > 0 && (a - a.transpose()).cwiseAbs().maxCoeff() >
                   Scalar(options.symmetry_tolerance) *
                       std::max(Scalar(1), max_abs)) {
    throw DomainError("eig_sym requires a symmetric matrix");
  }
  a = (a + a.transpose()) / Scalar(2);
  Matrix v = Matrix::Identity(n, n);

  const Scalar frobenius = a.norm();
  const Scalar target = Scalar(options.relative_tolerance) * frobenius;
  bool converged = false;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    const Scalar off = detail::off_diagonal_norm(a);
    if (off <= target) {
      converged = true;
      break;
    }
    const Scalar threshold =
        sweep < 3 ? Scalar(0.2) * off / Scalar(n * n) : Scalar(0);
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0) || abs(apq) <= threshold) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        Scalar t;
        if (abs(theta) > Scalar(1e150)) {
          t = Scalar(1) / (Scalar(2) * theta);
        } else {
          t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
              (abs(theta) + sqrt(theta * theta + Scalar(1)));
        }
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        const Scalar tau = s / (Scalar(1) + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = Scalar(0);
        for (Eigen::Index j = 0; j < n; ++j) {
          if (j != p && j != q) {
            const Scalar g = a(j, p);
            const Scalar h = a(j, q);
            a(j, p) = a(p, j) = g - s * (h + g * tau);
            a(j, q) = a(q, j) = h + s * (g - h * tau);
          }
          const Scalar g = v(j, p);
          const Scalar h = v(j, q);
          v(j, p) = g - s * (h + g * tau);
          v(j, q) = h + s * (g - h * tau);
        }
      }
    }
  }
  if (!converged && detail::off_diagonal_norm(a) > target) {
    throw std::runtime_error("Jacobi iteration did not converge");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });
  Vector values(n);
  Matrix vectors(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto src = order[static_cast<std::size_t>(i)];
    values[i] = a(src, src);
    vectors.col(i) = v.col(src);
  }

  const Scalar group_tol = Scalar(options.grouping_tolerance) *
                           std::max(Scalar(1), max_abs);
  std::vector<Eigenspace<Scalar>> spaces;
  for (Eigen::Index i = 0; i < n;) {
    Eigen::Index j = i + 1;
    while (j < n && values[j - 1] - values[j] < group_tol) ++j;
    spaces.push_back({values.segment(i, j - i).mean(), i, j - i});
    i = j;
  }
  return Spectrum<Scalar>(std::move(values), std::move(vectors),
                          std::move(spaces));
}

}  // namespace signedwalk
