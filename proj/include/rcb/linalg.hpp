#pragma once

#include <Eigen/Core>

#include <cmath>
#include <utility>

namespace rcb {

/// Determinant by Gaussian elimination with partial pivoting on |entry|.
/// Product of the pivots, sign flipped once per row swap.
template <typename Derived>
typename Derived::Scalar lu_determinant(const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(matrix.rows() == matrix.cols());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = matrix;
  const Eigen::Index n = a.rows();
  Scalar det{1};
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index row = col + 1; row < n; ++row)
      if (std::abs(a(row, col)) > std::abs(a(pivot, col))) pivot = row;
    if (a(pivot, col) == Scalar{0}) return Scalar{0};
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index row = col + 1; row < n; ++row) {
      const Scalar factor = a(row, col) / a(col, col);
      a.row(row).tail(n - col - 1) -= factor * a.row(col).tail(n - col - 1);
    }
  }
  return det;
}

}  // namespace rcb
