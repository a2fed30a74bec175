#pragma once

#include "orbitkit/types.hpp"

// Small dense helpers shared by the geometry modules.
namespace orbitkit::linalg {

template <typename Derived>
[[nodiscard]] double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

/// Matrix exponential (scaling and squaring with a Pade core).
[[nodiscard]] Matrix expm(const Matrix& a);

/// Orthonormal basis (columns) of the null space, using singular values
/// <= threshold. If `dim` is nonnegative, exactly that many of the smallest
/// singular directions are returned instead.
[[nodiscard]] Matrix null_space(const Matrix& a, double threshold, int dim = -1);
[[nodiscard]] CMatrix null_space(const CMatrix& a, double threshold, int dim = -1);

/// Numerical rank: singular values > threshold.
[[nodiscard]] int rank(const Matrix& a, double threshold);
[[nodiscard]] int rank(const CMatrix& a, double threshold);

/// Orthonormal basis of the column range with singular values > threshold.
[[nodiscard]] Matrix range_basis(const Matrix& a, double threshold);

/// Modified Gram-Schmidt on the columns in order, dropping columns whose
/// residual norm falls below `drop` relative to the input column.
[[nodiscard]] Matrix orthonormalize(const Matrix& cols, double drop = 1e-10);

/// Minimum-norm least-squares solution of a x = b.
[[nodiscard]] Matrix min_norm_solve(const Matrix& a, const Matrix& b);

/// Distance from each column of `vectors` to span(cols of `span`); returns the max.
[[nodiscard]] double distance_to_span(const Matrix& vectors, const Matrix& span, double threshold);

}  // namespace orbitkit::linalg
