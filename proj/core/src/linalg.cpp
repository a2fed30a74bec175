#include "orbitkit/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace orbitkit::linalg {

Matrix expm(const Matrix& a) {
  if (a.size() == 0) return a;
  return a.exp();
}

namespace {

template <typename M>
M null_space_impl(const M& a, double threshold, int dim) {
  const Eigen::Index n = a.cols();
  if (n == 0) return M(0, 0);
  // Pad to a square matrix so the full set of right singular vectors is available.
  M padded = M::Zero(std::max(a.rows(), n), n);
  padded.topRows(a.rows()) = a;
  Eigen::JacobiSVD<M> svd(padded, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int k = dim;
  if (k < 0) {
    k = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s[i] <= threshold) ++k;
    }
  }
  k = std::clamp(k, 0, static_cast<int>(n));
  return svd.matrixV().rightCols(k);
}

template <typename M>
int rank_impl(const M& a, double threshold) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<M> svd(a);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > threshold) ++r;
  }
  return r;
}

}  // namespace

Matrix null_space(const Matrix& a, double threshold, int dim) {
  return null_space_impl(a, threshold, dim);
}
CMatrix null_space(const CMatrix& a, double threshold, int dim) {
  return null_space_impl(a, threshold, dim);
}

int rank(const Matrix& a, double threshold) { return rank_impl(a, threshold); }
int rank(const CMatrix& a, double threshold) { return rank_impl(a, threshold); }

Matrix range_basis(const Matrix& a, double threshold) {
  if (a.size() == 0) return Matrix(a.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > threshold) ++r;
  }
  return svd.matrixU().leftCols(r);
}

Matrix orthonormalize(const Matrix& cols, double drop) {
  Matrix out(cols.rows(), 0);
  for (Eigen::Index c = 0; c < cols.cols(); ++c) {
    Vector v = cols.col(c);
    const double original = v.norm();
    if (original == 0.0) continue;
    // Two passes of modified Gram-Schmidt keep the basis orthogonal to rounding.
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < out.cols(); ++k) v -= out.col(k).dot(v) * out.col(k);
    }
    const double nv = v.norm();
    if (nv <= drop * original) continue;
    out.conservativeResize(Eigen::NoChange, out.cols() + 1);
    out.col(out.cols() - 1) = v / nv;
  }
  return out;
}

Matrix min_norm_solve(const Matrix& a, const Matrix& b) {
  if (a.size() == 0) return Matrix::Zero(a.cols(), b.cols());
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
  return cod.solve(b);
}

double distance_to_span(const Matrix& vectors, const Matrix& span, double threshold) {
  if (vectors.cols() == 0) return 0.0;
  const Matrix q = range_basis(span, threshold);
  double worst = 0.0;
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    const Vector v = vectors.col(c);
    const Vector r = q.cols() == 0 ? v : Vector(v - q * (q.transpose() * v));
    worst = std::max(worst, r.norm());
  }
  return worst;
}

}  // namespace orbitkit::linalg
