#pragma once

// Independent reference computations used by the acceptance checks and the
// tests. Nothing here goes through the ad/eigenblock machinery of the library.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "orbitkit/lie_algebra.hpp"

namespace orbitkit::oracle {

/// K_ij = -sum_{a,b} c[i][a][b] c[j][b][a], by direct contraction.
inline Eigen::MatrixXd killing_contraction(const LieAlgebra& alg) {
  const int n = alg.dim();
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) k(i, j) -= alg.c(i, a, b) * alg.c(j, b, a);
  return k;
}

/// Bracket straight from the structure constants.
inline Eigen::VectorXd bracket(const LieAlgebra& alg, const Eigen::VectorXd& x,
                               const Eigen::VectorXd& y) {
  const int n = alg.dim();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out[k] += x[i] * y[j] * alg.c(i, j, k);
  return out;
}

/// Orthonormal basis of range(ad_w) from an SVD of the matrix built column
/// by column from oracle brackets.
inline Eigen::MatrixXd image_of_ad(const LieAlgebra& alg, const Eigen::VectorXd& w, double tol) {
  const int n = alg.dim();
  Eigen::MatrixXd a(n, n);
  for (int j = 0; j < n; ++j) a.col(j) = bracket(alg, w, Eigen::VectorXd::Unit(n, j));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const double s0 = svd.singularValues()(0);
  int r = 0;
  for (int i = 0; i < n; ++i) r += svd.singularValues()(i) > tol * std::max(1.0, s0) ? 1 : 0;
  return svd.matrixU().leftCols(r);
}

struct SignatureCounts {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Signature of <.,.> restricted to im ad_w, which equals the signature of
/// the orbit metric since each eigenblock is only rescaled by 1/mu > 0.
inline SignatureCounts image_gram_signature(const LieAlgebra& alg, const Eigen::MatrixXd& gram,
                                            const Eigen::VectorXd& w) {
  const Eigen::MatrixXd q = image_of_ad(alg, w, 1e-9);
  const Eigen::MatrixXd restricted = q.transpose() * gram * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(restricted);
  SignatureCounts s;
  const double norm = es.eigenvalues().cwiseAbs().maxCoeff();
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()[i];
    if (std::abs(l) < 1e-9 * norm) ++s.zero;
    else if (l > 0) ++s.positive;
    else ++s.negative;
  }
  return s;
}

inline Eigen::VectorXd gaussian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

}  // namespace orbitkit::oracle
