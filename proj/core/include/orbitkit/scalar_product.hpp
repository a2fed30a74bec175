#pragma once

#include <optional>

#include "orbitkit/types.hpp"

namespace orbitkit {

/// Symmetric bilinear form <u, v> = u^T G v on an algebra.
class ScalarProduct {
 public:
  /// `gram` must be square and symmetric up to rounding (relative 1e-12);
  /// the stored matrix is exactly symmetric.
  explicit ScalarProduct(Matrix gram);

  static ScalarProduct euclidean(int n) { return ScalarProduct(Matrix::Identity(n, n)); }

  [[nodiscard]] const Matrix& gram() const { return gram_; }
  [[nodiscard]] int dim() const { return static_cast<int>(gram_.rows()); }
  [[nodiscard]] double operator()(const Element& u, const Element& v) const {
    return u.dot(gram_ * v);
  }

  /// |det G| / ||G||_2^n below 1e-12 (product of singular values relative to the largest).
  [[nodiscard]] bool is_degenerate() const { return degenerate_; }

  [[nodiscard]] std::optional<double> cached_invariance_residual() const { return residual_; }
  [[nodiscard]] ScalarProduct with_invariance_residual(double residual) const;

 private:
  Matrix gram_;
  bool degenerate_ = false;
  std::optional<double> residual_;
};

inline constexpr double kDegeneracyThreshold = 1e-12;

}  // namespace orbitkit
