#pragma once

#include <complex>

#include <Eigen/Dense>

namespace orbitkit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Coordinates of an algebra element in the algebra's basis.
using Element = Eigen::VectorXd;

/// Covector on the algebra, paired with elements by alpha(v) = sum_i alpha_i v_i.
struct DualVector {
  Vector coeffs;

  DualVector() = default;
  explicit DualVector(Vector c) : coeffs(std::move(c)) {}

  [[nodiscard]] Eigen::Index size() const { return coeffs.size(); }
  [[nodiscard]] double operator()(const Element& v) const { return coeffs.dot(v); }
};

inline constexpr double kDefaultTol = 1e-9;

}  // namespace orbitkit
