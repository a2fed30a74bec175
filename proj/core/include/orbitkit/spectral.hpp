#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitkit/errors.hpp"
#include "orbitkit/lie_algebra.hpp"
#include "orbitkit/types.hpp"

namespace orbitkit {

enum class SkewVerdict { SkewSymmetric, NonDiagonalizable, OffAxisEigenvalue };

[[nodiscard]] const char* to_string(SkewVerdict v);

/// Eigenvalues merged within the clustering radius.
struct EigenCluster {
  Complex center;
  /// Mean |Im lambda| over the members; this is mu for an (i mu) cluster.
  double mean_abs_imag = 0.0;
  int algebraic = 0;
  int geometric = 0;
};

struct SkewClassification {
  SkewVerdict verdict = SkewVerdict::SkewSymmetric;
  std::vector<Complex> eigenvalues;
  std::vector<EigenCluster> clusters;
  /// For OffAxisEigenvalue: the eigenvalue with the largest |Re|. For
  /// NonDiagonalizable: the cluster center whose multiplicities disagree.
  std::optional<Complex> offending;
  double tol = kDefaultTol;

  [[nodiscard]] bool is_skew() const { return verdict == SkewVerdict::SkewSymmetric; }
};

/// Classifies a real square operator over C. An operator is skew-symmetric
/// when it is diagonalizable over C and every eigenvalue with |lambda| > tol
/// has |Re lambda| <= tol (1 + |lambda|).
[[nodiscard]] SkewClassification classify_operator(const Matrix& m, double tol = kDefaultTol);

[[nodiscard]] SkewClassification classify_skew(const LieAlgebra& alg, const Element& w,
                                               double tol = kDefaultTol);

class NotSkewSymmetric : public Error {
 public:
  explicit NotSkewSymmetric(SkewClassification c);
  [[nodiscard]] const char* kind() const noexcept override { return "NotSkewSymmetric"; }
  [[nodiscard]] const SkewClassification& classification() const { return classification_; }

 private:
  SkewClassification classification_;
};

/// Real eigenblock E_mu for the eigenvalue pair (i mu, -i mu).
struct EigenBlock {
  double mu = 0.0;
  /// Orthonormal columns (Euclidean coordinate product) ordered as
  /// (x_1, J x_1, x_2, J x_2, ...) when the eigenvectors allow it.
  Matrix basis;
  /// Column offset of this block inside the image basis.
  int offset = 0;

  [[nodiscard]] int dim() const { return static_cast<int>(basis.cols()); }
};

/// g = ker ad_w (+) im ad_w with im ad_w = (+)_mu E_mu, for skew-symmetric w.
class SpectralDecomposition {
 public:
  SpectralDecomposition(Element w, Matrix ad_w, Matrix kernel_basis,
                        std::vector<EigenBlock> blocks, double tol);

  [[nodiscard]] const Element& w() const { return w_; }
  [[nodiscard]] const Matrix& ad_w() const { return ad_w_; }
  [[nodiscard]] const Matrix& kernel_basis() const { return kernel_; }
  [[nodiscard]] const Matrix& image_basis() const { return image_; }
  [[nodiscard]] const std::vector<EigenBlock>& blocks() const { return blocks_; }
  [[nodiscard]] double tol() const { return tol_; }

  [[nodiscard]] int dim() const { return static_cast<int>(w_.size()); }
  [[nodiscard]] int kernel_dim() const { return static_cast<int>(kernel_.cols()); }
  [[nodiscard]] int image_dim() const { return static_cast<int>(image_.cols()); }

  /// Projectors along the splitting g = ker (+) E_mu1 (+) E_mu2 ...
  [[nodiscard]] Matrix kernel_projector() const;
  [[nodiscard]] Matrix block_projector(std::size_t b) const;
  [[nodiscard]] Matrix image_projector() const;

  /// Coordinates of x in the full basis [kernel | image].
  [[nodiscard]] Vector full_coordinates(const Element& x) const { return full_inverse_ * x; }
  /// Image-basis coordinates of x (kernel component discarded).
  [[nodiscard]] Vector image_coordinates(const Element& x) const;

  /// Index of the block containing x to relative tolerance `tol`, if any.
  [[nodiscard]] std::optional<std::size_t> block_of(const Element& x, double tol) const;

 private:
  Element w_;
  Matrix ad_w_;
  Matrix kernel_;
  Matrix image_;
  std::vector<EigenBlock> blocks_;
  Matrix full_inverse_;
  double tol_;
};

/// Throws NotSkewSymmetric when w fails classification.
[[nodiscard]] SpectralDecomposition decompose(const LieAlgebra& alg, const Element& w,
                                              double tol = kDefaultTol);

struct DecompositionResiduals {
  double completeness = 0.0;      // ||P_ker + sum P_mu - I||
  double block_invariance = 0.0;  // max ||(I - P_mu) ad_w P_mu||
  double block_square = 0.0;      // max ||ad_w^2 B_mu + mu^2 B_mu||
  double image_span = 0.0;        // distance between span(image) and range(ad_w)
  bool even_blocks = true;
  bool dimensions_add_up = true;

  [[nodiscard]] double max() const;
};

[[nodiscard]] DecompositionResiduals decomposition_residuals(const SpectralDecomposition& d);

}  // namespace orbitkit
