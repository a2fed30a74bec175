#pragma once

#include <functional>
#include <random>
#include <string>

#include "orbitkit/lie_algebra.hpp"

namespace orbitkit {

/// Draws Ad-matrices Ad(g) for g Haar-distributed on a compact group.
class HaarSampler {
 public:
  using Rng = std::mt19937_64;
  using Draw = std::function<Matrix(Rng&)>;

  HaarSampler(std::string name, int dim, Draw draw)
      : name_(std::move(name)), dim_(dim), draw_(std::move(draw)) {}

  /// Sampler for su2, so3 or su3 in the catalog basis. Throws
  /// NoSamplerAvailable for anything else, including files that reuse a
  /// compact name with different structure constants.
  static HaarSampler for_algebra(const LieAlgebra& alg);

  /// Always returns the identity; useful to check the averaging plumbing.
  static HaarSampler identity(int dim);

  [[nodiscard]] Matrix operator()(Rng& rng) const { return draw_(rng); }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int dim() const { return dim_; }

 private:
  std::string name_;
  int dim_;
  Draw draw_;
};

/// Haar unitary from the QR factorization of a complex Gaussian matrix,
/// with the diagonal phases of R divided out.
[[nodiscard]] CMatrix haar_unitary(int n, std::mt19937_64& rng);

/// Uniform rotation from a normalized Gaussian quaternion.
[[nodiscard]] Matrix haar_rotation(std::mt19937_64& rng);

/// Ad-matrix of U acting by conjugation on an anti-Hermitian basis T_a that
/// satisfies tr(T_a T_b) = -delta_ab / 2.
[[nodiscard]] Matrix conjugation_ad_matrix(const CMatrix& u, const std::vector<CMatrix>& basis);

/// -(i/2) sigma_k for su2, -(i/2) lambda_a for su3.
[[nodiscard]] std::vector<CMatrix> su_basis(int n);

}  // namespace orbitkit
