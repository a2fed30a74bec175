#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitkit/types.hpp"

namespace orbitkit {

/// One stored structure constant c[i][j][k] with i < j, meaning the
/// bracket [e_i, e_j] has coefficient `value` along e_k.
struct StructureEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  double value = 0.0;

  friend bool operator==(const StructureEntry&, const StructureEntry&) = default;
};

struct AlgebraOptions {
  /// Scaled by max(1, max|c|^2) before comparing with jacobi_residual.
  double jacobi_tol = 1e-10;
  /// Accept tensors that fail the Jacobi identity (deliberately broken test inputs).
  bool allow_jacobi_violation = false;
};

/// Finite-dimensional real Lie algebra stored by its structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Immutable after construction.
class LieAlgebra {
 public:
  /// Builds from a sparse list of i < j entries; the j > i half is filled in
  /// by antisymmetry. Repeated (i, j, k) triples and i >= j are rejected.
  LieAlgebra(std::string name, std::vector<std::string> basis_labels,
             std::vector<StructureEntry> entries, AlgebraOptions options = {});

  /// Builds from a dense row-major tensor c[(i*n + j)*n + k]. Antisymmetry
  /// must hold exactly.
  static LieAlgebra from_tensor(std::string name, std::vector<std::string> basis_labels,
                                const std::vector<double>& tensor, AlgebraOptions options = {});

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<std::string>& basis_labels() const { return labels_; }
  /// Entries exactly as supplied (or, for from_tensor, every nonzero i < j entry).
  [[nodiscard]] const std::vector<StructureEntry>& entries() const { return entries_; }

  [[nodiscard]] double c(int i, int j, int k) const {
    return ad_basis_[static_cast<std::size_t>(i)](k, j);
  }

  [[nodiscard]] Element basis(int i) const;
  [[nodiscard]] Element zero() const { return Element::Zero(dim_); }

  [[nodiscard]] Element bracket(const Element& x, const Element& y) const;
  /// Matrix M with M u = [w, u].
  [[nodiscard]] Matrix ad(const Element& w) const;
  /// ad of the i-th basis vector, columns are [e_i, e_j].
  [[nodiscard]] const Matrix& ad_basis(int i) const {
    return ad_basis_[static_cast<std::size_t>(i)];
  }

  /// Largest |c[i][j][k]|.
  [[nodiscard]] double max_abs_constant() const;

  void check_element(const Element& x, const char* what = "element") const;

 private:
  LieAlgebra() = default;
  void finish(const AlgebraOptions& options);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<StructureEntry> entries_;
  std::vector<Matrix> ad_basis_;
  int dim_ = 0;
};

/// Max over basis triples of ||[z,[x,y]] - [[z,x],y] - [x,[z,y]]||.
[[nodiscard]] double jacobi_residual(const LieAlgebra& alg);

/// Max over basis pairs of ||[ad_u, ad_v] - ad_[u,v]||.
[[nodiscard]] double ad_homomorphism_residual(const LieAlgebra& alg);

/// Ad(exp(t v)) realized as exp(t ad_v).
struct AdjointMatrix {
  Matrix matrix;
  /// exp(-t ad_v), computed alongside rather than by inversion.
  Matrix inverse;
  Element generator;
  double time = 0.0;

  [[nodiscard]] Element apply(const Element& x) const { return matrix * x; }
};

[[nodiscard]] AdjointMatrix adjoint_of_exp(const LieAlgebra& alg, const Element& v, double t);

/// Max over basis pairs of ||A [x,y] - [A x, A y]||, i.e. how far A is from
/// an algebra automorphism.
[[nodiscard]] double automorphism_residual(const LieAlgebra& alg, const Matrix& a);

}  // namespace orbitkit

#include "orbitkit/scalar_product.hpp"

namespace orbitkit {

/// K(u, v) = -tr(ad_u ad_v). Note the sign: K is positive semi-definite on
/// compact algebras. The invariance residual is cached on the result.
[[nodiscard]] ScalarProduct killing_form(const LieAlgebra& alg);

}  // namespace orbitkit
