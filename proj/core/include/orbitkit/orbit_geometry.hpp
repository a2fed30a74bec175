#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/lie_algebra.hpp"
#include "orbitkit/scalar_product.hpp"
#include "orbitkit/spectral.hpp"

namespace orbitkit {

/// X_v(w) = [v, w] = -ad_w v.
[[nodiscard]] Element fundamental_vector(const LieAlgebra& alg, const Element& v, const Element& w);

/// J_w on im ad_w, expressed in the decomposition's image basis.
struct ComplexStructure {
  Element basepoint;
  Matrix image_basis;
  Matrix matrix;
  std::vector<int> block_offsets;
  std::vector<int> block_dims;

  /// J applied to an element of im ad_w given in algebra coordinates.
  [[nodiscard]] Element apply(const SpectralDecomposition& d, const Element& x) const;
};

/// On each E_mu, J = ad_w / mu.
[[nodiscard]] ComplexStructure canonical_J(const SpectralDecomposition& d);

/// ||J^2 + I||_max.
[[nodiscard]] double j_squared_residual(const ComplexStructure& j);

/// ||(I - P_mu) ad_w B_mu|| over blocks, i.e. how far ad_w leaks out of each E_mu.
[[nodiscard]] double j_block_leakage(const SpectralDecomposition& d);

/// Ad-equivariant map s: g -> g feeding the transgression form
/// omega_s(X_u, X_v) = <s(w), [u, v]>.
class EquivariantMap {
 public:
  enum class Kind { Identity, Scaled, Linear, BlackBox };
  using Callback = std::function<Element(const Element&)>;

  static EquivariantMap identity();
  static EquivariantMap scaled(double c);
  /// S must commute with every ad_v; the commutator residual is cached.
  static EquivariantMap linear(const LieAlgebra& alg, Matrix s);
  /// fd_step <= 0 selects the default 1e-6 (1 + ||w||).
  static EquivariantMap black_box(Callback f, double fd_step = 0.0);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] double scale() const { return scale_; }
  [[nodiscard]] const Matrix& linear_map() const { return linear_; }
  [[nodiscard]] bool has_linearization() const { return kind_ != Kind::BlackBox; }
  /// Point-independent residual for Identity/Scaled/Linear; nullopt for BlackBox.
  [[nodiscard]] std::optional<double> cached_residual() const { return cached_residual_; }
  [[nodiscard]] std::string describe() const;

  [[nodiscard]] Element operator()(const Element& w) const;
  /// ds_w(direction): exact for linear kinds, central differences for BlackBox.
  [[nodiscard]] Element differential(const Element& w, const Element& direction) const;

 private:
  Kind kind_ = Kind::Identity;
  double scale_ = 1.0;
  Matrix linear_;
  Callback callback_;
  double fd_step_ = 0.0;
  std::optional<double> cached_residual_;
};

/// max over basis u of ||ds_w(ad_u w) - ad_u s(w)|| / (1 + ||s(w)||).
[[nodiscard]] double equivariance_residual(const LieAlgebra& alg, const EquivariantMap& s,
                                           const Element& w);

struct Tolerances {
  double spectral = kDefaultTol;
  double equivariance = 1e-7;
  double invariance = 1e-8;
  double degeneracy = 1e-9;
};

/// <s(w), [u, v]>. Throws NonEquivariantMap or NonInvariantProduct.
[[nodiscard]] double omega_s(const LieAlgebra& alg, const ScalarProduct& p, const EquivariantMap& s,
                             const Element& w, const Element& u, const Element& v,
                             const Tolerances& tol = {});

/// Omega_ab = omega_s(X_{u_a}, X_{u_b}) where X_{u_a}(w) is the a-th image basis vector.
struct TwoFormMatrix {
  Element basepoint;
  Matrix tangent_basis;
  /// Generator u_a in column a, with [u_a, w] = tangent_basis.col(a).
  Matrix generators;
  Matrix matrix;
};

/// Generators are the minimum-norm solutions of ad_w u_a = -b_a. Throws
/// TrivialOrbit when im ad_w = 0 and DegenerateForm when Omega is singular.
[[nodiscard]] TwoFormMatrix two_form_matrix(const LieAlgebra& alg, const ScalarProduct& p,
                                            const EquivariantMap& s, const SpectralDecomposition& d,
                                            const Tolerances& tol = {});

/// Same, with caller-chosen generators (any preimages of -b_a under ad_w).
[[nodiscard]] TwoFormMatrix two_form_matrix(const LieAlgebra& alg, const ScalarProduct& p,
                                            const EquivariantMap& s, const SpectralDecomposition& d,
                                            const Matrix& generators, const Tolerances& tol = {});

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Eigenvalue counts of a symmetric matrix with |lambda| < tol * ||m|| counted as zero.
[[nodiscard]] Signature signature_of(const Matrix& symmetric, double tol);

struct MetricGram {
  Element basepoint;
  Matrix tangent_basis;
  Matrix matrix;
  Signature signature;
  /// ||Omega J - (Omega J)^T||_max before symmetrization.
  double asymmetry = 0.0;
};

/// g = Omega J, symmetrized. Throws BasisMismatch.
[[nodiscard]] MetricGram kaehler_metric(const TwoFormMatrix& omega, const ComplexStructure& j,
                                        double tol = kDefaultTol);

/// ||J^T Omega J - Omega||_max. Throws BasisMismatch.
[[nodiscard]] double compatibility_residual(const TwoFormMatrix& omega, const ComplexStructure& j);

/// |d omega_s(X_u, X_v, X_q)(w)| via the invariant formula on fundamental
/// fields, with [X_u, X_v] = -X_[u,v] for the linear fields w -> [u, w].
/// Requires an exact linearization (not BlackBox).
[[nodiscard]] double d_omega_s_residual(const LieAlgebra& alg, const ScalarProduct& p,
                                        const EquivariantMap& s, const Element& w,
                                        const Element& u, const Element& v, const Element& q,
                                        const Tolerances& tol = {});

/// Compares J at Ad(exp(t v)) w with Ad(exp(t v)) J_w Ad(exp(t v))^{-1} on
/// im ad_{Ad(exp(tv)) w}; returns the max-norm difference.
[[nodiscard]] double j_conjugation_residual(const LieAlgebra& alg, const Element& w,
                                            const Element& v, double t, double tol = kDefaultTol);

/// ||ad_w s(w)|| / (1 + ||s(w)||).
[[nodiscard]] double kernel_membership_residual(const LieAlgebra& alg, const EquivariantMap& s,
                                                const Element& w);

struct OrbitReportOptions {
  Tolerances tol;
  int triple_samples = 16;
  std::uint64_t seed = 0;
  /// Sampled (v, t) pairs for the conjugation residual, with |v| = 1 and t in [-1, 1].
  int conjugation_samples = 4;
};

struct BlockSummary {
  double mu = 0.0;
  int dim = 0;
};

struct OrbitStructureReport {
  SkewClassification classification;
  std::vector<BlockSummary> blocks;
  int kernel_dim = 0;
  std::optional<Matrix> j;
  std::optional<Matrix> omega;
  std::optional<Matrix> metric;
  std::optional<Signature> signature;
  bool is_kaehler = false;
  /// Ordered (name, value); every value >= 0.
  std::vector<std::pair<std::string, double>> residuals;
  /// Errors hit while building the structure (kind, message).
  std::vector<std::pair<std::string, std::string>> errors;
  std::vector<std::string> warnings;
  Tolerances tol;

  [[nodiscard]] std::optional<double> residual(const std::string& name) const;
  [[nodiscard]] double max_residual() const;
};

[[nodiscard]] OrbitStructureReport orbit_report(const LieAlgebra& alg, const ScalarProduct& p,
                                                const EquivariantMap& s, const Element& w,
                                                const OrbitReportOptions& options = {});

}  // namespace orbitkit
