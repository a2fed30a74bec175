#pragma once

#include <functional>
#include <optional>

#include "orbitkit/orbit_geometry.hpp"
#include "orbitkit/spectral.hpp"

namespace orbitkit {

/// (1,1)-tensor field p -> A_p on R^n.
struct TensorField {
  using Evaluate = std::function<Matrix(const Vector&)>;
  using Derivative = std::function<Matrix(const Vector& p, const Vector& direction)>;

  int dim = 0;
  Evaluate evaluate;
  /// Exact dA_p(Y); central differences are used when absent.
  Derivative derivative;
  /// <= 0 selects the default 1e-5 (1 + ||p||).
  double fd_step = 0.0;

  [[nodiscard]] double step_at(const Vector& p) const;
  [[nodiscard]] Matrix differential(const Vector& p, const Vector& direction) const;
};

/// N_A(X, Y) = A(dA(X) Y - dA(Y) X) - (dA(A X) Y - dA(A Y) X), all at p.
[[nodiscard]] Vector nijenhuis_flat(const TensorField& field, const Vector& p, const Vector& x,
                                    const Vector& y);

struct NijenhuisOptions {
  /// Relative tolerance for block membership of u and v.
  double membership_tol = 1e-7;
  /// Relative tolerance for the kernel component of [u,v] - [Ju, Jv].
  double image_tol = 1e-7;
};

/// Orbit Nijenhuis tensor for u in E_lambda, v in E_mu:
///   (lambda + mu) (J([u,v] - [Ju, Jv]) - [Ju, v] - [u, Jv]).
/// J is only applied to the grouped difference, which lies in im ad_w.
/// Throws BlockMembershipViolation or ImageEscape.
[[nodiscard]] Element nijenhuis_orbit(const LieAlgebra& alg, const SpectralDecomposition& d,
                                      const ComplexStructure& j, const Element& u,
                                      const Element& v, const NijenhuisOptions& options = {});

/// Max ||N(b_a, b_b)|| over all pairs of image basis vectors.
[[nodiscard]] double nijenhuis_sweep(const LieAlgebra& alg, const SpectralDecomposition& d,
                                     const ComplexStructure& j,
                                     const NijenhuisOptions& options = {});

}  // namespace orbitkit
