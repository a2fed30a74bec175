#pragma once

#include <functional>

#include "orbitkit/lie_algebra.hpp"

namespace orbitkit {

/// Function on g*: either F_v(alpha) = alpha(v) or an opaque callback
/// differentiated by central differences.
class PoissonFunction {
 public:
  using Callback = std::function<double(const DualVector&)>;

  static PoissonFunction linear(Element v);
  /// fd_step <= 0 selects 1e-6; the actual step is fd_step (1 + ||alpha||).
  static PoissonFunction black_box(Callback f, double fd_step = 0.0);

  [[nodiscard]] bool is_linear() const { return !callback_; }
  [[nodiscard]] const Element& direction() const { return v_; }

  [[nodiscard]] double operator()(const DualVector& alpha) const;
  /// dF_alpha as an element of g (g** = g).
  [[nodiscard]] Element gradient(const DualVector& alpha) const;

 private:
  Element v_;
  Callback callback_;
  double fd_step_ = 1e-6;
};

/// {F, G}(alpha) = alpha([dF_alpha, dG_alpha]).
[[nodiscard]] double lie_poisson(const LieAlgebra& alg, const PoissonFunction& f,
                                 const PoissonFunction& g, const DualVector& alpha);

/// {F_v, F_w} = F_[v, w]; nested brackets of linear functions stay symbolic.
[[nodiscard]] PoissonFunction poisson_linear_bracket(const LieAlgebra& alg, const PoissonFunction& f,
                                                     const PoissonFunction& g);

/// #_alpha(v) = alpha o ad_v, the covector u -> alpha([v, u]).
[[nodiscard]] DualVector poisson_sharp(const LieAlgebra& alg, const DualVector& alpha,
                                       const Element& v);

/// X*_v(alpha) = -alpha o ad_v.
[[nodiscard]] DualVector coadjoint_fundamental(const LieAlgebra& alg, const Element& v,
                                               const DualVector& alpha);

/// omega_KKS,alpha(X*_v, X*_w) = alpha([v, w]).
[[nodiscard]] double kks(const LieAlgebra& alg, const DualVector& alpha, const Element& v,
                         const Element& w);

/// Bivector pi_alpha(e_i, e_j) = alpha([e_i, e_j]).
[[nodiscard]] Matrix poisson_bivector(const LieAlgebra& alg, const DualVector& alpha);

/// |cyclic sum of {{F_v, F_w}, F_q}(alpha)|.
[[nodiscard]] double jacobi_poisson_residual(const LieAlgebra& alg, const Element& v,
                                             const Element& w, const Element& q,
                                             const DualVector& alpha);

struct LeafTangentCheck {
  /// Both span distances plus the KKS/bivector disagreement, combined by max.
  double residual = 0.0;
  /// Dimension of span{X*_u(alpha)}, i.e. of the coadjoint orbit through alpha.
  int span_dim = 0;
};

[[nodiscard]] LeafTangentCheck leaf_tangent_residual(const LieAlgebra& alg, const DualVector& alpha);

/// Coadjoint action Ad*(g) alpha = alpha o Ad(g^{-1}) for g = exp(t v).
[[nodiscard]] DualVector coadjoint_of_exp(const LieAlgebra& alg, const Element& v, double t,
                                          const DualVector& alpha);

/// |kks(Ad*(g) alpha, Ad(g) v, Ad(g) w) - kks(alpha, v, w)| for g = exp(t x).
[[nodiscard]] double kks_invariance_residual(const LieAlgebra& alg, const DualVector& alpha,
                                             const Element& v, const Element& w,
                                             const Element& x, double t);

}  // namespace orbitkit
