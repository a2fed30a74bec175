#include "orbitkit/poisson.hpp"

#include <algorithm>
#include <cmath>

#include "orbitkit/errors.hpp"
#include "orbitkit/linalg.hpp"

namespace orbitkit {

PoissonFunction PoissonFunction::linear(Element v) {
  PoissonFunction f;
  f.v_ = std::move(v);
  return f;
}

PoissonFunction PoissonFunction::black_box(Callback callback, double fd_step) {
  PoissonFunction f;
  f.callback_ = std::move(callback);
  f.fd_step_ = fd_step > 0.0 ? fd_step : 1e-6;
  return f;
}

double PoissonFunction::operator()(const DualVector& alpha) const {
  if (callback_) return callback_(alpha);
  if (alpha.size() != v_.size()) throw DimensionMismatch("PoissonFunction: dimension mismatch");
  return alpha(v_);
}

Element PoissonFunction::gradient(const DualVector& alpha) const {
  if (!callback_) {
    if (alpha.size() != v_.size()) throw DimensionMismatch("PoissonFunction: dimension mismatch");
    return v_;
  }
  const Eigen::Index n = alpha.size();
  const double h = fd_step_ * (1.0 + alpha.coeffs.norm());
  Element grad(n);
  DualVector probe = alpha;
  for (Eigen::Index i = 0; i < n; ++i) {
    probe.coeffs[i] = alpha.coeffs[i] + h;
    const double up = callback_(probe);
    probe.coeffs[i] = alpha.coeffs[i] - h;
    const double down = callback_(probe);
    probe.coeffs[i] = alpha.coeffs[i];
    grad[i] = (up - down) / (2.0 * h);
  }
  return grad;
}

double lie_poisson(const LieAlgebra& alg, const PoissonFunction& f, const PoissonFunction& g,
                   const DualVector& alpha) {
  alg.check_element(alpha.coeffs, "covector");
  return alpha(alg.bracket(f.gradient(alpha), g.gradient(alpha)));
}

PoissonFunction poisson_linear_bracket(const LieAlgebra& alg, const PoissonFunction& f,
                                       const PoissonFunction& g) {
  if (!f.is_linear() || !g.is_linear()) {
    throw DimensionMismatch("symbolic Poisson bracket needs two linear functions");
  }
  return PoissonFunction::linear(alg.bracket(f.direction(), g.direction()));
}

DualVector poisson_sharp(const LieAlgebra& alg, const DualVector& alpha, const Element& v) {
  alg.check_element(alpha.coeffs, "covector");
  // (alpha o ad_v)_u = alpha([v, e_u]) = (ad_v^T alpha)_u
  return DualVector(alg.ad(v).transpose() * alpha.coeffs);
}

DualVector coadjoint_fundamental(const LieAlgebra& alg, const Element& v, const DualVector& alpha) {
  alg.check_element(alpha.coeffs, "covector");
  return DualVector(-(alg.ad(v).transpose() * alpha.coeffs));
}

double kks(const LieAlgebra& alg, const DualVector& alpha, const Element& v, const Element& w) {
  alg.check_element(alpha.coeffs, "covector");
  return alpha(alg.bracket(v, w));
}

Matrix poisson_bivector(const LieAlgebra& alg, const DualVector& alpha) {
  alg.check_element(alpha.coeffs, "covector");
  const int n = alg.dim();
  Matrix pi(n, n);
  for (int i = 0; i < n; ++i) pi.row(i) = (alg.ad_basis(i).transpose() * alpha.coeffs).transpose();
  return pi;
}

double jacobi_poisson_residual(const LieAlgebra& alg, const Element& v, const Element& w,
                               const Element& q, const DualVector& alpha) {
  const auto fv = PoissonFunction::linear(v);
  const auto fw = PoissonFunction::linear(w);
  const auto fq = PoissonFunction::linear(q);
  const double sum = lie_poisson(alg, poisson_linear_bracket(alg, fv, fw), fq, alpha) +
                     lie_poisson(alg, poisson_linear_bracket(alg, fq, fv), fw, alpha) +
                     lie_poisson(alg, poisson_linear_bracket(alg, fw, fq), fv, alpha);
  return std::abs(sum);
}

LeafTangentCheck leaf_tangent_residual(const LieAlgebra& alg, const DualVector& alpha) {
  const int n = alg.dim();
  Matrix sharp(n, n);
  Matrix fields(n, n);
  for (int v = 0; v < n; ++v) {
    sharp.col(v) = poisson_sharp(alg, alpha, alg.basis(v)).coeffs;
    fields.col(v) = coadjoint_fundamental(alg, alg.basis(v), alpha).coeffs;
  }
  const Matrix pi = poisson_bivector(alg, alpha);
  const double threshold = 1e-10 * std::max(1.0, linalg::max_abs(pi));

  LeafTangentCheck out;
  out.residual = std::max(linalg::distance_to_span(sharp, fields, threshold),
                          linalg::distance_to_span(fields, sharp, threshold));
  double kks_gap = 0.0;
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      // pi_alpha(v, w) read off the sharp map: #_alpha(v)(w)
      const double from_sharp = sharp.col(v).dot(alg.basis(w));
      kks_gap = std::max(kks_gap, std::abs(kks(alg, alpha, alg.basis(v), alg.basis(w)) - from_sharp));
      kks_gap = std::max(kks_gap, std::abs(pi(v, w) - from_sharp));
    }
  }
  out.residual = std::max(out.residual, kks_gap);
  out.span_dim = linalg::rank(fields, threshold);
  return out;
}

DualVector coadjoint_of_exp(const LieAlgebra& alg, const Element& v, double t,
                            const DualVector& alpha) {
  const AdjointMatrix a = adjoint_of_exp(alg, v, t);
  return DualVector(a.inverse.transpose() * alpha.coeffs);
}

double kks_invariance_residual(const LieAlgebra& alg, const DualVector& alpha, const Element& v,
                               const Element& w, const Element& x, double t) {
  const AdjointMatrix a = adjoint_of_exp(alg, x, t);
  const DualVector moved(a.inverse.transpose() * alpha.coeffs);
  return std::abs(kks(alg, moved, a.apply(v), a.apply(w)) - kks(alg, alpha, v, w));
}

}  // namespace orbitkit
