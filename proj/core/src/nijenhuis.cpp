#include "orbitkit/nijenhuis.hpp"

#include <algorithm>

#include "orbitkit/errors.hpp"

namespace orbitkit {

double TensorField::step_at(const Vector& p) const {
  return fd_step > 0.0 ? fd_step : 1e-5 * (1.0 + p.norm());
}

Matrix TensorField::differential(const Vector& p, const Vector& direction) const {
  if (derivative) return derivative(p, direction);
  const double nd = direction.norm();
  if (nd == 0.0) return Matrix::Zero(dim, dim);
  const double h = step_at(p);
  const Vector unit = direction / nd;
  return (evaluate(p + h * unit) - evaluate(p - h * unit)) * (nd / (2.0 * h));
}

Vector nijenhuis_flat(const TensorField& field, const Vector& p, const Vector& x, const Vector& y) {
  const Eigen::Index n = field.dim;
  if (p.size() != n || x.size() != n || y.size() != n) {
    throw DimensionMismatch("nijenhuis_flat: point and vectors must match the field dimension");
  }
  const Matrix a = field.evaluate(p);
  if (a.rows() != n || a.cols() != n) throw DimensionMismatch("tensor field returned wrong shape");
  const Vector ax = a * x;
  const Vector ay = a * y;
  const Vector bracket = field.differential(p, x) * y - field.differential(p, y) * x;
  const Vector bracket_a = field.differential(p, ax) * y - field.differential(p, ay) * x;
  return a * bracket - bracket_a;
}

Element nijenhuis_orbit(const LieAlgebra& alg, const SpectralDecomposition& d,
                        const ComplexStructure& j, const Element& u, const Element& v,
                        const NijenhuisOptions& options) {
  alg.check_element(u);
  alg.check_element(v);
  if (u.norm() == 0.0 || v.norm() == 0.0) return Element::Zero(alg.dim());

  const auto bu = d.block_of(u, options.membership_tol);
  const auto bv = d.block_of(v, options.membership_tol);
  if (!bu || !bv) {
    throw BlockMembershipViolation("nijenhuis_orbit: arguments must each lie in a single eigenblock");
  }
  const double lambda = d.blocks()[*bu].mu;
  const double mu = d.blocks()[*bv].mu;

  const Element ju = j.apply(d, u);
  const Element jv = j.apply(d, v);
  const Element uv = alg.bracket(u, v);
  const Element jujv = alg.bracket(ju, jv);
  const Element grouped = uv - jujv;

  const double escape = (d.kernel_projector() * grouped).norm();
  if (escape > options.image_tol * (1.0 + uv.norm() + jujv.norm())) {
    throw ImageEscape("nijenhuis_orbit: [u,v] - [Ju,Jv] has a kernel component of " +
                      format_residual(escape));
  }
  return (lambda + mu) * (j.apply(d, grouped) - alg.bracket(ju, v) - alg.bracket(u, jv));
}

double nijenhuis_sweep(const LieAlgebra& alg, const SpectralDecomposition& d,
                       const ComplexStructure& j, const NijenhuisOptions& options) {
  const Matrix& b = d.image_basis();
  double worst = 0.0;
  for (Eigen::Index x = 0; x < b.cols(); ++x) {
    for (Eigen::Index y = 0; y < b.cols(); ++y) {
      worst = std::max(worst, nijenhuis_orbit(alg, d, j, b.col(x), b.col(y), options).norm());
    }
  }
  return worst;
}

}  // namespace orbitkit
