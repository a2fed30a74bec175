#include "orbitkit/orbit_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "orbitkit/errors.hpp"
#include "orbitkit/invariant_products.hpp"
#include "orbitkit/linalg.hpp"

namespace orbitkit {

Element fundamental_vector(const LieAlgebra& alg, const Element& v, const Element& w) {
  return alg.bracket(v, w);
}

// ---------------------------------------------------------------------------
// Complex structure

Element ComplexStructure::apply(const SpectralDecomposition& d, const Element& x) const {
  return image_basis * (matrix * d.image_coordinates(x));
}

ComplexStructure canonical_J(const SpectralDecomposition& d) {
  const int m = d.image_dim();
  ComplexStructure j;
  j.basepoint = d.w();
  j.image_basis = d.image_basis();
  j.matrix = Matrix::Zero(m, m);
  for (std::size_t b = 0; b < d.blocks().size(); ++b) {
    const auto& blk = d.blocks()[b];
    // Block coordinates of ad_w B_mu / mu; ad_w keeps E_mu invariant.
    const Matrix image = d.ad_w() * blk.basis / blk.mu;
    Matrix block(blk.dim(), blk.dim());
    for (int c = 0; c < blk.dim(); ++c) {
      block.col(c) = d.image_coordinates(image.col(c)).segment(blk.offset, blk.dim());
    }
    j.matrix.block(blk.offset, blk.offset, blk.dim(), blk.dim()) = block;
    j.block_offsets.push_back(blk.offset);
    j.block_dims.push_back(blk.dim());
  }
  return j;
}

double j_squared_residual(const ComplexStructure& j) {
  const auto m = j.matrix.rows();
  if (m == 0) return 0.0;
  return linalg::max_abs(j.matrix * j.matrix + Matrix::Identity(m, m));
}

double j_block_leakage(const SpectralDecomposition& d) {
  const int n = d.dim();
  double worst = 0.0;
  for (std::size_t b = 0; b < d.blocks().size(); ++b) {
    const Matrix p = d.block_projector(b);
    const Matrix leak = (Matrix::Identity(n, n) - p) * d.ad_w() * d.blocks()[b].basis;
    worst = std::max(worst, linalg::max_abs(leak));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Equivariant maps

EquivariantMap EquivariantMap::identity() {
  EquivariantMap s;
  s.kind_ = Kind::Identity;
  s.cached_residual_ = 0.0;
  return s;
}

EquivariantMap EquivariantMap::scaled(double c) {
  EquivariantMap s;
  s.kind_ = Kind::Scaled;
  s.scale_ = c;
  s.cached_residual_ = 0.0;
  return s;
}

EquivariantMap EquivariantMap::linear(const LieAlgebra& alg, Matrix m) {
  const int n = alg.dim();
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("linear map has wrong shape");
  EquivariantMap s;
  s.kind_ = Kind::Linear;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, linalg::max_abs(m * alg.ad_basis(i) - alg.ad_basis(i) * m));
  }
  s.linear_ = std::move(m);
  s.cached_residual_ = worst;
  return s;
}

EquivariantMap EquivariantMap::black_box(Callback f, double fd_step) {
  EquivariantMap s;
  s.kind_ = Kind::BlackBox;
  s.callback_ = std::move(f);
  s.fd_step_ = fd_step > 0.0 ? fd_step : 1e-6;
  return s;
}

std::string EquivariantMap::describe() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Scaled: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "scale:%.17g", scale_);
      return buf;
    }
    case Kind::Linear:
      return "linear";
    case Kind::BlackBox:
      return "black-box";
  }
  return "?";
}

Element EquivariantMap::operator()(const Element& w) const {
  switch (kind_) {
    case Kind::Identity:
      return w;
    case Kind::Scaled:
      return scale_ * w;
    case Kind::Linear:
      if (linear_.cols() != w.size()) throw DimensionMismatch("linear map dimension mismatch");
      return linear_ * w;
    case Kind::BlackBox: {
      Element out = callback_(w);
      if (out.size() != w.size()) throw DimensionMismatch("black-box map changed the dimension");
      return out;
    }
  }
  return w;
}

Element EquivariantMap::differential(const Element& w, const Element& direction) const {
  switch (kind_) {
    case Kind::Identity:
      return direction;
    case Kind::Scaled:
      return scale_ * direction;
    case Kind::Linear:
      return linear_ * direction;
    case Kind::BlackBox: {
      const double nd = direction.norm();
      if (nd == 0.0) return Element::Zero(w.size());
      const double h = fd_step_ * (1.0 + w.norm());
      const Element unit = direction / nd;
      return (callback_(w + h * unit) - callback_(w - h * unit)) * (nd / (2.0 * h));
    }
  }
  return direction;
}

double equivariance_residual(const LieAlgebra& alg, const EquivariantMap& s, const Element& w) {
  alg.check_element(w);
  const Element sw = s(w);
  double worst = 0.0;
  for (int u = 0; u < alg.dim(); ++u) {
    const Element lhs = s.differential(w, alg.ad_basis(u) * w);
    const Element rhs = alg.ad_basis(u) * sw;
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst / (1.0 + sw.norm());
}

double kernel_membership_residual(const LieAlgebra& alg, const EquivariantMap& s,
                                  const Element& w) {
  const Element sw = s(w);
  if (s.kind() == EquivariantMap::Kind::Identity || s.kind() == EquivariantMap::Kind::Scaled) {
    // s(w) = c w, so ad_w s(w) = c [w, w], which the antisymmetric bracket evaluates to 0.
    return std::abs(s.scale()) * alg.bracket(w, w).norm() / (1.0 + sw.norm());
  }
  return (alg.ad(w) * sw).norm() / (1.0 + sw.norm());
}

namespace {

void require_invariant(const LieAlgebra& alg, const ScalarProduct& p, const Tolerances& tol) {
  if (p.dim() != alg.dim()) throw DimensionMismatch("scalar product dimension does not match");
  const double r = p.cached_invariance_residual().value_or(invariance_residual(alg, p));
  if (!(r <= invariance_threshold(alg, p, tol.invariance))) {
    throw NonInvariantProduct("scalar product is not Ad-invariant (residual " +
                              format_residual(r) + ")");
  }
}

void require_equivariant(const LieAlgebra& alg, const EquivariantMap& s, const Element& w,
                         const Tolerances& tol) {
  const double r = equivariance_residual(alg, s, w);
  if (!(r <= tol.equivariance)) {
    throw NonEquivariantMap("map s is not Ad-equivariant at w (residual " + format_residual(r) +
                            ")");
  }
}

}  // namespace

double omega_s(const LieAlgebra& alg, const ScalarProduct& p, const EquivariantMap& s,
               const Element& w, const Element& u, const Element& v, const Tolerances& tol) {
  alg.check_element(w);
  require_invariant(alg, p, tol);
  require_equivariant(alg, s, w, tol);
  return p(s(w), alg.bracket(u, v));
}

// ---------------------------------------------------------------------------
// Two-forms and metrics

TwoFormMatrix two_form_matrix(const LieAlgebra& alg, const ScalarProduct& p,
                              const EquivariantMap& s, const SpectralDecomposition& d,
                              const Tolerances& tol) {
  if (d.image_dim() == 0) throw TrivialOrbit("im ad_w = 0: the orbit through w is a point");
  const Matrix generators = linalg::min_norm_solve(d.ad_w(), -d.image_basis());
  return two_form_matrix(alg, p, s, d, generators, tol);
}

TwoFormMatrix two_form_matrix(const LieAlgebra& alg, const ScalarProduct& p,
                              const EquivariantMap& s, const SpectralDecomposition& d,
                              const Matrix& generators, const Tolerances& tol) {
  const int m = d.image_dim();
  if (m == 0) throw TrivialOrbit("im ad_w = 0: the orbit through w is a point");
  if (generators.rows() != alg.dim() || generators.cols() != m) {
    throw DimensionMismatch("generator matrix must be n x dim(im ad_w)");
  }
  const Matrix check = d.ad_w() * generators + d.image_basis();
  if (linalg::max_abs(check) > 1e-8 * (1.0 + linalg::max_abs(d.ad_w()) * linalg::max_abs(generators))) {
    throw BasisMismatch("generators are not preimages of the tangent basis under -ad_w");
  }
  require_invariant(alg, p, tol);
  require_equivariant(alg, s, d.w(), tol);

  const Vector lhs = p.gram() * s(d.w());
  Matrix omega = Matrix::Zero(m, m);
  for (int a = 0; a < m; ++a) {
    const Matrix ad_a = alg.ad(generators.col(a));
    for (int b = a + 1; b < m; ++b) {
      omega(a, b) = lhs.dot(ad_a * generators.col(b));
      omega(b, a) = -omega(a, b);
    }
  }
  const auto sv = Eigen::JacobiSVD<Matrix>(omega).singularValues();
  if (sv(0) == 0.0 || sv(m - 1) <= tol.degeneracy * sv(0)) {
    throw DegenerateForm("omega_s is degenerate on the orbit tangent space");
  }
  return TwoFormMatrix{d.w(), d.image_basis(), generators, std::move(omega)};
}

Signature signature_of(const Matrix& symmetric, double tol) {
  Signature sig;
  if (symmetric.size() == 0) return sig;
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetric, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double norm = ev.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (norm == 0.0 || std::abs(ev[i]) < tol * norm) {
      ++sig.zero;
    } else if (ev[i] > 0.0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

namespace {

void require_same_basis(const TwoFormMatrix& omega, const ComplexStructure& j) {
  const bool shapes = omega.matrix.rows() == j.matrix.rows() &&
                      omega.tangent_basis.rows() == j.image_basis.rows() &&
                      omega.tangent_basis.cols() == j.image_basis.cols() &&
                      omega.basepoint.size() == j.basepoint.size();
  if (!shapes) throw BasisMismatch("two-form and complex structure use different bases");
  const double scale = 1.0 + linalg::max_abs(omega.tangent_basis);
  if (linalg::max_abs(omega.tangent_basis - j.image_basis) > 1e-12 * scale ||
      (omega.basepoint - j.basepoint).cwiseAbs().maxCoeff() >
          1e-12 * (1.0 + omega.basepoint.cwiseAbs().maxCoeff())) {
    throw BasisMismatch("two-form and complex structure use different bases");
  }
}

}  // namespace

MetricGram kaehler_metric(const TwoFormMatrix& omega, const ComplexStructure& j, double tol) {
  require_same_basis(omega, j);
  const Matrix g = omega.matrix * j.matrix;
  MetricGram out;
  out.basepoint = omega.basepoint;
  out.tangent_basis = omega.tangent_basis;
  out.asymmetry = linalg::max_abs(g - g.transpose());
  out.matrix = 0.5 * (g + g.transpose());
  out.signature = signature_of(out.matrix, tol);
  return out;
}

double compatibility_residual(const TwoFormMatrix& omega, const ComplexStructure& j) {
  require_same_basis(omega, j);
  return linalg::max_abs(j.matrix.transpose() * omega.matrix * j.matrix - omega.matrix);
}

double d_omega_s_residual(const LieAlgebra& alg, const ScalarProduct& p, const EquivariantMap& s,
                          const Element& w, const Element& u, const Element& v, const Element& q,
                          const Tolerances& tol) {
  if (!s.has_linearization()) {
    throw MissingLinearization("d omega_s needs a map with an exact linearization");
  }
  alg.check_element(w);
  require_invariant(alg, p, tol);
  require_equivariant(alg, s, w, tol);

  const Element sw = s(w);
  const auto br = [&](const Element& a, const Element& b) { return alg.bracket(a, b); };
  // X_a <s(w), [b, c]> = <ds_w([a, w]), [b, c]>
  const auto deriv = [&](const Element& a, const Element& b, const Element& c) {
    return p(s.differential(w, br(a, w)), br(b, c));
  };
  const double value = deriv(u, v, q) - deriv(v, u, q) + deriv(q, u, v) +
                       p(sw, br(br(u, v), q)) - p(sw, br(br(u, q), v)) + p(sw, br(br(v, q), u));
  return std::abs(value);
}

double j_conjugation_residual(const LieAlgebra& alg, const Element& w, const Element& v, double t,
                              double tol) {
  const SpectralDecomposition d = decompose(alg, w, tol);
  const AdjointMatrix a = adjoint_of_exp(alg, v, t);
  const Element moved = a.apply(w);
  const SpectralDecomposition dm = decompose(alg, moved, tol);
  if (dm.image_dim() != d.image_dim()) return std::numeric_limits<double>::infinity();
  if (d.image_dim() == 0) return 0.0;

  const ComplexStructure j = canonical_J(d);
  const ComplexStructure jm = canonical_J(dm);
  const Matrix& basis = dm.image_basis();
  const Matrix lhs = basis * jm.matrix;

  const Matrix pulled = a.inverse * basis;  // lies in im ad_w
  Matrix rhs(alg.dim(), basis.cols());
  for (Eigen::Index c = 0; c < basis.cols(); ++c) rhs.col(c) = a.matrix * j.apply(d, pulled.col(c));
  const double escape = linalg::max_abs(d.kernel_projector() * pulled);
  return std::max(linalg::max_abs(lhs - rhs), escape);
}

// ---------------------------------------------------------------------------
// Report

std::optional<double> OrbitStructureReport::residual(const std::string& name) const {
  for (const auto& [key, value] : residuals) {
    if (key == name) return value;
  }
  return std::nullopt;
}

double OrbitStructureReport::max_residual() const {
  double worst = 0.0;
  for (const auto& [key, value] : residuals) worst = std::max(worst, value);
  return worst;
}

namespace {

Vector random_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

}  // namespace

OrbitStructureReport orbit_report(const LieAlgebra& alg, const ScalarProduct& p,
                                  const EquivariantMap& s, const Element& w,
                                  const OrbitReportOptions& options) {
  OrbitStructureReport report;
  report.tol = options.tol;
  const Tolerances& tol = options.tol;
  const auto record = [&](const Error& e) { report.errors.emplace_back(e.kind(), e.what()); };

  try {
    report.classification = classify_skew(alg, w, tol.spectral);
  } catch (const Error& e) {
    record(e);
    return report;
  }
  if (!report.classification.is_skew()) {
    record(NotSkewSymmetric(report.classification));
    return report;
  }

  std::optional<SpectralDecomposition> decomposition;
  try {
    decomposition.emplace(decompose(alg, w, tol.spectral));
  } catch (const Error& e) {
    record(e);
    return report;
  }
  const SpectralDecomposition& d = *decomposition;
  report.kernel_dim = d.kernel_dim();
  for (const auto& blk : d.blocks()) report.blocks.push_back({blk.mu, blk.dim()});

  const DecompositionResiduals dr = decomposition_residuals(d);
  report.residuals.emplace_back("spectral_completeness", dr.completeness);
  report.residuals.emplace_back("spectral_block_invariance", dr.block_invariance);
  report.residuals.emplace_back("spectral_block_square", dr.block_square);

  const ComplexStructure j = canonical_J(d);
  report.j = j.matrix;
  report.residuals.emplace_back("j_squared", j_squared_residual(j));
  report.residuals.emplace_back("j_block_leakage", j_block_leakage(d));
  report.residuals.emplace_back("kernel_membership", kernel_membership_residual(alg, s, w));

  // X_{J x}(w) = J X_x(w) for x in each block.
  double transport = 0.0;
  for (const auto& blk : d.blocks()) {
    for (int c = 0; c < blk.dim(); ++c) {
      const Element x = blk.basis.col(c);
      const Element lhs = fundamental_vector(alg, j.apply(d, x), w);
      const Element rhs = j.apply(d, fundamental_vector(alg, x, w));
      transport = std::max(transport, (lhs - rhs).norm());
    }
  }
  report.residuals.emplace_back("eigenvector_transport", transport);

  // [E_lambda, E_mu] has no kernel component for lambda != mu.
  double containment = 0.0;
  const Matrix pker = d.kernel_projector();
  for (std::size_t a = 0; a < d.blocks().size(); ++a) {
    for (std::size_t b = a + 1; b < d.blocks().size(); ++b) {
      const auto& ba = d.blocks()[a].basis;
      const auto& bb = d.blocks()[b].basis;
      for (Eigen::Index x = 0; x < ba.cols(); ++x) {
        for (Eigen::Index y = 0; y < bb.cols(); ++y) {
          containment =
              std::max(containment, (pker * alg.bracket(ba.col(x), bb.col(y))).norm());
        }
      }
    }
  }
  report.residuals.emplace_back("bracket_containment", containment);

  if (d.image_dim() == 0) {
    record(TrivialOrbit("im ad_w = 0: the orbit through w is a point"));
    return report;
  }

  std::optional<TwoFormMatrix> omega;
  try {
    omega.emplace(two_form_matrix(alg, p, s, d, tol));
  } catch (const Error& e) {
    record(e);
    return report;
  }
  report.omega = omega->matrix;
  report.residuals.emplace_back("compatibility", compatibility_residual(*omega, j));

  const MetricGram g = kaehler_metric(*omega, j, tol.spectral);
  report.metric = g.matrix;
  report.signature = g.signature;
  report.residuals.emplace_back("metric_symmetry", g.asymmetry);

  double orthogonality = 0.0;
  for (std::size_t a = 0; a < d.blocks().size(); ++a) {
    for (std::size_t b = 0; b < d.blocks().size(); ++b) {
      if (a == b) continue;
      const auto& ba = d.blocks()[a];
      const auto& bb = d.blocks()[b];
      orthogonality = std::max(
          orthogonality, linalg::max_abs(g.matrix.block(ba.offset, bb.offset, ba.dim(), bb.dim())));
    }
  }
  report.residuals.emplace_back("block_orthogonality", orthogonality);

  if (s.kind() == EquivariantMap::Kind::Identity || s.kind() == EquivariantMap::Kind::Scaled) {
    const double c = s.kind() == EquivariantMap::Kind::Scaled ? s.scale() : 1.0;
    double scaling = 0.0;
    for (const auto& blk : d.blocks()) {
      const Matrix lhs = blk.mu * g.matrix.block(blk.offset, blk.offset, blk.dim(), blk.dim());
      const Matrix rhs = c * blk.basis.transpose() * p.gram() * blk.basis;
      scaling = std::max(scaling, linalg::max_abs(lhs - rhs));
    }
    report.residuals.emplace_back("block_scaling", scaling);
  }

  std::mt19937_64 rng(options.seed);
  if (s.has_linearization()) {
    double worst = 0.0;
    for (int k = 0; k < options.triple_samples; ++k) {
      const Vector u = random_vector(rng, alg.dim());
      const Vector v = random_vector(rng, alg.dim());
      const Vector q = random_vector(rng, alg.dim());
      worst = std::max(worst, d_omega_s_residual(alg, p, s, w, u, v, q, tol));
    }
    report.residuals.emplace_back("d_omega", worst);
  }

  double conjugation = 0.0;
  try {
    std::uniform_real_distribution<double> time(-1.0, 1.0);
    // Unit directions keep |t v| <= 1; on non-compact algebras Ad_exp grows
    // exponentially and the conjugated spectrum loses accuracy.
    for (int k = 0; k < options.conjugation_samples; ++k) {
      const Vector v = random_vector(rng, alg.dim()).normalized();
      const double t = time(rng);
      conjugation = std::max(conjugation, j_conjugation_residual(alg, w, v, t, tol.spectral));
    }
    report.residuals.emplace_back("conjugation", conjugation);
  } catch (const Error& e) {
    record(e);
  }

  if (g.signature.zero > 0) {
    report.warnings.push_back("metric has near-zero eigenvalues on a nondegenerate orbit");
  }
  report.is_kaehler = g.signature.negative == 0 && g.signature.zero == 0;
  return report;
}

}  // namespace orbitkit
