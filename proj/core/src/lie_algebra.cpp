#include "orbitkit/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "orbitkit/errors.hpp"
#include "orbitkit/invariant_products.hpp"
#include "orbitkit/linalg.hpp"

namespace orbitkit {

namespace {

std::string label_error(const std::string& name, const std::string& what) {
  return (name.empty() ? std::string("algebra") : "algebra '" + name + "'") + ": " + what;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels,
                       std::vector<StructureEntry> entries, AlgebraOptions options)
    : name_(std::move(name)), labels_(std::move(basis_labels)), entries_(std::move(entries)) {
  dim_ = static_cast<int>(labels_.size());
  if (dim_ <= 0) throw InvalidStructureConstants(label_error(name_, "dimension must be positive"));

  ad_basis_.assign(static_cast<std::size_t>(dim_), Matrix::Zero(dim_, dim_));
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : entries_) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim_ || e.j >= dim_ || e.k >= dim_) {
      throw InvalidStructureConstants(label_error(name_, "structure constant index out of range"));
    }
    if (e.i >= e.j) {
      throw InvalidStructureConstants(
          label_error(name_, "sparse structure constants must list i < j only"));
    }
    if (!std::isfinite(e.value)) {
      throw InvalidStructureConstants(label_error(name_, "non-finite structure constant"));
    }
    if (!seen.emplace(e.i, e.j, e.k).second) {
      throw InvalidStructureConstants(label_error(name_, "duplicate structure constant entry"));
    }
    ad_basis_[static_cast<std::size_t>(e.i)](e.k, e.j) = e.value;
    ad_basis_[static_cast<std::size_t>(e.j)](e.k, e.i) = -e.value;
  }
  finish(options);
}

LieAlgebra LieAlgebra::from_tensor(std::string name, std::vector<std::string> basis_labels,
                                   const std::vector<double>& tensor, AlgebraOptions options) {
  LieAlgebra alg;
  alg.name_ = std::move(name);
  alg.labels_ = std::move(basis_labels);
  const int n = static_cast<int>(alg.labels_.size());
  alg.dim_ = n;
  if (n <= 0) throw InvalidStructureConstants(label_error(alg.name_, "dimension must be positive"));
  if (tensor.size() != static_cast<std::size_t>(n) * n * n) {
    throw DimensionMismatch(label_error(alg.name_, "tensor size must be n^3"));
  }
  auto at = [&](int i, int j, int k) {
    return tensor[(static_cast<std::size_t>(i) * n + j) * n + k];
  };
  alg.ad_basis_.assign(static_cast<std::size_t>(n), Matrix::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double v = at(i, j, k);
        if (!std::isfinite(v)) {
          throw InvalidStructureConstants(label_error(alg.name_, "non-finite structure constant"));
        }
        if (v != -at(j, i, k)) {
          throw InvalidStructureConstants(label_error(
              alg.name_, "structure constants are not antisymmetric in the first two indices"));
        }
        alg.ad_basis_[static_cast<std::size_t>(i)](k, j) = v;
        if (i < j && v != 0.0) alg.entries_.push_back({i, j, k, v});
      }
    }
  }
  alg.finish(options);
  return alg;
}

void LieAlgebra::finish(const AlgebraOptions& options) {
  if (!options.allow_jacobi_violation) {
    // The residual is quadratic in the constants.
    const double c = max_abs_constant();
    const double r = jacobi_residual(*this);
    if (!(r <= options.jacobi_tol * std::max(1.0, c * c))) {
      throw JacobiViolation(label_error(name_, "Jacobi residual " + format_residual(r) +
                                                   " exceeds tolerance"));
    }
  }
}

Element LieAlgebra::basis(int i) const {
  if (i < 0 || i >= dim_) throw DimensionMismatch("basis index out of range");
  return Element::Unit(dim_, i);
}

void LieAlgebra::check_element(const Element& x, const char* what) const {
  if (x.size() != dim_) {
    throw DimensionMismatch(std::string(what) + " has " + std::to_string(x.size()) +
                            " coordinates, algebra '" + name_ + "' has dimension " +
                            std::to_string(dim_));
  }
}

Matrix LieAlgebra::ad(const Element& w) const {
  check_element(w);
  Matrix m = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (w[i] != 0.0) m.noalias() += w[i] * ad_basis_[static_cast<std::size_t>(i)];
  }
  return m;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  check_element(x, "left operand");
  check_element(y, "right operand");
  Element out = Element::Zero(dim_);
  for (const auto& e : entries_) out[e.k] += e.value * (x[e.i] * y[e.j] - x[e.j] * y[e.i]);
  return out;
}

double LieAlgebra::max_abs_constant() const {
  double m = 0.0;
  for (const auto& a : ad_basis_) m = std::max(m, a.cwiseAbs().maxCoeff());
  return m;
}

double jacobi_residual(const LieAlgebra& alg) {
  const int n = alg.dim();
  double worst = 0.0;
  for (int z = 0; z < n; ++z) {
    const Matrix& adz = alg.ad_basis(z);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        // ad_z [x, y] - [ad_z x, y] - [x, ad_z y]
        const Element xy = alg.ad_basis(x).col(y);
        const Element zx = adz.col(x);
        const Element zy = adz.col(y);
        const Element r = adz * xy + alg.ad_basis(y) * zx - alg.ad_basis(x) * zy;
        worst = std::max(worst, r.norm());
      }
    }
  }
  return worst;
}

double ad_homomorphism_residual(const LieAlgebra& alg) {
  const int n = alg.dim();
  double worst = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const Matrix& a = alg.ad_basis(u);
      const Matrix& b = alg.ad_basis(v);
      const Matrix diff = a * b - b * a - alg.ad(alg.ad_basis(u).col(v));
      worst = std::max(worst, linalg::max_abs(diff));
    }
  }
  return worst;
}

AdjointMatrix adjoint_of_exp(const LieAlgebra& alg, const Element& v, double t) {
  alg.check_element(v, "generator");
  const Matrix adv = alg.ad(v);
  return AdjointMatrix{linalg::expm(t * adv), linalg::expm(-t * adv), v, t};
}

double automorphism_residual(const LieAlgebra& alg, const Matrix& a) {
  const int n = alg.dim();
  if (a.rows() != n || a.cols() != n) throw DimensionMismatch("automorphism candidate has wrong shape");
  double worst = 0.0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const Element lhs = a * alg.ad_basis(x).col(y);
      const Element rhs = alg.bracket(a.col(x), a.col(y));
      worst = std::max(worst, (lhs - rhs).norm());
    }
  }
  return worst;
}

ScalarProduct killing_form(const LieAlgebra& alg) {
  const int n = alg.dim();
  Matrix k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      k(i, j) = -(alg.ad_basis(i) * alg.ad_basis(j)).trace();
      k(j, i) = k(i, j);
    }
  }
  ScalarProduct p(std::move(k));
  return p.with_invariance_residual(invariance_residual(alg, p));
}

}  // namespace orbitkit
