#include "orbitkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orbitkit/linalg.hpp"

namespace orbitkit {

const char* to_string(SkewVerdict v) {
  switch (v) {
    case SkewVerdict::SkewSymmetric:
      return "SkewSymmetric";
    case SkewVerdict::NonDiagonalizable:
      return "NonDiagonalizable";
    case SkewVerdict::OffAxisEigenvalue:
      return "OffAxisEigenvalue";
  }
  return "?";
}

namespace {

std::string describe(const SkewClassification& c) {
  std::string s = std::string("element is not skew-symmetric: ") + to_string(c.verdict);
  if (c.offending) {
    s += " (lambda = " + format_residual(c.offending->real()) + " + " +
         format_residual(c.offending->imag()) + "i)";
  }
  return s;
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

struct Clustering {
  std::vector<EigenCluster> clusters;
  /// Members (indices into the eigenvalue list) of every cluster.
  std::vector<std::vector<std::size_t>> members;
  std::optional<std::size_t> zero;
};

// Single-linkage clustering within `radius`, with 0 as an extra anchor so the
// near-zero eigenvalues always form one cluster centred exactly at 0.
Clustering cluster_eigenvalues(const std::vector<Complex>& ev, double radius) {
  const std::size_t n = ev.size();
  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto value = [&](std::size_t i) { return i == n ? Complex(0.0) : ev[i]; };
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      if (std::abs(value(a) - value(b)) <= radius) parent[find(a)] = find(b);
    }
  }
  Clustering out;
  std::vector<std::optional<std::size_t>> slot(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (!slot[root]) {
      slot[root] = out.clusters.size();
      out.clusters.push_back({});
      out.members.emplace_back();
    }
    out.members[*slot[root]].push_back(i);
  }
  const std::size_t zero_root = find(n);
  if (slot[zero_root]) out.zero = *slot[zero_root];
  for (std::size_t c = 0; c < out.clusters.size(); ++c) {
    Complex sum = 0.0;
    double imag = 0.0;
    for (const auto i : out.members[c]) {
      sum += ev[i];
      imag += std::abs(ev[i].imag());
    }
    out.clusters[c].mean_abs_imag = imag / static_cast<double>(out.members[c].size());
    out.clusters[c].algebraic = static_cast<int>(out.members[c].size());
    out.clusters[c].center =
        out.zero == c ? Complex(0.0) : sum / static_cast<double>(out.members[c].size());
  }
  return out;
}

bool eigenvalue_order(const Complex& a, const Complex& b) {
  if (a.imag() != b.imag()) return a.imag() < b.imag();
  return a.real() < b.real();
}

CMatrix shifted(const Matrix& m, Complex shift) {
  CMatrix c = m.cast<Complex>();
  c.diagonal().array() -= shift;
  return c;
}

}  // namespace

NotSkewSymmetric::NotSkewSymmetric(SkewClassification c)
    : Error(describe(c)), classification_(std::move(c)) {}

SkewClassification classify_operator(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionMismatch("classify_operator: matrix is not square");
  if (!m.allFinite()) throw EigensolverFailure("classify_operator: matrix has non-finite entries");

  SkewClassification out;
  out.tol = tol;
  const Eigen::Index n = m.rows();
  if (n == 0) return out;

  Eigen::EigenSolver<Matrix> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw EigensolverFailure("classify_operator: eigenvalue iteration did not converge");
  }
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues.push_back(es.eigenvalues()[i]);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), eigenvalue_order);

  double scale = 0.0;
  for (const auto& l : out.eigenvalues) scale = std::max(scale, std::abs(l));
  const double radius = tol * (1.0 + scale);
  Clustering clustering = cluster_eigenvalues(out.eigenvalues, radius);

  // Geometric multiplicities from the rank deficiency of (M - c I).
  const double norm = operator_norm(m);
  const double rank_threshold = tol * norm;
  for (auto& cl : clustering.clusters) {
    const CMatrix a = shifted(m, cl.center);
    cl.geometric = static_cast<int>(n) - linalg::rank(a, rank_threshold);
  }
  std::vector<std::size_t> order(clustering.clusters.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return eigenvalue_order(clustering.clusters[a].center, clustering.clusters[b].center);
  });
  for (const auto c : order) out.clusters.push_back(clustering.clusters[c]);

  // Off-axis eigenvalues take precedence: a real eigenvalue rules out skew
  // symmetry whatever the Jordan structure.
  std::optional<Complex> worst;
  for (const auto& l : out.eigenvalues) {
    if (std::abs(l) <= tol) continue;
    if (std::abs(l.real()) <= tol * (1.0 + std::abs(l))) continue;
    if (!worst || std::abs(l.real()) > std::abs(worst->real()) ||
        (std::abs(l.real()) == std::abs(worst->real()) && l.real() > worst->real())) {
      worst = l;
    }
  }
  if (worst) {
    out.verdict = SkewVerdict::OffAxisEigenvalue;
    out.offending = worst;
    return out;
  }

  for (const auto& cl : out.clusters) {
    if (cl.geometric < cl.algebraic) {
      out.verdict = SkewVerdict::NonDiagonalizable;
      out.offending = cl.center;
      return out;
    }
  }

  // A Jordan block split by rounding into nearby simple eigenvalues passes the
  // per-cluster test but its eigenvectors are nearly parallel.
  CMatrix stacked(n, 0);
  for (const auto& cl : out.clusters) {
    const CMatrix basis = linalg::null_space(shifted(m, cl.center), 0.0, cl.algebraic);
    stacked.conservativeResize(Eigen::NoChange, stacked.cols() + basis.cols());
    stacked.rightCols(basis.cols()) = basis;
  }
  const double smallest = Eigen::JacobiSVD<CMatrix>(stacked).singularValues()(n - 1);
  if (smallest < std::sqrt(tol)) {
    out.verdict = SkewVerdict::NonDiagonalizable;
  }
  return out;
}

SkewClassification classify_skew(const LieAlgebra& alg, const Element& w, double tol) {
  return classify_operator(alg.ad(w), tol);
}

SpectralDecomposition::SpectralDecomposition(Element w, Matrix ad_w, Matrix kernel_basis,
                                             std::vector<EigenBlock> blocks, double tol)
    : w_(std::move(w)),
      ad_w_(std::move(ad_w)),
      kernel_(std::move(kernel_basis)),
      blocks_(std::move(blocks)),
      tol_(tol) {
  const Eigen::Index n = w_.size();
  Eigen::Index image_cols = 0;
  for (const auto& b : blocks_) image_cols += b.basis.cols();
  image_.resize(n, image_cols);
  int offset = 0;
  for (auto& b : blocks_) {
    b.offset = offset;
    image_.middleCols(offset, b.basis.cols()) = b.basis;
    offset += static_cast<int>(b.basis.cols());
  }
  if (kernel_.cols() + image_.cols() != n) {
    throw EigensolverFailure("spectral decomposition: kernel and image do not span the algebra");
  }
  Matrix full(n, n);
  full << kernel_, image_;
  Eigen::FullPivLU<Matrix> lu(full);
  if (!lu.isInvertible()) {
    throw EigensolverFailure("spectral decomposition: kernel and image are not complementary");
  }
  full_inverse_ = lu.inverse();
}

Matrix SpectralDecomposition::kernel_projector() const {
  return kernel_ * full_inverse_.topRows(kernel_dim());
}

Matrix SpectralDecomposition::block_projector(std::size_t b) const {
  const auto& blk = blocks_.at(b);
  return blk.basis * full_inverse_.middleRows(kernel_dim() + blk.offset, blk.dim());
}

Matrix SpectralDecomposition::image_projector() const {
  return image_ * full_inverse_.bottomRows(image_dim());
}

Vector SpectralDecomposition::image_coordinates(const Element& x) const {
  return full_inverse_.bottomRows(image_dim()) * x;
}

std::optional<std::size_t> SpectralDecomposition::block_of(const Element& x, double tol) const {
  const double nx = x.norm();
  if (nx == 0.0) return std::nullopt;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const Vector r = x - block_projector(b) * x;
    if (r.norm() <= tol * nx) return b;
  }
  return std::nullopt;
}

SpectralDecomposition decompose(const LieAlgebra& alg, const Element& w, double tol) {
  SkewClassification cls = classify_skew(alg, w, tol);
  if (!cls.is_skew()) throw NotSkewSymmetric(std::move(cls));

  const Matrix a = alg.ad(w);
  const int n = alg.dim();

  int kernel_dim = 0;
  for (const auto& cl : cls.clusters) {
    if (cl.center == Complex(0.0)) kernel_dim = cl.algebraic;
  }
  Matrix kernel = linalg::null_space(a, 0.0, kernel_dim);

  std::vector<EigenBlock> blocks;
  for (const auto& cl : cls.clusters) {
    if (cl.center.imag() <= 0.0) continue;
    const double mu = cl.mean_abs_imag;
    const CMatrix z = linalg::null_space(shifted(a, Complex(0.0, mu)), 0.0, cl.algebraic);
    // For z = x + i y with ad_w z = i mu z we have ad_w y = mu x, so the order
    // (y, x) lists each vector before its J-image.
    Matrix real_parts(n, 2 * z.cols());
    for (Eigen::Index c = 0; c < z.cols(); ++c) {
      real_parts.col(2 * c) = z.col(c).imag();
      real_parts.col(2 * c + 1) = z.col(c).real();
    }
    Matrix basis = linalg::orthonormalize(real_parts, std::sqrt(tol));
    if (basis.cols() != 2 * cl.algebraic) {
      throw EigensolverFailure("spectral decomposition: eigenblock for mu = " +
                               std::to_string(mu) + " has deficient real rank");
    }
    blocks.push_back({mu, std::move(basis), 0});
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const EigenBlock& x, const EigenBlock& y) { return x.mu < y.mu; });
  return SpectralDecomposition(w, a, std::move(kernel), std::move(blocks), tol);
}

double DecompositionResiduals::max() const {
  return std::max({completeness, block_invariance, block_square, image_span});
}

DecompositionResiduals decomposition_residuals(const SpectralDecomposition& d) {
  DecompositionResiduals r;
  const int n = d.dim();
  const Matrix& a = d.ad_w();

  Matrix sum = d.kernel_projector();
  int block_total = 0;
  for (std::size_t b = 0; b < d.blocks().size(); ++b) {
    const auto& blk = d.blocks()[b];
    const Matrix p = d.block_projector(b);
    sum += p;
    block_total += blk.dim();
    r.even_blocks = r.even_blocks && blk.dim() % 2 == 0;
    const Matrix leak = (Matrix::Identity(n, n) - p) * a * blk.basis;
    r.block_invariance = std::max(r.block_invariance, linalg::max_abs(leak));
    const Matrix sq = a * (a * blk.basis) + blk.mu * blk.mu * blk.basis;
    r.block_square = std::max(r.block_square, linalg::max_abs(sq));
  }
  r.completeness = linalg::max_abs(sum - Matrix::Identity(n, n));
  // The kernel basis must really be annihilated by ad_w.
  r.completeness = std::max(r.completeness, linalg::max_abs(a * d.kernel_basis()));
  r.dimensions_add_up = d.kernel_dim() + block_total == n;

  const double threshold = d.tol() * std::max(1.0, operator_norm(a));
  const Matrix range = linalg::range_basis(a, threshold);
  r.image_span = std::max(linalg::distance_to_span(d.image_basis(), range, threshold),
                          linalg::distance_to_span(range, d.image_basis(), threshold));
  if (range.cols() != d.image_dim()) r.image_span = std::max(r.image_span, 1.0);
  return r;
}

}  // namespace orbitkit
