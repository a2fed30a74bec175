#include "orbitkit/invariant_products.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "orbitkit/errors.hpp"
#include "orbitkit/linalg.hpp"

namespace orbitkit {

ScalarProduct::ScalarProduct(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() == 0) {
    throw DimensionMismatch("scalar product: Gram matrix must be square and nonempty");
  }
  if (!gram_.allFinite()) throw DimensionMismatch("scalar product: non-finite Gram entry");
  const double scale = std::max(1.0, linalg::max_abs(gram_));
  if (linalg::max_abs(gram_ - gram_.transpose()) > 1e-12 * scale) {
    throw DimensionMismatch("scalar product: Gram matrix is not symmetric");
  }
  gram_ = 0.5 * (gram_ + gram_.transpose()).eval();

  const auto sv = Eigen::JacobiSVD<Matrix>(gram_).singularValues();
  if (sv(0) == 0.0) {
    degenerate_ = true;
  } else {
    double ratio = 1.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) ratio *= sv(i) / sv(0);
    degenerate_ = ratio < kDegeneracyThreshold;
  }
}

ScalarProduct ScalarProduct::with_invariance_residual(double residual) const {
  ScalarProduct copy = *this;
  copy.residual_ = residual;
  return copy;
}

double invariance_residual(const LieAlgebra& alg, const ScalarProduct& p) {
  const int n = alg.dim();
  if (p.dim() != n) throw DimensionMismatch("scalar product dimension does not match algebra");
  // Entry (j, k) of G ad_i + (G ad_i)^T is <[e_i,e_j], e_k> + <e_j, [e_i,e_k]>.
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Matrix m = p.gram() * alg.ad_basis(i);
    worst = std::max(worst, linalg::max_abs(m + m.transpose()));
  }
  return worst;
}

double invariance_threshold(const LieAlgebra& alg, const ScalarProduct& p, double tol) {
  return tol * std::max(1.0, linalg::max_abs(p.gram()) * alg.max_abs_constant());
}

ScalarProduct haar_average(const LieAlgebra& alg, const ScalarProduct& p0,
                           const HaarSampler& sampler, std::int64_t samples, std::uint64_t seed,
                           unsigned threads) {
  const int n = alg.dim();
  if (p0.dim() != n || sampler.dim() != n) {
    throw DimensionMismatch("haar_average: product, sampler and algebra dimensions differ");
  }
  if (samples <= 0) throw DimensionMismatch("haar_average: sample count must be positive");

  constexpr std::int64_t kChunk = 4096;
  const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Matrix> partial(static_cast<std::size_t>(chunks), Matrix::Zero(n, n));
  const Matrix& g0 = p0.gram();

  auto run_chunk = [&](std::int64_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
    HaarSampler::Rng rng(seq);
    const std::int64_t begin = c * kChunk;
    const std::int64_t end = std::min(samples, begin + kChunk);
    Matrix& acc = partial[static_cast<std::size_t>(c)];
    for (std::int64_t k = begin; k < end; ++k) {
      const Matrix a = sampler(rng);
      acc.noalias() += a.transpose() * g0 * a;
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, chunks));
  if (workers <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::int64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }

  Matrix sum = Matrix::Zero(n, n);
  for (const auto& m : partial) sum += m;
  sum /= static_cast<double>(samples);
  ScalarProduct out(0.5 * (sum + sum.transpose()));
  return out.with_invariance_residual(invariance_residual(alg, out));
}

DualVector musical_b(const ScalarProduct& p, const Element& w) {
  if (p.is_degenerate()) throw DegenerateProduct("musical map b requires a nondegenerate product");
  if (w.size() != p.dim()) throw DimensionMismatch("musical_b: dimension mismatch");
  return DualVector(p.gram() * w);
}

Element musical_sharp(const ScalarProduct& p, const DualVector& alpha) {
  if (p.is_degenerate()) throw DegenerateProduct("musical map # requires a nondegenerate product");
  if (alpha.size() != p.dim()) throw DimensionMismatch("musical_sharp: dimension mismatch");
  return p.gram().fullPivLu().solve(alpha.coeffs);
}

double b_equivariance_residual(const LieAlgebra& alg, const ScalarProduct& p, const Element& w,
                               const Element& v) {
  alg.check_element(w);
  alg.check_element(v);
  if (p.dim() != alg.dim()) throw DimensionMismatch("scalar product dimension does not match");
  // b(X_v(w)) = G [v, w];  X*_v(b(w)) = -(G w)^T ad_v, as a covector.
  const Vector lhs = p.gram() * alg.bracket(v, w);
  const Vector rhs = -(alg.ad(v).transpose() * (p.gram() * w));
  return (lhs - rhs).norm();
}

}  // namespace orbitkit
