#pragma once

#include <cstdint>

#include "orbitkit/haar.hpp"
#include "orbitkit/lie_algebra.hpp"
#include "orbitkit/scalar_product.hpp"

namespace orbitkit {

/// max_{i,j,k} |<[e_i, e_j], e_k> + <e_j, [e_i, e_k]>|; zero iff every ad
/// is skew with respect to P.
[[nodiscard]] double invariance_residual(const LieAlgebra& alg, const ScalarProduct& p);

/// Monte-Carlo Haar average (1/N) sum_k Ad(g_k)^T G0 Ad(g_k). Samples are
/// drawn in fixed-size chunks from per-chunk seeded generators and summed in
/// chunk order, so the result depends only on (seed, N), not on threading.
[[nodiscard]] ScalarProduct haar_average(const LieAlgebra& alg, const ScalarProduct& p0,
                                         const HaarSampler& sampler, std::int64_t samples,
                                         std::uint64_t seed, unsigned threads = 0);

/// b(w) = <w, .>, i.e. coefficients G w. Throws DegenerateProduct.
[[nodiscard]] DualVector musical_b(const ScalarProduct& p, const Element& w);
/// Inverse of musical_b: G^{-1} alpha.
[[nodiscard]] Element musical_sharp(const ScalarProduct& p, const DualVector& alpha);

/// ||b(X_v(w)) - X*_v(b(w))|| with X_v(w) = [v, w] and X*_v(alpha) = -alpha o ad_v.
[[nodiscard]] double b_equivariance_residual(const LieAlgebra& alg, const ScalarProduct& p,
                                             const Element& w, const Element& v);

/// Invariance threshold scaled to the data: tol * max(1, ||G||_max * max|c|).
[[nodiscard]] double invariance_threshold(const LieAlgebra& alg, const ScalarProduct& p,
                                          double tol);

}  // namespace orbitkit
