#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "orbitkit/catalog.hpp"
#include "orbitkit/cli/oracles.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/haar.hpp"
#include "orbitkit/invariant_products.hpp"
#include "orbitkit/linalg.hpp"

namespace orbitkit {
namespace {

TEST(ScalarProduct, RejectsAsymmetricAndFlagsDegenerate) {
  Matrix g(2, 2);
  g << 1, 2, 0, 1;
  EXPECT_THROW((void)ScalarProduct(g), Error);
  EXPECT_TRUE(ScalarProduct(Matrix::Zero(2, 2)).is_degenerate());
  EXPECT_FALSE(ScalarProduct::euclidean(3).is_degenerate());
}

TEST(InvarianceResidual, KillingSu2) {
  const auto su2 = catalog_load("su2");
  EXPECT_LE(invariance_residual(su2, killing_form(su2)), 1e-12);
}

TEST(InvarianceResidual, EuclideanOnSl2rIsNotInvariant) {
  // <[h,e],e> + <e,[h,e]> = 2 + 2.
  const auto sl2 = catalog_load("sl2r");
  EXPECT_GE(invariance_residual(sl2, ScalarProduct::euclidean(3)), 1.0);
}

TEST(InvarianceResidual, AbelianIsZero) {
  const auto ab = catalog_load("abelian(3)");
  Matrix g(3, 3);
  g << 2, 1, 0, 1, 3, 0, 0, 0, 5;
  EXPECT_EQ(invariance_residual(ab, ScalarProduct(g)), 0.0);
}

TEST(InvarianceResidual, FiniteGroupElements) {
  std::mt19937_64 rng(21);
  for (const auto* name : {"su2", "su3", "sl2r", "sl2c_real"}) {
    const auto alg = catalog_load(name);
    const auto k = killing_form(alg);
    for (int t = 0; t < 10; ++t) {
      const auto a = adjoint_of_exp(alg, oracle::gaussian(rng, alg.dim()), 0.5);
      const Element u = oracle::gaussian(rng, alg.dim());
      const Element v = oracle::gaussian(rng, alg.dim());
      EXPECT_NEAR(k(a.apply(u), a.apply(v)), k(u, v), 1e-8) << name;
    }
  }
}

TEST(Haar, SamplerRejectsNonCompact) {
  EXPECT_THROW((void)HaarSampler::for_algebra(catalog_load("sl2r")), NoSamplerAvailable);
  EXPECT_THROW((void)HaarSampler::for_algebra(catalog_load("heisenberg3")), NoSamplerAvailable);
  // A file reusing the name su2 for the sign-flipped (split) table.
  const LieAlgebra fake("su2", {"a", "b", "c"}, {{0, 1, 2, -1.0}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}});
  EXPECT_THROW((void)HaarSampler::for_algebra(fake), NoSamplerAvailable);
}

TEST(Haar, SamplesAreAutomorphisms) {
  std::mt19937_64 rng(22);
  for (const auto* name : {"su2", "so3", "su3"}) {
    const auto alg = catalog_load(name);
    const auto sampler = HaarSampler::for_algebra(alg);
    for (int k = 0; k < 10; ++k) {
      const Matrix a = sampler(rng);
      EXPECT_LE(automorphism_residual(alg, a), 1e-12) << name;
      EXPECT_LE(linalg::max_abs(a.transpose() * a - Matrix::Identity(alg.dim(), alg.dim())), 1e-12);
    }
  }
}

TEST(Haar, IdentitySamplerReturnsInputExactly) {
  const auto su2 = catalog_load("su2");
  const ScalarProduct p0(Matrix(Eigen::Vector3d(1.0, 2.0, 3.0).asDiagonal()));
  EXPECT_EQ(haar_average(su2, p0, HaarSampler::identity(3), 1, 5).gram(), p0.gram());
}

TEST(Haar, InvariantInputIsReproduced) {
  const auto su2 = catalog_load("su2");
  const auto k = killing_form(su2);
  const auto avg = haar_average(su2, k, HaarSampler::for_algebra(su2), 1000, 3);
  EXPECT_LE(linalg::max_abs(avg.gram() - k.gram()), 1e-12);
}

TEST(Haar, Su2DiagonalAveragesToTraceThirds) {
  const auto su2 = catalog_load("su2");
  const auto sampler = HaarSampler::for_algebra(su2);
  const ScalarProduct p0(Matrix(Eigen::Vector3d(1.0, 2.0, 3.0).asDiagonal()));
  const std::int64_t n = 100000;
  const double scale = 5.0 / std::sqrt(static_cast<double>(n));
  const auto a = haar_average(su2, p0, sampler, n, 1);
  const auto b = haar_average(su2, p0, sampler, n, 2);
  const Matrix target = 2.0 * Matrix::Identity(3, 3);
  // Relative error against ||target|| = 2.
  EXPECT_LE(linalg::max_abs(a.gram() - target), 2.0 * scale);
  EXPECT_LE(linalg::max_abs(a.gram() - b.gram()), 2.0 * 2.0 * scale);
  EXPECT_LE(invariance_residual(su2, a), 0.02);
}

TEST(Haar, So3AndSu3AverageToMultiplesOfKilling) {
  const ScalarProduct p3(Matrix(Eigen::Vector3d(1.0, 4.0, 7.0).asDiagonal()));
  const auto so3 = catalog_load("so3");
  const auto a = haar_average(so3, p3, HaarSampler::for_algebra(so3), 50000, 9);
  EXPECT_LE(linalg::max_abs(a.gram() - 4.0 * Matrix::Identity(3, 3)), 0.1);

  Vector d(8);
  d << 1, 2, 3, 4, 5, 6, 7, 8;
  const auto su3 = catalog_load("su3");
  const auto b = haar_average(su3, ScalarProduct(Matrix(d.asDiagonal())), HaarSampler::for_algebra(su3),
                              50000, 9);
  EXPECT_LE(linalg::max_abs(b.gram() - 4.5 * Matrix::Identity(8, 8)), 0.2);
}

TEST(Haar, ResidualDecaysWithSamples) {
  const auto su2 = catalog_load("su2");
  const auto sampler = HaarSampler::for_algebra(su2);
  const ScalarProduct p0(Matrix(Eigen::Vector3d(1.0, 2.0, 3.0).asDiagonal()));
  double prev = INFINITY;
  for (std::int64_t n : {100, 10000, 1000000}) {
    const double r = invariance_residual(su2, haar_average(su2, p0, sampler, n, 4));
    EXPECT_LE(r, 8.0 / std::sqrt(static_cast<double>(n))) << n;
    EXPECT_LT(r, prev);
    prev = r;
  }
}

TEST(Haar, DeterministicAcrossThreadCounts) {
  const auto su3 = catalog_load("su3");
  const auto sampler = HaarSampler::for_algebra(su3);
  Vector d(8);
  d << 1, 2, 3, 4, 5, 6, 7, 8;
  const ScalarProduct p0(Matrix(d.asDiagonal()));
  const auto a = haar_average(su3, p0, sampler, 20000, 77, 1);
  const auto b = haar_average(su3, p0, sampler, 20000, 77, 3);
  const auto c = haar_average(su3, p0, sampler, 20000, 77, 8);
  EXPECT_EQ(a.gram(), b.gram());
  EXPECT_EQ(a.gram(), c.gram());
}

TEST(Musical, Su2Examples) {
  const auto su2 = catalog_load("su2");
  const auto k = killing_form(su2);
  const auto b = musical_b(k, su2.basis(2));
  EXPECT_EQ(b.coeffs, Vector(2.0 * su2.basis(2)));
  EXPECT_EQ(b.coeffs, Vector(oracle::killing_contraction(su2) * su2.basis(2)));
  EXPECT_EQ(musical_b(k, su2.zero()).coeffs, Vector::Zero(3));
  EXPECT_LE((musical_sharp(k, DualVector{2.0 * su2.basis(2)}) - su2.basis(2)).norm(), 1e-15);
  EXPECT_EQ(musical_sharp(k, DualVector{Vector::Zero(3)}), su2.zero());
}

TEST(Musical, InversePair) {
  std::mt19937_64 rng(23);
  for (const auto* name : {"su3", "sl2r", "sl2c_real"}) {
    const auto alg = catalog_load(name);
    const auto k = killing_form(alg);
    const Element w = oracle::gaussian(rng, alg.dim());
    const DualVector a{oracle::gaussian(rng, alg.dim())};
    EXPECT_LE((musical_sharp(k, musical_b(k, w)) - w).norm(), 1e-12 * (1 + w.norm()));
    EXPECT_LE((musical_b(k, musical_sharp(k, a)).coeffs - a.coeffs).norm(), 1e-12 * (1 + a.coeffs.norm()));
  }
}

TEST(Musical, DegenerateThrows) {
  const auto heis = catalog_load("heisenberg3");
  EXPECT_THROW((void)musical_b(killing_form(heis), heis.basis(0)), DegenerateProduct);
}

TEST(BEquivariance, InvariantVersusNonInvariant) {
  std::mt19937_64 rng(24);
  const auto su2 = catalog_load("su2");
  const auto k = killing_form(su2);
  for (int t = 0; t < 10; ++t) {
    EXPECT_LE(b_equivariance_residual(su2, k, oracle::gaussian(rng, 3), oracle::gaussian(rng, 3)), 1e-10);
  }
  EXPECT_EQ(b_equivariance_residual(su2, k, oracle::gaussian(rng, 3), su2.zero()), 0.0);

  // By hand with the Euclidean product: b([h,e]) = 2 e*, while
  // -b(e) o ad_h = -(e* o ad_h) = -2 e*.
  const auto sl2 = catalog_load("sl2r");
  EXPECT_NEAR(b_equivariance_residual(sl2, ScalarProduct::euclidean(3), sl2.basis(1), sl2.basis(0)),
              4.0, 1e-14);
}

}  // namespace
}  // namespace orbitkit
