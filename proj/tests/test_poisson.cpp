#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "orbitkit/catalog.hpp"
#include "orbitkit/cli/oracles.hpp"
#include "orbitkit/invariant_products.hpp"
#include "orbitkit/poisson.hpp"

namespace orbitkit {
namespace {

DualVector dual(const Vector& v) { return DualVector{v}; }

TEST(LiePoisson, Su2Basis) {
  const auto su2 = catalog_load("su2");
  const auto f1 = PoissonFunction::linear(su2.basis(0));
  const auto f2 = PoissonFunction::linear(su2.basis(1));
  EXPECT_EQ(lie_poisson(su2, f1, f2, dual(su2.basis(2))), 1.0);
  EXPECT_EQ(lie_poisson(su2, f1, f1, dual(su2.basis(2))), 0.0);
}

TEST(LiePoisson, BlackBoxLinearMatchesLinear) {
  std::mt19937_64 rng(41);
  const auto su3 = catalog_load("su3");
  const Element v = oracle::gaussian(rng, 8), w = oracle::gaussian(rng, 8);
  const auto bb = PoissonFunction::black_box([v](const DualVector& a) { return a.coeffs.dot(v); });
  const auto lin_v = PoissonFunction::linear(v);
  const auto lin_w = PoissonFunction::linear(w);
  for (int t = 0; t < 10; ++t) {
    const DualVector a = dual(oracle::gaussian(rng, 8));
    EXPECT_NEAR(lie_poisson(su3, bb, lin_w, a), lie_poisson(su3, lin_v, lin_w, a), 1e-8);
    EXPECT_NEAR(lie_poisson(su3, bb, lin_w, a), -lie_poisson(su3, lin_w, bb, a), 1e-8);
  }
}

TEST(LiePoisson, LeibnizForProducts) {
  // {F G, H} = F {G, H} + G {F, H} with F, G, H linear and F G a black box.
  std::mt19937_64 rng(42);
  const auto so3 = catalog_load("so3");
  const Element u = oracle::gaussian(rng, 3), v = oracle::gaussian(rng, 3), q = oracle::gaussian(rng, 3);
  const auto fg = PoissonFunction::black_box(
      [u, v](const DualVector& a) { return a.coeffs.dot(u) * a.coeffs.dot(v); });
  const auto f = PoissonFunction::linear(u), g = PoissonFunction::linear(v), h = PoissonFunction::linear(q);
  for (int t = 0; t < 10; ++t) {
    const DualVector a = dual(oracle::gaussian(rng, 3));
    const double lhs = lie_poisson(so3, fg, h, a);
    const double rhs = f(a) * lie_poisson(so3, g, h, a) + g(a) * lie_poisson(so3, f, h, a);
    EXPECT_NEAR(lhs, rhs, 1e-6);
  }
}

TEST(LiePoisson, LinearBracketIsSymbolic) {
  const auto su2 = catalog_load("su2");
  const auto f = poisson_linear_bracket(su2, PoissonFunction::linear(su2.basis(0)),
                                        PoissonFunction::linear(su2.basis(1)));
  ASSERT_TRUE(f.is_linear());
  EXPECT_EQ(f.direction(), su2.basis(2));
}

TEST(Sharp, Su2Examples) {
  const auto su2 = catalog_load("su2");
  const DualVector e3 = dual(su2.basis(2));
  EXPECT_EQ(poisson_sharp(su2, e3, su2.basis(0)).coeffs, Vector(su2.basis(1)));
  EXPECT_EQ(poisson_sharp(su2, e3, su2.zero()).coeffs, Vector::Zero(3));
  EXPECT_EQ(coadjoint_fundamental(su2, su2.basis(0), e3).coeffs, Vector(-su2.basis(1)));
  EXPECT_EQ(coadjoint_fundamental(su2, su2.zero(), e3).coeffs, Vector::Zero(3));
  EXPECT_EQ(coadjoint_fundamental(su2, su2.basis(0), dual(Vector::Zero(3))).coeffs, Vector::Zero(3));
}

TEST(Sharp, IsMinusCoadjointField) {
  std::mt19937_64 rng(43);
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    const DualVector a = dual(oracle::gaussian(rng, alg.dim()));
    const Element v = oracle::gaussian(rng, alg.dim());
    EXPECT_LE((poisson_sharp(alg, a, v).coeffs + coadjoint_fundamental(alg, v, a).coeffs).norm(), 1e-14)
        << name;
  }
}

TEST(Kks, Examples) {
  const auto su2 = catalog_load("su2");
  const auto a = musical_b(killing_form(su2), su2.basis(2));
  EXPECT_DOUBLE_EQ(kks(su2, a, su2.basis(0), su2.basis(1)), 2.0);
  EXPECT_EQ(kks(su2, a, su2.basis(0), su2.basis(0)), 0.0);
  std::mt19937_64 rng(44);
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    const DualVector al = dual(oracle::gaussian(rng, alg.dim()));
    const Element v = oracle::gaussian(rng, alg.dim()), w = oracle::gaussian(rng, alg.dim());
    EXPECT_NEAR(kks(alg, al, v, w),
                lie_poisson(alg, PoissonFunction::linear(v), PoissonFunction::linear(w), al), 1e-12);
    EXPECT_NEAR(kks(alg, al, v, w), al.coeffs.dot(oracle::bracket(alg, v, w)), 1e-12);
  }
}

TEST(Bivector, AntisymmetricAndMatchesKks) {
  std::mt19937_64 rng(45);
  const auto su3 = catalog_load("su3");
  const DualVector a = dual(oracle::gaussian(rng, 8));
  const Matrix pi = poisson_bivector(su3, a);
  EXPECT_EQ(pi, Matrix(-pi.transpose()));
  EXPECT_NEAR(pi(0, 1), kks(su3, a, su3.basis(0), su3.basis(1)), 1e-15);
}

TEST(JacobiPoisson, CatalogAndCorrupted) {
  std::mt19937_64 rng(46);
  const auto su2 = catalog_load("su2");
  for (int t = 0; t < 10; ++t) {
    EXPECT_LE(jacobi_poisson_residual(su2, oracle::gaussian(rng, 3), oracle::gaussian(rng, 3),
                                      oracle::gaussian(rng, 3), dual(oracle::gaussian(rng, 3))),
              1e-12);
  }
  const auto ab = catalog_load("abelian(4)");
  EXPECT_EQ(jacobi_poisson_residual(ab, oracle::gaussian(rng, 4), oracle::gaussian(rng, 4),
                                    oracle::gaussian(rng, 4), dual(oracle::gaussian(rng, 4))),
            0.0);

  // The corrupted table has cyclic sum e2 at (e3, e1, e2), so alpha = e2* sees it.
  AlgebraOptions lax;
  lax.allow_jacobi_violation = true;
  const LieAlgebra bad("bad", {"e1", "e2", "e3"},
                       {{0, 1, 2, 1.0}, {0, 1, 0, 1.0}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}}, lax);
  EXPECT_GT(jacobi_poisson_residual(bad, bad.basis(2), bad.basis(0), bad.basis(1), dual(bad.basis(1))), 0.5);
  EXPECT_GT(jacobi_poisson_residual(bad, oracle::gaussian(rng, 3), oracle::gaussian(rng, 3),
                                    oracle::gaussian(rng, 3), dual(oracle::gaussian(rng, 3))),
            0.0);
}

TEST(LeafTangent, Examples) {
  std::mt19937_64 rng(47);
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    EXPECT_LE(leaf_tangent_residual(alg, dual(oracle::gaussian(rng, alg.dim()))).residual, 1e-12) << name;
  }
  const auto su2 = catalog_load("su2");
  const auto zero = leaf_tangent_residual(su2, dual(Vector::Zero(3)));
  EXPECT_EQ(zero.residual, 0.0);
  EXPECT_EQ(zero.span_dim, 0);
  EXPECT_EQ(leaf_tangent_residual(su2, dual(su2.basis(2))).span_dim, 2);
  const auto su3 = catalog_load("su3");
  EXPECT_EQ(leaf_tangent_residual(su3, dual(oracle::gaussian(rng, 8))).span_dim, 6);
}

TEST(KksInvariance, UnderExpTransport) {
  std::mt19937_64 rng(48);
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    const int n = alg.dim();
    for (int t = 0; t < 5; ++t) {
      EXPECT_LE(kks_invariance_residual(alg, dual(oracle::gaussian(rng, n)), oracle::gaussian(rng, n),
                                        oracle::gaussian(rng, n), oracle::gaussian(rng, n), 0.4),
                1e-8)
          << name;
    }
  }
}

TEST(Coadjoint, ExpMatchesDualInverse) {
  // alpha o Ad(g^{-1}) evaluated on a vector x, computed from the two exponentials.
  std::mt19937_64 rng(49);
  const auto sl2 = catalog_load("sl2r");
  const Element v = oracle::gaussian(rng, 3), x = oracle::gaussian(rng, 3);
  const DualVector a = dual(oracle::gaussian(rng, 3));
  const auto moved = coadjoint_of_exp(sl2, v, 0.6, a);
  const Element back = adjoint_of_exp(sl2, v, -0.6).apply(x);
  EXPECT_NEAR(moved(x), a(back), 1e-12);
}

}  // namespace
}  // namespace orbitkit
