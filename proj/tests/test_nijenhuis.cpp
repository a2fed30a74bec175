#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "orbitkit/catalog.hpp"
#include "orbitkit/cli/oracles.hpp"
#include "orbitkit/cli/verification.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/nijenhuis.hpp"

namespace orbitkit {
namespace {

// A = S J0 S^{-1} with the shear S = [[1, f], [0, 1]] and f(p) = cos(p0) p1 + p0^2 / 3.
TensorField planar(bool exact, double step = 0.0) {
  TensorField t;
  t.dim = 2;
  const auto f = [](const Vector& p) { return std::cos(p[0]) * p[1] + p[0] * p[0] / 3.0; };
  t.evaluate = [f](const Vector& p) {
    const double v = f(p);
    Matrix a(2, 2);
    a << v, -(1.0 + v * v), 1.0, -v;
    return a;
  };
  if (exact) {
    t.derivative = [f](const Vector& p, const Vector& y) {
      const double df = (-std::sin(p[0]) * p[1] + 2.0 * p[0] / 3.0) * y[0] + std::cos(p[0]) * y[1];
      Matrix m(2, 2);
      m << 1.0, -2.0 * f(p), 0.0, -1.0;
      return Matrix(df * m);
    };
  }
  t.fd_step = step;
  return t;
}

TensorField warped(bool exact, double step = 0.0) {
  TensorField t;
  t.dim = 4;
  t.evaluate = [](const Vector& p) {
    const double r = std::exp(-p[0]);
    Matrix a = Matrix::Zero(4, 4);
    a(2, 0) = r;
    a(3, 1) = 1.0 / r;
    a(0, 2) = -1.0 / r;
    a(1, 3) = -r;
    return a;
  };
  if (exact) {
    t.derivative = [](const Vector& p, const Vector& y) {
      const double r = std::exp(-p[0]);
      Matrix m = Matrix::Zero(4, 4);
      m(2, 0) = -r;
      m(3, 1) = 1.0 / r;
      m(0, 2) = -1.0 / r;
      m(1, 3) = r;
      return Matrix(y[0] * m);
    };
  }
  t.fd_step = step;
  return t;
}

TEST(NijenhuisFlat, ConstantFieldIsExactlyZero) {
  std::mt19937_64 rng(51);
  TensorField c;
  c.dim = 4;
  Matrix a(4, 4);
  for (int r = 0; r < 4; ++r) a.row(r) = oracle::gaussian(rng, 4).transpose();
  c.evaluate = [a](const Vector&) { return a; };
  for (int t = 0; t < 5; ++t) {
    EXPECT_EQ(nijenhuis_flat(c, oracle::gaussian(rng, 4), oracle::gaussian(rng, 4), oracle::gaussian(rng, 4)),
              Vector::Zero(4));
  }
}

TEST(NijenhuisFlat, PlanarAlmostComplexVanishes) {
  std::mt19937_64 rng(52);
  const auto ex = planar(true);
  const auto fd = planar(false);
  for (int t = 0; t < 10; ++t) {
    const Vector p = oracle::gaussian(rng, 2), x = oracle::gaussian(rng, 2), y = oracle::gaussian(rng, 2);
    const Matrix a = ex.evaluate(p);
    ASSERT_LE((a * a + Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE(nijenhuis_flat(ex, p, x, y).norm(), 1e-12);
    EXPECT_LE(nijenhuis_flat(fd, p, x, y).norm(), 1e-6);
  }
}

TEST(NijenhuisFlat, WarpedStructureHandValue) {
  // At the origin r = 1, dA(e1) flips the sign pattern, and N(dx1, dx2) = -dx2.
  const auto ex = warped(true);
  const Vector n = nijenhuis_flat(ex, Vector::Zero(4), Vector::Unit(4, 0), Vector::Unit(4, 1));
  EXPECT_LE((n + Vector::Unit(4, 1)).norm(), 1e-14);
  const auto fd = warped(false);
  EXPECT_LE((nijenhuis_flat(fd, Vector::Zero(4), Vector::Unit(4, 0), Vector::Unit(4, 1)) - n).norm(), 1e-6);
}

TEST(NijenhuisFlat, FiniteDifferencesAreSecondOrder) {
  std::mt19937_64 rng(53);
  for (double h : {1e-2, 1e-3}) {
    const auto ex = warped(true);
    const auto fd = warped(false, h);
    const auto ex2 = planar(true);
    const auto fd2 = planar(false, h);
    for (int t = 0; t < 10; ++t) {
      const Vector p = 0.5 * oracle::gaussian(rng, 4), x = oracle::gaussian(rng, 4), y = oracle::gaussian(rng, 4);
      EXPECT_LE((nijenhuis_flat(fd, p, x, y) - nijenhuis_flat(ex, p, x, y)).norm(), 10.0 * h * h);
      const Vector p2 = oracle::gaussian(rng, 2), x2 = oracle::gaussian(rng, 2), y2 = oracle::gaussian(rng, 2);
      EXPECT_LE((nijenhuis_flat(fd2, p2, x2, y2) - nijenhuis_flat(ex2, p2, x2, y2)).norm(), 10.0 * h * h);
    }
  }
}

TEST(NijenhuisFlat, DefaultStepScalesWithPoint) {
  TensorField t = planar(false);
  EXPECT_DOUBLE_EQ(t.step_at(Vector::Zero(2)), 1e-5);
  Vector p(2);
  p << 3.0, 4.0;
  EXPECT_DOUBLE_EQ(t.step_at(p), 6e-5);
}

TEST(NijenhuisOrbit, Su2E3) {
  const auto su2 = catalog_load("su2");
  const auto d = decompose(su2, su2.basis(2));
  const auto j = canonical_J(d);
  EXPECT_LE(nijenhuis_orbit(su2, d, j, su2.basis(0), su2.basis(1)).norm(), 1e-9);
  EXPECT_EQ(nijenhuis_orbit(su2, d, j, su2.zero(), su2.basis(1)).norm(), 0.0);
}

TEST(NijenhuisOrbit, Su3CartanMixedBlocks) {
  const auto su3 = catalog_load("su3");
  Element w = Element::Zero(8);
  w[2] = -2.0;
  const auto d = decompose(su3, w);
  const auto j = canonical_J(d);
  std::mt19937_64 rng(54);
  for (int t = 0; t < 10; ++t) {
    const Element u = d.blocks()[0].basis * oracle::gaussian(rng, 4);
    const Element v = d.blocks()[1].basis * oracle::gaussian(rng, 2);
    EXPECT_LE(nijenhuis_orbit(su3, d, j, u, v).norm(), 1e-8);
  }
  EXPECT_LE(nijenhuis_sweep(su3, d, j), 1e-8);
}

TEST(NijenhuisOrbit, AntisymmetryAndJSymmetry) {
  std::mt19937_64 rng(55);
  for (const auto* name : {"su3", "sl2c_real"}) {
    const auto alg = catalog_load(name);
    const auto d = decompose(alg, cli::sample_skew_element(alg, rng));
    const auto j = canonical_J(d);
    for (std::size_t a = 0; a < d.blocks().size(); ++a) {
      for (std::size_t b = 0; b < d.blocks().size(); ++b) {
        const Element u = d.blocks()[a].basis * oracle::gaussian(rng, d.blocks()[a].dim());
        const Element v = d.blocks()[b].basis * oracle::gaussian(rng, d.blocks()[b].dim());
        const Element n_uv = nijenhuis_orbit(alg, d, j, u, v);
        EXPECT_LE((n_uv + nijenhuis_orbit(alg, d, j, v, u)).norm(), 1e-10);
        const Element n_ju = nijenhuis_orbit(alg, d, j, j.apply(d, u), v);
        EXPECT_LE((n_ju + j.apply(d, d.image_projector() * n_uv)).norm(), 1e-9);
      }
    }
  }
}

TEST(NijenhuisOrbit, VanishesOnSampledSkewElements) {
  std::mt19937_64 rng(56);
  for (const auto* name : {"su2", "so3", "su3", "sl2r", "sl2c_real"}) {
    const auto alg = catalog_load(name);
    for (int t = 0; t < 20; ++t) {
      const auto d = decompose(alg, cli::sample_skew_element(alg, rng));
      EXPECT_LE(nijenhuis_sweep(alg, d, canonical_J(d)), 1e-8) << name;
    }
  }
}

TEST(NijenhuisOrbit, RejectsMixedBlockArgument) {
  const auto su3 = catalog_load("su3");
  Element w = Element::Zero(8);
  w[2] = -2.0;
  const auto d = decompose(su3, w);
  const auto j = canonical_J(d);
  const Element mixed = d.blocks()[0].basis.col(0) + d.blocks()[1].basis.col(0);
  EXPECT_THROW((void)nijenhuis_orbit(su3, d, j, mixed, d.blocks()[0].basis.col(1)),
               BlockMembershipViolation);
  EXPECT_THROW((void)nijenhuis_orbit(su3, d, j, su3.basis(2), d.blocks()[0].basis.col(1)),
               BlockMembershipViolation);
}

}  // namespace
}  // namespace orbitkit
