#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "orbitkit/cli/oracles.hpp"
#include "orbitkit/algebra_io.hpp"
#include "orbitkit/catalog.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/haar.hpp"
#include "orbitkit/invariant_products.hpp"
#include "orbitkit/lie_algebra.hpp"
#include "orbitkit/linalg.hpp"

namespace orbitkit {
namespace {

Element vec(std::initializer_list<double> xs) {
  Element v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

TEST(Bracket, Su2BasisTable) {
  const auto su2 = catalog_load("su2");
  EXPECT_EQ(su2.bracket(su2.basis(0), su2.basis(1)), su2.basis(2));
  EXPECT_EQ(su2.bracket(su2.basis(1), su2.basis(2)), su2.basis(0));
  EXPECT_EQ(su2.bracket(su2.basis(2), su2.basis(0)), su2.basis(1));
}

TEST(Bracket, Sl2rHE) {
  const auto sl2 = catalog_load("sl2r");
  EXPECT_EQ(sl2.bracket(sl2.basis(0), sl2.basis(1)), 2.0 * sl2.basis(1));
  EXPECT_EQ(sl2.bracket(sl2.basis(0), sl2.basis(2)), -2.0 * sl2.basis(2));
  EXPECT_EQ(sl2.bracket(sl2.basis(1), sl2.basis(2)), sl2.basis(0));
}

TEST(Bracket, SelfBracketVanishes) {
  std::mt19937_64 rng(1);
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    const Element x = oracle::gaussian(rng, alg.dim());
    EXPECT_LE(alg.bracket(x, x).norm(), 1e-12) << name;
  }
}

TEST(Bracket, DimensionMismatchThrows) {
  const auto su2 = catalog_load("su2");
  EXPECT_THROW((void)su2.bracket(vec({1, 0}), vec({0, 1, 0})), DimensionMismatch);
  EXPECT_THROW((void)su2.ad(vec({1, 0, 0, 0})), DimensionMismatch);
}

TEST(Bracket, BilinearAntisymmetricMatchesOracle) {
  std::mt19937_64 rng(2);
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    const int n = alg.dim();
    for (int trial = 0; trial < 20; ++trial) {
      const Element x = oracle::gaussian(rng, n);
      const Element y = oracle::gaussian(rng, n);
      const Element z = oracle::gaussian(rng, n);
      const double a = 0.7, b = -1.3;
      EXPECT_LE((alg.bracket(a * x + b * z, y) - a * alg.bracket(x, y) - b * alg.bracket(z, y)).norm(),
                1e-12 * (1 + x.norm() * y.norm() + z.norm() * y.norm()));
      EXPECT_LE((alg.bracket(x, y) + alg.bracket(y, x)).norm(), 1e-12);
      EXPECT_LE((alg.bracket(x, y) - oracle::bracket(alg, x, y)).norm(), 1e-12 * (1 + x.norm() * y.norm()));
    }
  }
}

TEST(Ad, Su2E3RotatesPlane) {
  const auto su2 = catalog_load("su2");
  const Matrix m = su2.ad(su2.basis(2));
  EXPECT_EQ(Element(m * su2.basis(0)), su2.basis(1));
  EXPECT_EQ(Element(m * su2.basis(1)), -su2.basis(0));
  EXPECT_EQ(Element(m * su2.basis(2)), su2.zero());
}

TEST(Ad, ZeroElementGivesZeroMatrix) {
  const auto su3 = catalog_load("su3");
  EXPECT_EQ(su3.ad(su3.zero()), Matrix::Zero(8, 8));
}

TEST(Ad, HeisenbergX) {
  const auto h = catalog_load("heisenberg3");
  const Matrix m = h.ad(h.basis(0));
  EXPECT_EQ(Element(m * h.basis(1)), h.basis(2));
  EXPECT_EQ(Element(m * h.basis(0)), h.zero());
  EXPECT_EQ(Element(m * h.basis(2)), h.zero());
}

TEST(Ad, HomomorphismOnCatalog) {
  for (const auto& name : catalog_names()) {
    EXPECT_LE(ad_homomorphism_residual(catalog_load(name)), 1e-10) << name;
  }
}

TEST(Ad, AnnihilatesDefiningElement) {
  std::mt19937_64 rng(3);
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    const Element w = oracle::gaussian(rng, alg.dim());
    EXPECT_LE((alg.ad(w) * w).norm(), 1e-12) << name;
  }
}

TEST(Jacobi, CatalogIsValid) {
  for (const auto& name : catalog_names()) {
    EXPECT_LE(jacobi_residual(catalog_load(name)), 1e-12) << name;
  }
}

TEST(Jacobi, SignFlippedSu2IsStillALieAlgebra) {
  // [e1,e2] = -e3, [e2,e3] = e1, [e3,e1] = e2 is sl(2,R) in disguise:
  // every cyclic Jacobi sum vanishes term by term.
  const LieAlgebra flipped("su2-flipped", {"e1", "e2", "e3"},
                           {{0, 1, 2, -1.0}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}});
  EXPECT_EQ(jacobi_residual(flipped), 0.0);
  // Killing form of the flipped table is indefinite like that of sl(2,R).
  const Matrix k = oracle::killing_contraction(flipped);
  EXPECT_EQ(k, Matrix(Eigen::Vector3d(-2.0, -2.0, 2.0).asDiagonal()));
}

TEST(Jacobi, CorruptedSu2IsRejected) {
  // Extra constant [e1,e2] = e3 + e1. Hand evaluation at (z, x, y) = (e3, e1, e2):
  // [e3,[e1,e2]] - [[e3,e1],e2] - [e1,[e3,e2]] = [e3,e1] - 0 - [e1,-e1] = e2.
  const std::vector<StructureEntry> entries{{0, 1, 2, 1.0}, {0, 1, 0, 1.0}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}};
  EXPECT_THROW(LieAlgebra("bad", {"e1", "e2", "e3"}, entries), JacobiViolation);
  AlgebraOptions lax;
  lax.allow_jacobi_violation = true;
  const LieAlgebra bad("bad", {"e1", "e2", "e3"}, entries, lax);
  EXPECT_GT(jacobi_residual(bad), 0.5);
}

TEST(Construction, RejectsNonAntisymmetricTensor) {
  std::vector<double> t(27, 0.0);
  t[(0 * 3 + 1) * 3 + 2] = 1.0;  // c[0][1][2] without c[1][0][2] = -1
  EXPECT_THROW(LieAlgebra::from_tensor("x", {"a", "b", "c"}, t), InvalidStructureConstants);
  t[(1 * 3 + 0) * 3 + 2] = -1.0;
  t[(1 * 3 + 2) * 3 + 0] = 1.0;
  t[(2 * 3 + 1) * 3 + 0] = -1.0;
  t[(2 * 3 + 0) * 3 + 1] = 1.0;
  t[(0 * 3 + 2) * 3 + 1] = -1.0;
  const auto alg = LieAlgebra::from_tensor("su2", {"a", "b", "c"}, t);
  EXPECT_EQ(alg.bracket(alg.basis(0), alg.basis(1)), alg.basis(2));
  EXPECT_EQ(alg.entries().size(), 3u);
}

TEST(Construction, RejectsBadSparseEntries) {
  EXPECT_THROW(LieAlgebra("x", {"a", "b"}, {{1, 0, 0, 1.0}}), InvalidStructureConstants);
  EXPECT_THROW(LieAlgebra("x", {"a", "b"}, {{0, 1, 5, 1.0}}), InvalidStructureConstants);
  EXPECT_THROW(LieAlgebra("x", {"a", "b"}, {{0, 1, 1, 1.0}, {0, 1, 1, 2.0}}),
               InvalidStructureConstants);
  EXPECT_THROW(LieAlgebra("x", {}, {}), InvalidStructureConstants);
}

TEST(Killing, Su2IsTwiceIdentity) {
  const auto su2 = catalog_load("su2");
  const Matrix oracle_k = oracle::killing_contraction(su2);
  EXPECT_EQ(oracle_k, 2.0 * Matrix::Identity(3, 3));
  EXPECT_LE(linalg::max_abs(killing_form(su2).gram() - oracle_k), 1e-14);
}

TEST(Killing, AbelianIsZero) {
  const auto k = killing_form(catalog_load("abelian(3)"));
  EXPECT_EQ(k.gram(), Matrix::Zero(3, 3));
  EXPECT_TRUE(k.is_degenerate());
}

TEST(Killing, Sl2rThesisSign) {
  const auto sl2 = catalog_load("sl2r");
  const Matrix k = killing_form(sl2).gram();
  const Matrix oracle_k = oracle::killing_contraction(sl2);
  EXPECT_EQ(oracle_k(0, 0), -8.0);
  EXPECT_EQ(oracle_k(1, 2), -4.0);
  EXPECT_EQ(oracle_k(1, 1), 0.0);
  EXPECT_EQ(oracle_k(2, 2), 0.0);
  EXPECT_LE(linalg::max_abs(k - oracle_k), 1e-14);
}

TEST(Killing, Su3IsThreeTimesIdentity) {
  const auto su3 = catalog_load("su3");
  EXPECT_LE(linalg::max_abs(oracle::killing_contraction(su3) - 3.0 * Matrix::Identity(8, 8)), 1e-14);
}

TEST(Killing, InvariantOnCatalog) {
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    const auto k = killing_form(alg);
    ASSERT_TRUE(k.cached_invariance_residual().has_value());
    EXPECT_LE(*k.cached_invariance_residual(), 1e-10) << name;
    EXPECT_LE(linalg::max_abs(k.gram() - oracle::killing_contraction(alg)), 1e-12) << name;
  }
}

TEST(AdjointOfExp, QuarterTurnAboutE3) {
  const auto su2 = catalog_load("su2");
  const auto a = adjoint_of_exp(su2, su2.basis(2), std::numbers::pi / 2);
  EXPECT_LE((a.apply(su2.basis(0)) - su2.basis(1)).norm(), 1e-14);
  EXPECT_LE((a.apply(su2.basis(1)) + su2.basis(0)).norm(), 1e-14);
  // Rotation generator exponentiated by hand: cos/sin block around e3.
  const double t = 0.3;
  const auto b = adjoint_of_exp(su2, su2.basis(2), t);
  Matrix expected = Matrix::Identity(3, 3);
  expected(0, 0) = std::cos(t);
  expected(1, 0) = std::sin(t);
  expected(0, 1) = -std::sin(t);
  expected(1, 1) = std::cos(t);
  EXPECT_LE(linalg::max_abs(b.matrix - expected), 1e-14);
}

TEST(AdjointOfExp, TimeZeroIsIdentity) {
  const auto su3 = catalog_load("su3");
  std::mt19937_64 rng(4);
  const auto a = adjoint_of_exp(su3, oracle::gaussian(rng, 8), 0.0);
  EXPECT_EQ(a.matrix, Matrix::Identity(8, 8));
}

TEST(AdjointOfExp, FixesGeneratorAndIsAutomorphism) {
  std::mt19937_64 rng(5);
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    const Element v = oracle::gaussian(rng, alg.dim());
    const auto a = adjoint_of_exp(alg, v, 0.8);
    EXPECT_LE((a.apply(v) - v).norm(), 1e-12 * (1 + v.norm())) << name;
    EXPECT_LE(automorphism_residual(alg, a.matrix), 1e-10) << name;
    EXPECT_LE(linalg::max_abs(a.matrix * a.inverse - Matrix::Identity(alg.dim(), alg.dim())), 1e-12);
  }
}

TEST(AdjointOfExp, ConjugationIdentity) {
  std::mt19937_64 rng(6);
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    for (int k = 0; k < 5; ++k) {
      const Element v = oracle::gaussian(rng, alg.dim());
      const Element w = oracle::gaussian(rng, alg.dim());
      const auto a = adjoint_of_exp(alg, v, 0.5);
      const Matrix lhs = alg.ad(a.apply(w));
      const Matrix rhs = a.matrix * alg.ad(w) * a.inverse;
      EXPECT_LE(linalg::max_abs(lhs - rhs), 1e-8) << name;
    }
  }
}

TEST(Catalog, ShapesAndErrors) {
  EXPECT_EQ(catalog_load("su2").dim(), 3);
  EXPECT_EQ(catalog_load("so3").dim(), 3);
  EXPECT_EQ(catalog_load("su3").dim(), 8);
  EXPECT_EQ(catalog_load("sl2c_real").dim(), 6);
  const auto ab = catalog_load("abelian(4)");
  EXPECT_EQ(ab.dim(), 4);
  EXPECT_TRUE(ab.entries().empty());
  EXPECT_EQ(ab.max_abs_constant(), 0.0);
  EXPECT_THROW((void)catalog_load("e8"), UnknownAlgebra);
  EXPECT_THROW((void)catalog_load("abelian(x)"), UnknownAlgebra);
  EXPECT_THROW((void)catalog_load("abelian(0)"), UnknownAlgebra);
}

TEST(Catalog, Su3MatchesGellMannCommutators) {
  // Structure constants recomputed from the matrices: c_abk = -2 Re tr([T_a, T_b] T_k).
  const auto su3 = catalog_load("su3");
  const auto t = su_basis(3);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int k = 0; k < 8; ++k) {
        const CMatrix comm = t[a] * t[b] - t[b] * t[a];
        EXPECT_NEAR(su3.c(a, b, k), -2.0 * (comm * t[k]).trace().real(), 1e-14);
      }
}

TEST(Catalog, Su2MatchesPauliCommutators) {
  const auto su2 = catalog_load("su2");
  const auto t = su_basis(2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int k = 0; k < 3; ++k) {
        const CMatrix comm = t[a] * t[b] - t[b] * t[a];
        EXPECT_NEAR(su2.c(a, b, k), -2.0 * (comm * t[k]).trace().real(), 1e-15);
      }
}

TEST(Catalog, Sl2cRealification) {
  // Realify by hand: brackets of (h, e, f, ih, ie, if) from complex multiplication.
  const auto s = catalog_load("sl2c_real");
  const Element h = s.basis(0), e = s.basis(1), f = s.basis(2);
  const Element ih = s.basis(3), ie = s.basis(4), iff = s.basis(5);
  EXPECT_EQ(s.bracket(h, e), 2.0 * e);
  EXPECT_EQ(s.bracket(ih, e), 2.0 * ie);
  EXPECT_EQ(s.bracket(e, ih), -2.0 * ie);
  EXPECT_EQ(s.bracket(ie, iff), -h);
  EXPECT_EQ(s.bracket(ih, ie), -2.0 * e);
  EXPECT_EQ(s.bracket(e, iff), ih);
  EXPECT_LE(jacobi_residual(s), 1e-12);
}

TEST(AlgebraJson, RoundTripIsBitExact) {
  const LieAlgebra odd("odd", {"x", "y", "z"},
                       {{0, 1, 2, 0.1}, {1, 2, 0, 0.1}, {0, 2, 1, -0.1}});
  const std::string text = algebra_to_json(odd);
  const auto back = algebra_from_json(text);
  EXPECT_EQ(back.entries(), odd.entries());
  EXPECT_EQ(back.name(), "odd");
  EXPECT_EQ(back.basis_labels(), odd.basis_labels());
  EXPECT_EQ(algebra_to_json(back), text);
}

TEST(AlgebraJson, RoundTripPropertyOnRandomValues) {
  // Scaled su(3) constants: any positive rescaling stays a Lie algebra.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  const auto su3 = catalog_load("su3");
  for (int trial = 0; trial < 20; ++trial) {
    const double s = scale(rng);
    std::vector<StructureEntry> entries = su3.entries();
    for (auto& e : entries) e.value *= s;
    const LieAlgebra alg("scaled", su3.basis_labels(), entries);
    const auto back = algebra_from_json(algebra_to_json(alg));
    ASSERT_EQ(back.entries().size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      EXPECT_EQ(std::bit_cast<std::uint64_t>(back.entries()[i].value),
                std::bit_cast<std::uint64_t>(entries[i].value));
    }
  }
}

TEST(AlgebraJson, LoaderAntisymmetrizes) {
  const auto alg = algebra_from_json(
      R"({"name": "heis", "dim": 3, "basis": ["X", "Y", "Z"], "c": [[0, 1, 2, 1.0]]})");
  EXPECT_EQ(alg.bracket(alg.basis(1), alg.basis(0)), -alg.basis(2));
}

TEST(AlgebraJson, MalformedInputs) {
  EXPECT_THROW((void)algebra_from_json("{"), ParseError);
  EXPECT_THROW((void)algebra_from_json(R"({"dim": 2, "basis": ["a"], "c": []})"), ParseError);
  EXPECT_THROW((void)algebra_from_json(R"({"dim": 2, "basis": ["a", "b"], "c": [[0, 1]]})"),
               ParseError);
  EXPECT_THROW((void)algebra_from_json(R"({"dim": 2, "basis": ["a", "b"], "c": [[1, 0, 0, 1.0]]})"),
               InvalidStructureConstants);
  EXPECT_THROW((void)resolve_algebra("/nonexistent/file.json"), UnknownAlgebra);
}

}  // namespace
}  // namespace orbitkit
