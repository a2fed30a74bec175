#include "orbitkit/cli/verification.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "orbitkit/catalog.hpp"
#include "orbitkit/cli/oracles.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/haar.hpp"
#include "orbitkit/invariant_products.hpp"
#include "orbitkit/json_format.hpp"
#include "orbitkit/linalg.hpp"
#include "orbitkit/nijenhuis.hpp"
#include "orbitkit/orbit_geometry.hpp"
#include "orbitkit/poisson.hpp"
#include "orbitkit/spectral.hpp"

namespace orbitkit::cli {

void CriterionResult::check_le(const std::string& name, double value, double threshold) {
  const bool ok = value <= threshold;  // NaN fails
  checks.push_back({name, value, threshold, ok});
  if (!ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s = %.3e exceeds %.1e", name.c_str(), value, threshold);
    failures.emplace_back(buf);
    passed = false;
  }
}

void CriterionResult::check(const std::string& name, bool ok, const std::string& detail) {
  checks.push_back({name, ok ? 0.0 : 1.0, 0.0, ok});
  if (!ok) {
    failures.push_back(detail.empty() ? name : name + ": " + detail);
    passed = false;
  }
}

Element sample_skew_element(const LieAlgebra& alg, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  const auto conjugate = [&](const Element& x) {
    const Element v = oracle::gaussian(rng, alg.dim()).normalized();
    return adjoint_of_exp(alg, v, 0.3 * unit(rng)).apply(x);
  };
  if (alg.name() == "sl2r") {
    return conjugate(scale(rng) * (alg.basis(1) - alg.basis(2)));
  }
  if (alg.name() == "sl2c_real") {
    // ih, e - f and ie + if span a copy of su(2).
    const Element x = scale(rng) * alg.basis(3) + unit(rng) * (alg.basis(1) - alg.basis(2)) +
                      unit(rng) * (alg.basis(4) + alg.basis(5));
    return conjugate(x);
  }
  if (!is_compact_catalog(alg.name())) {
    throw UnknownAlgebra("no skew-element sampler for '" + alg.name() + "'");
  }
  return oracle::gaussian(rng, alg.dim());
}

namespace {

struct Worst {
  double value = 0.0;
  void add(double x) { value = std::isnan(x) || std::isnan(value) ? NAN : std::max(value, x); }
};

std::mt19937_64 criterion_rng(std::uint64_t seed, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return std::mt19937_64(seq);
}

const std::vector<std::string> kCompact = {"su2", "so3", "su3"};
const std::vector<std::string> kSkewFamilies = {"su2", "su3", "sl2r", "sl2c_real"};

double residual_or_nan(const OrbitStructureReport& r, const std::string& name) {
  return r.residual(name).value_or(NAN);
}

void require_no_errors(CriterionResult& c, const std::string& algebra, const OrbitStructureReport& r) {
  if (r.errors.empty()) return;
  c.check("orbit_report_" + algebra, false, r.errors.front().first + ": " + r.errors.front().second);
}

CriterionResult algebra_validity() {
  CriterionResult c{1, "algebra validity (Jacobi identity, Killing invariance)"};
  Worst jacobi, invariance, contraction;
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    jacobi.add(jacobi_residual(alg));
    const auto k = killing_form(alg);
    invariance.add(invariance_residual(alg, k));
    contraction.add(linalg::max_abs(k.gram() - oracle::killing_contraction(alg)));
  }
  c.check_le("jacobi_residual", jacobi.value, 1e-12);
  c.check_le("killing_invariance_residual", invariance.value, 1e-10);
  c.check_le("killing_vs_contraction_oracle", contraction.value, 1e-12);
  return c;
}

CriterionResult classification(std::uint64_t seed) {
  CriterionResult c{2, "skew-symmetry classification"};
  auto rng = criterion_rng(seed, 2);
  int compact_fail = 0;
  for (const auto& name : kCompact) {
    const auto alg = catalog_load(name);
    for (int k = 0; k < 50; ++k) {
      const Element x = oracle::gaussian(rng, alg.dim());
      if (classify_skew(alg, x).verdict != SkewVerdict::SkewSymmetric) ++compact_fail;
    }
  }
  c.check("compact_samples_skew", compact_fail == 0,
          std::to_string(compact_fail) + " compact samples not SkewSymmetric");

  const auto sl2 = catalog_load("sl2r");
  const auto h_verdict = classify_skew(sl2, sl2.basis(0)).verdict;
  c.check("sl2r_h_off_axis", h_verdict == SkewVerdict::OffAxisEigenvalue, to_string(h_verdict));
  const auto ef_verdict = classify_skew(sl2, sl2.basis(1) - sl2.basis(2)).verdict;
  c.check("sl2r_e_minus_f_skew", ef_verdict == SkewVerdict::SkewSymmetric, to_string(ef_verdict));

  // Nilpotent generators of heisenberg3 with ad != 0: X, Y and a X + b Y + c Z
  // with (a, b) != 0. The centre Z has ad_Z = 0, which is diagonalizable.
  const auto heis = catalog_load("heisenberg3");
  std::vector<Element> nilpotent{heis.basis(0), heis.basis(1)};
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    Element x(3);
    x << 0.2 + std::abs(unit(rng)), unit(rng), unit(rng);
    if (k % 2 == 1) std::swap(x[0], x[1]);
    nilpotent.push_back(x);
  }
  int heis_fail = 0;
  for (const auto& x : nilpotent) {
    // Oracle: ad_x is nonzero and ad_x^2 = 0, hence not diagonalizable.
    const Matrix adx = heis.ad(x);
    const bool nilpotent_oracle = linalg::max_abs(adx * adx) == 0.0 && linalg::max_abs(adx) > 0.0;
    if (!nilpotent_oracle || classify_skew(heis, x).verdict != SkewVerdict::NonDiagonalizable) {
      ++heis_fail;
    }
  }
  c.check("heisenberg_nilpotent_non_diagonalizable", heis_fail == 0,
          std::to_string(heis_fail) + " generators misclassified");

  // Minkowski operator: closed-form eigenvalues +-1.
  Matrix mink(2, 2);
  mink << 0, 1, 1, 0;
  const auto mc = classify_operator(mink);
  c.check("minkowski_off_axis", mc.verdict == SkewVerdict::OffAxisEigenvalue, to_string(mc.verdict));
  double eig_err = mc.eigenvalues.size() == 2 ? 0.0 : INFINITY;
  if (mc.eigenvalues.size() == 2) {
    double lo = std::min(mc.eigenvalues[0].real(), mc.eigenvalues[1].real());
    double hi = std::max(mc.eigenvalues[0].real(), mc.eigenvalues[1].real());
    eig_err = std::max({std::abs(lo + 1.0), std::abs(hi - 1.0), std::abs(mc.eigenvalues[0].imag()),
                        std::abs(mc.eigenvalues[1].imag())});
  }
  c.check_le("minkowski_eigenvalues_vs_closed_form", eig_err, 1e-12);
  return c;
}

CriterionResult spectral(std::uint64_t seed) {
  CriterionResult c{3, "spectral decomposition invariants"};
  auto rng = criterion_rng(seed, 3);
  Worst completeness, invariance, square;
  int dim_fail = 0;
  for (const auto& name : kCompact) {
    const auto alg = catalog_load(name);
    for (int k = 0; k < 50; ++k) {
      const Element w = oracle::gaussian(rng, alg.dim());
      const auto d = decompose(alg, w);
      const auto r = decomposition_residuals(d);
      completeness.add(r.completeness);
      invariance.add(r.block_invariance);
      square.add(r.block_square);
      const int oracle_rank = static_cast<int>(oracle::image_of_ad(alg, w, 1e-9).cols());
      if (!r.even_blocks || !r.dimensions_add_up || d.image_dim() != oracle_rank) ++dim_fail;
    }
  }
  c.check_le("projector_completeness", completeness.value, 1e-8);
  c.check_le("block_invariance", invariance.value, 1e-8);
  c.check_le("block_square_minus_mu2", square.value, 1e-8);
  c.check("block_dimensions_vs_rank_oracle", dim_fail == 0,
          std::to_string(dim_fail) + " decompositions with inconsistent dimensions");
  return c;
}

struct OrbitCase {
  std::string algebra;
  Element w;
};

std::vector<OrbitCase> orbit_cases(std::mt19937_64& rng, int per_family) {
  std::vector<OrbitCase> cases;
  for (const auto& name : kSkewFamilies) {
    const auto alg = catalog_load(name);
    for (int k = 0; k < per_family; ++k) cases.push_back({name, sample_skew_element(alg, rng)});
  }
  return cases;
}

CriterionResult canonical_j(std::uint64_t seed) {
  CriterionResult c{4, "canonical complex structure J"};
  auto rng = criterion_rng(seed, 4);
  Worst squared, transport, conjugation;
  for (const auto& oc : orbit_cases(rng, 3)) {
    const auto alg = catalog_load(oc.algebra);
    OrbitReportOptions options;
    options.seed = rng();
    options.conjugation_samples = 10;
    options.triple_samples = 0;
    const auto r = orbit_report(alg, killing_form(alg), EquivariantMap::identity(), oc.w, options);
    require_no_errors(c, oc.algebra, r);
    squared.add(residual_or_nan(r, "j_squared"));
    transport.add(residual_or_nan(r, "eigenvector_transport"));
    conjugation.add(residual_or_nan(r, "conjugation"));
  }
  c.check_le("j_squared_plus_identity", squared.value, 1e-10);
  c.check_le("eigenvector_transport", transport.value, 1e-9);
  c.check_le("conjugation_identity", conjugation.value, 1e-8);
  return c;
}

Element su3_cartan_example() {
  // diag(i, -i, 0) = -2 T_3.
  Element w = Element::Zero(8);
  w[2] = -2.0;
  return w;
}

CriterionResult semi_kaehler(std::uint64_t seed) {
  CriterionResult c{5, "semi-Kaehler structure and signatures"};
  auto rng = criterion_rng(seed, 5);
  Worst compat, symmetry, orthogonality, scaling;
  const auto accumulate = [&](const OrbitStructureReport& r) {
    compat.add(residual_or_nan(r, "compatibility"));
    symmetry.add(residual_or_nan(r, "metric_symmetry"));
    orthogonality.add(residual_or_nan(r, "block_orthogonality"));
    scaling.add(residual_or_nan(r, "block_scaling"));
  };
  OrbitReportOptions options;
  options.triple_samples = 0;
  options.conjugation_samples = 0;

  for (const auto& oc : orbit_cases(rng, 5)) {
    const auto alg = catalog_load(oc.algebra);
    accumulate(orbit_report(alg, killing_form(alg), EquivariantMap::identity(), oc.w, options));
  }

  struct Expected {
    std::string algebra;
    Element w;
    Signature signature;
  };
  const auto sl2 = catalog_load("sl2r");
  const auto sl2c = catalog_load("sl2c_real");
  const std::vector<Expected> expected{
      {"su2", catalog_load("su2").basis(2), {2, 0, 0}},
      {"su3", su3_cartan_example(), {6, 0, 0}},
      {"sl2r", sl2.basis(1) - sl2.basis(2), {0, 2, 0}},
      {"sl2c_real", sl2c.basis(3), {2, 2, 0}},
  };
  for (const auto& e : expected) {
    const auto alg = catalog_load(e.algebra);
    const auto k = killing_form(alg);
    const auto r = orbit_report(alg, k, EquivariantMap::identity(), e.w, options);
    accumulate(r);
    const auto sig_oracle = oracle::image_gram_signature(alg, oracle::killing_contraction(alg), e.w);
    const bool ok = r.signature && *r.signature == e.signature &&
                    sig_oracle.positive == e.signature.positive &&
                    sig_oracle.negative == e.signature.negative &&
                    sig_oracle.zero == e.signature.zero;
    std::string got = "none";
    if (r.signature) {
      got = "(" + std::to_string(r.signature->positive) + "," +
            std::to_string(r.signature->negative) + "," + std::to_string(r.signature->zero) + ")";
    }
    c.check("signature_" + e.algebra, ok, "got " + got);
    c.check("is_kaehler_" + e.algebra, r.is_kaehler == (e.signature.negative == 0));
  }

  // su3 regular elements beyond the Cartan example.
  const auto su3 = catalog_load("su3");
  int su3_fail = 0;
  for (int t = 0; t < 10; ++t) {
    const Element w = oracle::gaussian(rng, 8);
    const auto r = orbit_report(su3, killing_form(su3), EquivariantMap::identity(), w, options);
    accumulate(r);
    if (!r.signature || !(*r.signature == Signature{6, 0, 0})) ++su3_fail;
  }
  c.check("signature_su3_random_regular", su3_fail == 0);

  // su2 orbit Gram at e3 against the contraction oracle restricted to im ad_e3.
  const auto su2 = catalog_load("su2");
  const auto r = orbit_report(su2, killing_form(su2), EquivariantMap::identity(), su2.basis(2),
                              options);
  const Matrix q = oracle::image_of_ad(su2, su2.basis(2), 1e-9);
  const Matrix oracle_gram = q.transpose() * oracle::killing_contraction(su2) * q;
  double gram_err = INFINITY;
  if (r.metric && r.metric->rows() == 2 && oracle_gram.rows() == 2) {
    gram_err = std::max(linalg::max_abs(*r.metric - 2.0 * Matrix::Identity(2, 2)),
                        linalg::max_abs(oracle_gram - 2.0 * Matrix::Identity(2, 2)));
  }
  c.check_le("su2_gram_vs_2I", gram_err, 1e-10);

  c.check_le("compatibility", compat.value, 1e-10);
  c.check_le("metric_symmetry", symmetry.value, 1e-10);
  c.check_le("block_orthogonality", orthogonality.value, 1e-8);
  c.check_le("block_scaling", scaling.value, 1e-8);
  return c;
}

CriterionResult transgression(std::uint64_t seed) {
  CriterionResult c{6, "transgression form"};
  auto rng = criterion_rng(seed, 6);
  const std::vector<EquivariantMap> maps{EquivariantMap::identity(), EquivariantMap::scaled(2.5),
                                         EquivariantMap::scaled(-0.7)};
  Worst d_omega, membership;
  for (const auto& name : kSkewFamilies) {
    const auto alg = catalog_load(name);
    const auto k = killing_form(alg);
    for (const auto& s : maps) {
      for (int t = 0; t < 100; ++t) {
        const Element w = t % 10 == 0 ? sample_skew_element(alg, rng) : oracle::gaussian(rng, alg.dim());
        const Element u = oracle::gaussian(rng, alg.dim());
        const Element v = oracle::gaussian(rng, alg.dim());
        const Element q = oracle::gaussian(rng, alg.dim());
        d_omega.add(d_omega_s_residual(alg, k, s, w, u, v, q));
        membership.add(kernel_membership_residual(alg, s, w));
      }
    }
  }
  c.check_le("d_omega_s", d_omega.value, 1e-10);
  c.check_le("kernel_membership", membership.value, 0.0);

  const auto su2 = catalog_load("su2");
  bool degenerate = false;
  try {
    (void)two_form_matrix(su2, killing_form(su2), EquivariantMap::scaled(0.0),
                          decompose(su2, su2.basis(2)));
  } catch (const DegenerateForm&) {
    degenerate = true;
  }
  c.check("scaled_zero_degenerate", degenerate, "DegenerateForm not raised");
  return c;
}

// A_p = [[f, -(1 + f^2)], [1, -f]] squares to -I for any f.
TensorField planar_complex_structure(bool exact) {
  TensorField t;
  t.dim = 2;
  const auto f = [](const Vector& p) { return std::sin(p[0]) * std::cos(0.7 * p[1]) + 0.3 * p[1]; };
  t.evaluate = [f](const Vector& p) {
    const double v = f(p);
    Matrix a(2, 2);
    a << v, -(1.0 + v * v), 1.0, -v;
    return a;
  };
  if (exact) {
    t.derivative = [f](const Vector& p, const Vector& y) {
      const double v = f(p);
      const double df = std::cos(p[0]) * std::cos(0.7 * p[1]) * y[0] +
                        (-0.7 * std::sin(p[0]) * std::sin(0.7 * p[1]) + 0.3) * y[1];
      Matrix m(2, 2);
      m << 1.0, -2.0 * v, 0.0, -1.0;
      return Matrix(df * m);
    };
  }
  t.fd_step = 1e-3;
  return t;
}

// Coordinates (x1, x2, y1, y2) and r = exp(-x1).
TensorField warped_structure(bool exact) {
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
  t.fd_step = 1e-3;
  return t;
}

CriterionResult nijenhuis(std::uint64_t seed) {
  CriterionResult c{7, "Nijenhuis tensor"};
  auto rng = criterion_rng(seed, 7);
  Worst orbit;
  for (const auto& name : kSkewFamilies) {
    const auto alg = catalog_load(name);
    for (int k = 0; k < 20; ++k) {
      const auto d = decompose(alg, sample_skew_element(alg, rng));
      orbit.add(nijenhuis_sweep(alg, d, canonical_J(d)));
    }
  }
  c.check_le("orbit_nijenhuis", orbit.value, 1e-8);

  TensorField constant;
  constant.dim = 3;
  Matrix a0(3, 3);
  a0 << 1, 2, 3, -4, 5, 6, 7, -8, 9;
  constant.evaluate = [a0](const Vector&) { return a0; };
  Worst constant_n;
  for (int k = 0; k < 10; ++k) {
    constant_n.add(nijenhuis_flat(constant, oracle::gaussian(rng, 3), oracle::gaussian(rng, 3),
                                  oracle::gaussian(rng, 3))
                       .cwiseAbs()
                       .maxCoeff());
  }
  c.check_le("constant_field", constant_n.value, 0.0);

  Worst fd_gap_2d, fd_gap_4d, exact_2d;
  const auto fd2 = planar_complex_structure(false);
  const auto ex2 = planar_complex_structure(true);
  const auto fd4 = warped_structure(false);
  const auto ex4 = warped_structure(true);
  for (int k = 0; k < 10; ++k) {
    const Vector p2 = oracle::gaussian(rng, 2), x2 = oracle::gaussian(rng, 2), y2 = oracle::gaussian(rng, 2);
    const Vector n_exact = nijenhuis_flat(ex2, p2, x2, y2);
    exact_2d.add(n_exact.norm());
    fd_gap_2d.add((nijenhuis_flat(fd2, p2, x2, y2) - n_exact).norm());
    const Vector p4 = 0.5 * oracle::gaussian(rng, 4), x4 = oracle::gaussian(rng, 4), y4 = oracle::gaussian(rng, 4);
    fd_gap_4d.add((nijenhuis_flat(fd4, p4, x4, y4) - nijenhuis_flat(ex4, p4, x4, y4)).norm());
  }
  const double h = 1e-3;
  c.check_le("planar_exact_vanishes", exact_2d.value, 1e-12);
  c.check_le("planar_fd_vs_exact", fd_gap_2d.value, 10.0 * h * h);
  c.check_le("warped_fd_vs_exact", fd_gap_4d.value, 10.0 * h * h);

  // Hand value: N(dx1, dx2) = -dx2 at the origin.
  const Vector n0 = nijenhuis_flat(ex4, Vector::Zero(4), Vector::Unit(4, 0), Vector::Unit(4, 1));
  c.check_le("warped_hand_value", (n0 + Vector::Unit(4, 1)).norm(), 1e-14);
  return c;
}

CriterionResult poisson(std::uint64_t seed) {
  CriterionResult c{8, "Lie-Poisson and KKS"};
  auto rng = criterion_rng(seed, 8);
  Worst jacobi, consistency, leaf, transport;
  for (const auto& name : catalog_names()) {
    const auto alg = catalog_load(name);
    const int n = alg.dim();
    for (int k = 0; k < 20; ++k) {
      const DualVector alpha{oracle::gaussian(rng, n)};
      const Element u = oracle::gaussian(rng, n);
      const Element v = oracle::gaussian(rng, n);
      const Element q = oracle::gaussian(rng, n);
      jacobi.add(jacobi_poisson_residual(alg, u, v, q, alpha));
      const double lp = lie_poisson(alg, PoissonFunction::linear(u), PoissonFunction::linear(v), alpha);
      const double oracle_value = alpha.coeffs.dot(oracle::bracket(alg, u, v));
      consistency.add(std::max(std::abs(kks(alg, alpha, u, v) - lp), std::abs(lp - oracle_value)));
      leaf.add(leaf_tangent_residual(alg, alpha).residual);
      // Non-compact groups stretch under exp; keep the transport moderate.
      transport.add(kks_invariance_residual(alg, alpha, u, v, 0.5 * q, 0.5));
    }
  }
  c.check_le("jacobi_poisson", jacobi.value, 1e-12);
  c.check_le("kks_lie_poisson_consistency", consistency.value, 1e-12);
  c.check_le("leaf_tangent", leaf.value, 1e-12);
  c.check_le("kks_exp_invariance", transport.value, 1e-8);
  return c;
}

CriterionResult haar(std::uint64_t seed) {
  CriterionResult c{9, "Haar averaging"};
  const auto su2 = catalog_load("su2");
  const auto sampler = HaarSampler::for_algebra(su2);
  const std::int64_t n = 100000;
  const ScalarProduct p0(Matrix(Eigen::Vector3d(1.0, 2.0, 3.0).asDiagonal()));
  const Matrix target = 2.0 * Matrix::Identity(3, 3);

  const auto first = haar_average(su2, p0, sampler, n, seed);
  const auto second = haar_average(su2, p0, sampler, n, seed ^ 0x9e3779b97f4a7c15ULL);
  c.check_le("invariance_residual", invariance_residual(su2, first), 0.02);
  c.check_le("distance_to_2I", linalg::max_abs(first.gram() - target), 0.03);
  c.check_le("second_seed_distance_to_2I", linalg::max_abs(second.gram() - target), 0.03);
  c.check_le("seed_to_seed_spread", linalg::max_abs(first.gram() - second.gram()),
             2.0 * 5.0 / std::sqrt(static_cast<double>(n)));

  const auto invariant = haar_average(su2, killing_form(su2), sampler, n, seed);
  c.check_le("invariant_input_reproduced", linalg::max_abs(invariant.gram() - target), 0.03);

  const auto single = haar_average(su2, p0, sampler, n, seed, 1);
  const auto threaded = haar_average(su2, p0, sampler, n, seed, 4);
  c.check("thread_count_independent", single.gram() == threaded.gram() && single.gram() == first.gram());
  return c;
}

}  // namespace

std::vector<CriterionResult> run_property_criteria(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  const auto guarded = [&](int id, const char* title, auto&& body) {
    try {
      out.push_back(body());
    } catch (const std::exception& e) {
      CriterionResult c{id, title};
      c.check("no_exception", false, e.what());
      out.push_back(std::move(c));
    }
  };
  guarded(1, "algebra validity", [] { return algebra_validity(); });
  guarded(2, "skew-symmetry classification", [&] { return classification(seed); });
  guarded(3, "spectral decomposition invariants", [&] { return spectral(seed); });
  guarded(4, "canonical complex structure J", [&] { return canonical_j(seed); });
  guarded(5, "semi-Kaehler structure and signatures", [&] { return semi_kaehler(seed); });
  guarded(6, "transgression form", [&] { return transgression(seed); });
  guarded(7, "Nijenhuis tensor", [&] { return nijenhuis(seed); });
  guarded(8, "Lie-Poisson and KKS", [&] { return poisson(seed); });
  guarded(9, "Haar averaging", [&] { return haar(seed); });
  return out;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  auto results = run_property_criteria(seed);
  const auto render = [](const std::vector<CriterionResult>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(to_json(r));
    return dump_json(a, -1);
  };
  const auto again = run_property_criteria(seed);
  CriterionResult det{10, "determinism (repeat run is byte-identical)"};
  det.check("repeat_identical", render(results) == render(again));
  results.push_back(std::move(det));
  return results;
}

Json to_json(const CriterionResult& c) {
  Json j;
  j["id"] = c.id;
  j["title"] = c.title;
  j["passed"] = c.passed;
  Json checks = Json::array();
  for (const auto& k : c.checks) {
    checks.push_back(
        Json{{"name", k.name}, {"value", k.value}, {"threshold", k.threshold}, {"passed", k.passed}});
  }
  j["checks"] = std::move(checks);
  j["failures"] = c.failures;
  return j;
}

std::string summary_line(const CriterionResult& c) {
  std::string line = (c.passed ? "[PASS] " : "[FAIL] ") + std::to_string(c.id) + " " + c.title;
  for (const auto& f : c.failures) line += "; " + f;
  return line;
}

}  // namespace orbitkit::cli
