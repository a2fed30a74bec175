#include "orbitkit/haar.hpp"

#include <cmath>

#include "orbitkit/catalog.hpp"
#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

const Complex kI(0.0, 1.0);

CMatrix gell_mann(int a) {
  CMatrix m = CMatrix::Zero(3, 3);
  switch (a) {
    case 0: m(0, 1) = m(1, 0) = 1.0; break;
    case 1: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 2: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 3: m(0, 2) = m(2, 0) = 1.0; break;
    case 4: m(0, 2) = -kI; m(2, 0) = kI; break;
    case 5: m(1, 2) = m(2, 1) = 1.0; break;
    case 6: m(1, 2) = -kI; m(2, 1) = kI; break;
    case 7: {
      const double s = 1.0 / std::sqrt(3.0);
      m(0, 0) = s; m(1, 1) = s; m(2, 2) = -2.0 * s;
      break;
    }
    default: break;
  }
  return m;
}

CMatrix pauli(int k) {
  CMatrix m = CMatrix::Zero(2, 2);
  switch (k) {
    case 0: m(0, 1) = m(1, 0) = 1.0; break;
    case 1: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 2: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: break;
  }
  return m;
}

}  // namespace

std::vector<CMatrix> su_basis(int n) {
  std::vector<CMatrix> out;
  if (n == 2) {
    for (int k = 0; k < 3; ++k) out.push_back(-0.5 * kI * pauli(k));
  } else if (n == 3) {
    for (int a = 0; a < 8; ++a) out.push_back(-0.5 * kI * gell_mann(a));
  } else {
    throw NoSamplerAvailable("su_basis: only su(2) and su(3) are built in");
  }
  return out;
}

CMatrix haar_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) z(i, j) = Complex(normal(rng), normal(rng)) / std::sqrt(2.0);
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  const CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  CMatrix u = q;
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double ad = std::abs(d);
    u.col(j) *= ad == 0.0 ? Complex(1.0) : d / ad;
  }
  return u;
}

Matrix haar_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Vector4d q;
  do {
    for (int i = 0; i < 4; ++i) q[i] = normal(rng);
  } while (q.norm() < 1e-12);
  q.normalize();
  const Eigen::Quaterniond quat(q[0], q[1], q[2], q[3]);
  return quat.toRotationMatrix();
}

Matrix conjugation_ad_matrix(const CMatrix& u, const std::vector<CMatrix>& basis) {
  const int dim = static_cast<int>(basis.size());
  Matrix a(dim, dim);
  const CMatrix u_inv = u.adjoint();
  for (int j = 0; j < dim; ++j) {
    const CMatrix image = u * basis[static_cast<std::size_t>(j)] * u_inv;
    for (int k = 0; k < dim; ++k) {
      a(k, j) = -2.0 * (image * basis[static_cast<std::size_t>(k)]).trace().real();
    }
  }
  return a;
}

HaarSampler HaarSampler::for_algebra(const LieAlgebra& alg) {
  const std::string& name = alg.name();
  if (!is_compact_catalog(name)) {
    throw NoSamplerAvailable("no Haar sampler for algebra '" + name +
                             "'; averaging needs su2, so3 or su3");
  }
  std::optional<HaarSampler> sampler;
  if (name == "so3") {
    sampler.emplace(name, 3, [](Rng& rng) { return haar_rotation(rng); });
  } else {
    const int n = name == "su2" ? 2 : 3;
    auto basis = su_basis(n);
    sampler.emplace(name, static_cast<int>(basis.size()), [n, basis](Rng& rng) {
      return conjugation_ad_matrix(haar_unitary(n, rng), basis);
    });
  }
  if (sampler->dim() != alg.dim()) {
    throw NoSamplerAvailable("algebra '" + name + "' does not have the catalog dimension");
  }
  Rng probe(12345);
  if (automorphism_residual(alg, (*sampler)(probe)) > 1e-8) {
    throw NoSamplerAvailable("algebra '" + name +
                             "' is not in the catalog basis; sampled Ad-matrices are not automorphisms");
  }
  return *std::move(sampler);
}

HaarSampler HaarSampler::identity(int dim) {
  return HaarSampler("identity", dim, [dim](Rng&) { return Matrix(Matrix::Identity(dim, dim)); });
}

}  // namespace orbitkit
