#include "symprod/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

namespace symprod {

namespace {

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CMatrix diagonal_of(const std::vector<Complex>& values, const std::vector<int>& sizes, std::size_t first,
                    std::size_t last) {
  int d = 0;
  for (std::size_t c = first; c < last; ++c) d += sizes[c];
  CMatrix t = CMatrix::Zero(d, d);
  int k = 0;
  for (std::size_t c = first; c < last; ++c) {
    for (int i = 0; i < sizes[c]; ++i, ++k) t(k, k) = values[c];
  }
  return t;
}

void require_unitary(const CMatrix& u, const char* who) {
  detail::require_square_finite(u, who);
  if (!is_unitary(u, kDefaultTol)) throw Error(Errc::NotUnitary, std::string(who) + ": U is not unitary");
}

EigenClusters clusters_of_normal(const CMatrix& n, const char* who) {
  detail::require_square_finite(n, who);
  if (!is_normal(n)) throw Error(Errc::InvalidInput, std::string(who) + ": N is not normal");
  return cluster_eigenvalues(n);
}

}  // namespace

bool is_normal(const CMatrix& n, double tol) {
  if (n.rows() != n.cols()) return false;
  const double scale = n.squaredNorm();
  return (n.adjoint() * n - n * n.adjoint()).norm() <= tol * std::max(scale, 1e-300);
}

EigenClusters cluster_eigenvalues(const CMatrix& n, double gap) {
  const auto e = normal_eig(n);
  const int d = static_cast<int>(e.eigenvalues.size());
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (std::abs(e.eigenvalues(i) - e.eigenvalues(j)) <= gap) parent[find(j)] = find(i);
    }
  }
  std::vector<int> roots;
  for (int i = 0; i < d; ++i) {
    const int r = find(i);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  EigenClusters out;
  out.basis.resize(d, d);
  int col = 0;
  for (int r : roots) {
    Complex sum = 0;
    int count = 0;
    for (int i = 0; i < d; ++i) {
      if (find(i) == r) {
        out.basis.col(col++) = e.basis.col(i);
        sum += e.eigenvalues(i);
        ++count;
      }
    }
    out.values.push_back(sum / static_cast<double>(count));
    out.sizes.push_back(count);
  }
  return out;
}

bool sym1_orbit_equals_unitary(const CMatrix& n, double tol, double gap) {
  if (n.rows() != n.cols() || n.rows() == 0 || !n.allFinite()) return false;
  if (!is_normal(n, tol)) return false;
  return cluster_eigenvalues(n, gap).values.size() <= 2;
}

double off_block_norm(const CMatrix& m, const std::vector<int>& sizes) {
  std::vector<int> block_of;
  for (int b = 0; b < static_cast<int>(sizes.size()); ++b) block_of.insert(block_of.end(), sizes[b], b);
  double total = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (block_of[i] != block_of[j]) total += std::norm(m(i, j));
    }
  }
  return std::sqrt(total);
}

OrbitDecomposition sym1_orbit_decompose(const CMatrix& u, const CMatrix& n, std::uint64_t seed) {
  require_unitary(u, "sym1_orbit_decompose");
  if (u.rows() != n.rows()) throw Error(Errc::InvalidInput, "sym1_orbit_decompose: dimension mismatch");
  const auto cl = clusters_of_normal(n, "sym1_orbit_decompose");
  if (cl.values.size() > 2) {
    throw Error(Errc::WrongEigenvalueCount, "sym1_orbit_decompose: N has more than two eigenvalues");
  }
  const int d = static_cast<int>(u.rows());
  const CMatrix& q = cl.basis;
  OrbitDecomposition out;
  out.eigenbasis = q;
  out.block_sizes = cl.sizes;

  if (is_symmetry(u, 1e-8)) {
    out.commutant_factor = CMatrix::Identity(d, d);
    out.symmetry_factor = u;
  } else if (cl.values.size() == 1) {
    out.commutant_factor = u;
    out.symmetry_factor = CMatrix::Identity(d, d);
  } else {
    const CMatrix local = q.adjoint() * u * q;
    const auto cs = symmetrize_corners(local, Split{cl.sizes[0], cl.sizes[1]}, seed);
    const CMatrix g = cs.X.adjoint() * cs.Z.adjoint();
    const CMatrix j = cs.Z * cs.Y * cs.Z.adjoint();
    out.commutant_factor = q * g * q.adjoint();
    out.symmetry_factor = q * j * q.adjoint();
  }
  out.symmetry_parts = {out.symmetry_factor};
  out.residual = (out.commutant_factor * out.symmetry_factor - u).norm();
  out.off_block_mass = off_block_norm(q.adjoint() * out.commutant_factor * q, cl.sizes);
  return out;
}

OrbitDecomposition sym2_orbit_decompose_upto4(const CMatrix& u, const CMatrix& n, std::uint64_t seed) {
  require_unitary(u, "sym2_orbit_decompose_upto4");
  if (u.rows() != n.rows()) throw Error(Errc::InvalidInput, "sym2_orbit_decompose_upto4: dimension mismatch");
  const auto cl = clusters_of_normal(n, "sym2_orbit_decompose_upto4");
  const std::size_t k = cl.values.size();
  if (k >= 5) {
    throw Error(Errc::TooManyEigenvalues, "sym2_orbit_decompose_upto4: N has five or more distinct eigenvalues");
  }
  const int d = static_cast<int>(u.rows());
  const CMatrix& q = cl.basis;
  const CMatrix id = CMatrix::Identity(d, d);
  OrbitDecomposition out;
  out.eigenbasis = q;
  out.block_sizes = cl.sizes;

  if (k == 1) {
    out.commutant_factor = u;
    out.symmetry_parts = {id, id};
  } else {
    const std::size_t first_group = k == 2 ? 1 : 2;
    int d1 = 0;
    for (std::size_t c = 0; c < first_group; ++c) d1 += cl.sizes[c];
    const int d2 = d - d1;
    const CMatrix v = q.adjoint() * u * q;

    auto rotate = [&](const CMatrix& source) {
      const CMatrix r1 = polar(CMatrix(source.topLeftCorner(d1, d1))).unitary_factor;
      const CMatrix r4 = polar(CMatrix(source.bottomRightCorner(d2, d2))).unitary_factor;
      return std::pair{r1, r4};
    };
    auto [r1, r4] = rotate(v);
    CMatrix y = block_diag(r1.adjoint(), -r4.adjoint()) * v;
    if (symmetry_residual(y) > 1e-6) {
      const CMatrix g = random_skew_hermitian(d, seed);
      double eps = 1e-4;
      bool done = false;
      for (int retry = 0; retry < 6 && !done; ++retry, eps /= 10) {
        std::tie(r1, r4) = rotate(v * expm_skew(eps * g));
        y = block_diag(r1.adjoint(), -r4.adjoint()) * v;
        done = symmetry_residual(y) <= 1e-6;
      }
      if (!done) throw Error(Errc::SymmetrizationFailed, "sym2_orbit_decompose_upto4: perturbation ladder exhausted");
    }

    const CMatrix t1 = diagonal_of(cl.values, cl.sizes, 0, first_group);
    const CMatrix t2 = diagonal_of(cl.values, cl.sizes, first_group, k);
    const auto first = sym1_orbit_decompose(r1, t1, seed + 1);
    const auto second = sym1_orbit_decompose(CMatrix(-r4), t2, seed + 2);
    const CMatrix w = block_diag(first.commutant_factor, second.commutant_factor);
    const CMatrix j = block_diag(first.symmetry_factor, second.symmetry_factor);
    out.commutant_factor = q * w * q.adjoint();
    out.symmetry_parts = {q * j * q.adjoint(), q * y * q.adjoint()};
  }
  out.symmetry_factor = out.symmetry_parts[0] * out.symmetry_parts[1];
  out.residual = (out.commutant_factor * out.symmetry_factor - u).norm();
  out.off_block_mass = off_block_norm(q.adjoint() * out.commutant_factor * q, cl.sizes);
  return out;
}

ThreeEigenvalueCertificate sym2_three_eig_diag(const Angle& alpha, const Angle& beta, const Angle& gamma) {
  const Complex z[3] = {alpha.to_complex(), beta.to_complex(), gamma.to_complex()};
  const Complex prod = z[0] * z[1] * z[2];
  const double sign = prod.real() >= 0 ? 1.0 : -1.0;
  if (std::abs(prod - sign) > 1e-10) {
    throw Error(Errc::HypothesisFailed, "sym2_three_eig_diag: product is not +-1");
  }
  if (std::abs((z[0] + z[1] + z[2]).imag()) > 1e-10) {
    throw Error(Errc::HypothesisFailed, "sym2_three_eig_diag: trace is not real");
  }
  ThreeEigenvalueCertificate cert;
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(z[i] - sign) < std::abs(z[best] - sign)) best = i;
  }
  const int a = best == 0 ? 1 : 0;
  const int b = best == 2 ? 1 : 2;
  if (std::abs(z[best] - sign) > 1e-8 || std::abs(z[a] - std::conj(z[b])) > 1e-8) {
    throw Error(Errc::InternalConsistency, "sym2_three_eig_diag: certificate does not verify");
  }
  cert.member = true;
  cert.real_index = best;
  cert.real_value = static_cast<int>(sign);
  cert.pair = {a, b};
  return cert;
}

CMatrix rank_asymmetry_witness(int d1, int d2, int d3) {
  if (d1 < 1 || d2 < 1 || d3 < 1) throw Error(Errc::InvalidInput, "rank_asymmetry_witness: dimensions must be positive");
  const int d = d1 + d2 + d3;
  const int e = 0;
  const int f = d1;
  const int g = d1 + d2;
  CMatrix u = CMatrix::Identity(d, d);
  for (int i : {e, f, g}) u(i, i) = 0;
  u(g, e) = 1;
  u(e, f) = 1;
  u(f, g) = 1;
  return u;
}

}  // namespace symprod
