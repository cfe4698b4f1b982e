#include "symprod/symcore.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace symprod {

namespace {

void check_split(const CMatrix& m, Split split, const char* who) {
  if (split.d1 < 0 || split.d2 < 0 || split.d1 + split.d2 != m.rows()) {
    throw Error(Errc::SplitMismatch, std::string(who) + ": split dimensions do not add up to d");
  }
}

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CMatrix unitary_part(const CMatrix& a) {
  if (a.rows() == 0) return a;
  return polar(a).unitary_factor;
}

CMatrix hermitize(const CMatrix& a) { return (a + a.adjoint()) / 2.0; }

}  // namespace

double symmetry_residual(const CMatrix& j) {
  const auto d = j.rows();
  return std::max((j - j.adjoint()).norm(), (j * j - CMatrix::Identity(d, d)).norm());
}

bool is_symmetry(const CMatrix& j, double tol) {
  if (j.rows() != j.cols() || j.rows() == 0) return false;
  return symmetry_residual(j) <= tol;
}

CMatrix StandardDecomposition::block_form() const {
  const int d = r1 + 2 * r2 + s2;
  CMatrix s = CMatrix::Zero(d, d);
  for (int i = 0; i < r1; ++i) s(i, i) = D1(i);
  for (int k = 0; k < r2; ++k) {
    const int p = r1 + 2 * k;
    s(p, p) = M(k);
    s(p, p + 1) = N(k);
    s(p + 1, p) = N(k);
    s(p + 1, p + 1) = -M(k);
  }
  for (int i = 0; i < s2; ++i) s(r1 + 2 * r2 + i, r1 + 2 * r2 + i) = D2(i);
  return s;
}

StandardDecomposition standard_decomposition(const CMatrix& j, Split split, double tol,
                                             double unit_threshold) {
  if (!is_symmetry(j, tol)) {
    throw Error(Errc::NotASymmetry, "standard_decomposition: input is not a symmetry");
  }
  check_split(j, split, "standard_decomposition");
  const int d = static_cast<int>(j.rows());
  const int d1 = split.d1;
  const int d2 = split.d2;

  std::vector<CVector> m1_vecs, e_vecs, f_vecs, m2_vecs;
  std::vector<double> d1_vals, m_vals, n_vals, d2_vals;

  if (d1 > 0) {
    const auto e1 = hermitian_eig(hermitize(j.topLeftCorner(d1, d1)), 1e-6);
    for (int k = 0; k < d1; ++k) {
      const double eta = e1.eigenvalues(k).real();
      CVector v = CVector::Zero(d);
      v.head(d1) = e1.basis.col(k);
      if (std::abs(eta) > unit_threshold) {
        m1_vecs.push_back(v);
        d1_vals.push_back(eta > 0 ? 1.0 : -1.0);
        continue;
      }
      CVector f = CVector::Zero(d);
      f.tail(d2) = j.topRightCorner(d1, d2).adjoint() * e1.basis.col(k);
      for (const auto& g : f_vecs) f -= g * g.dot(f);
      const double fn = f.norm();
      if (fn <= 0) throw Error(Errc::InternalConsistency, "standard_decomposition: degenerate off-diagonal corner");
      f /= fn;
      e_vecs.push_back(v);
      f_vecs.push_back(f);
      m_vals.push_back(eta);
      n_vals.push_back(std::sqrt(std::max(0.0, 1.0 - eta * eta)));
    }
  }

  if (d2 > 0) {
    CMatrix proj = CMatrix::Identity(d2, d2);
    for (const auto& f : f_vecs) proj -= f.tail(d2) * f.tail(d2).adjoint();
    const CMatrix compressed = hermitize(proj * j.bottomRightCorner(d2, d2) * proj);
    const auto e4 = hermitian_eig(compressed, 1e-6);
    for (int k = 0; k < d2; ++k) {
      const double eta = e4.eigenvalues(k).real();
      if (std::abs(eta) > 0.5) {
        CVector v = CVector::Zero(d);
        v.tail(d2) = e4.basis.col(k);
        m2_vecs.push_back(v);
        d2_vals.push_back(eta > 0 ? 1.0 : -1.0);
      }
    }
  }

  StandardDecomposition out;
  out.r1 = static_cast<int>(m1_vecs.size());
  out.r2 = static_cast<int>(e_vecs.size());
  out.s2 = static_cast<int>(m2_vecs.size());
  if (out.r1 + 2 * out.r2 + out.s2 != d) {
    throw Error(Errc::InternalConsistency, "standard_decomposition: block dimensions do not add up");
  }
  out.D1 = Eigen::Map<RVector>(d1_vals.data(), out.r1);
  out.D2 = Eigen::Map<RVector>(d2_vals.data(), out.s2);
  out.M = Eigen::Map<RVector>(m_vals.data(), out.r2);
  out.N = Eigen::Map<RVector>(n_vals.data(), out.r2);

  CMatrix q(d, d);
  int c = 0;
  for (const auto& v : m1_vecs) q.col(c++) = v;
  for (int k = 0; k < out.r2; ++k) {
    q.col(c++) = e_vecs[k];
    q.col(c++) = f_vecs[k];
  }
  for (const auto& v : m2_vecs) q.col(c++) = v;
  out.basis = q.adjoint();
  out.residual = (out.basis.adjoint() * out.block_form() * out.basis - j).norm();
  return out;
}

int trace_of_symmetry(const CMatrix& j) {
  if (!is_symmetry(j, 1e-8)) {
    throw Error(Errc::NotASymmetry, "trace_of_symmetry: input is not a symmetry");
  }
  const double tr = j.trace().real();
  const double k = std::round(tr);
  if (std::abs(tr - k) > 1e-7) {
    throw Error(Errc::NonIntegerTrace, "trace_of_symmetry: trace " + std::to_string(tr) + " is not an integer");
  }
  return static_cast<int>(k);
}

CMatrix random_skew_hermitian(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  CMatrix g(d, d);
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) g(r, c) = Complex(gauss(rng), gauss(rng));
  }
  CMatrix s = (g - g.adjoint()) / 2.0;
  const double n = s.norm();
  return n > 0 ? CMatrix(s / n) : s;
}

CornerSymmetrization symmetrize_corners(const CMatrix& u, Split split, std::uint64_t seed) {
  detail::require_square_finite(u, "symmetrize_corners");
  if (!is_unitary(u, kDefaultTol)) {
    throw Error(Errc::NotUnitary, "symmetrize_corners: input is not unitary");
  }
  check_split(u, split, "symmetrize_corners");
  const int d1 = split.d1;
  const int d2 = split.d2;

  auto attempt = [&](const CMatrix& source, double eps) {
    const CMatrix r1 = unitary_part(source.topLeftCorner(d1, d1));
    const CMatrix r4 = unitary_part(source.bottomRightCorner(d2, d2));
    CornerSymmetrization out;
    out.X = block_diag(r1.adjoint(), CMatrix::Identity(d2, d2));
    out.Z = block_diag(CMatrix::Identity(d1, d1), -r4.adjoint());
    out.Y = out.X * u * out.Z;
    out.epsilon = eps;
    out.symmetry_residual = symmetry_residual(out.Y);
    return out;
  };

  constexpr double kAccept = 1e-6;
  auto best = attempt(u, 0.0);
  if (best.symmetry_residual <= kAccept) return best;

  const CMatrix g = random_skew_hermitian(static_cast<int>(u.rows()), seed);
  double eps = 1e-4;
  for (int retry = 0; retry < 6; ++retry, eps /= 10) {
    const CMatrix perturbed = u * expm_skew(eps * g);
    auto trial = attempt(perturbed, eps);
    if (trial.symmetry_residual <= kAccept) return trial;
  }
  throw Error(Errc::SymmetrizationFailed, "symmetrize_corners: perturbation ladder exhausted");
}

Sym2Pairing sym2_pairing(const CMatrix& u, double tol, double match_tol, double real_tol) {
  Sym2Pairing out;
  out.eig = unitary_eig(u, tol);
  const auto& lam = out.eig.eigenvalues;
  std::vector<std::pair<double, int>> upper, lower;
  for (int i = 0; i < lam.size(); ++i) {
    if (std::abs(lam(i).imag()) <= real_tol) {
      out.reals.push_back(i);
    } else if (lam(i).imag() > 0) {
      upper.emplace_back(std::arg(lam(i)), i);
    } else {
      lower.emplace_back(-std::arg(lam(i)), i);
    }
  }
  if (upper.size() != lower.size()) return out;
  std::sort(upper.begin(), upper.end());
  std::sort(lower.begin(), lower.end());
  for (std::size_t k = 0; k < upper.size(); ++k) {
    if (std::abs(upper[k].first - lower[k].first) > match_tol) {
      out.pairs.clear();
      return out;
    }
    out.pairs.emplace_back(upper[k].second, lower[k].second);
  }
  out.ok = true;
  return out;
}

std::pair<CMatrix, CMatrix> factor_from_pairing(const Sym2Pairing& pairing, bool balanced) {
  if (!pairing.ok) throw Error(Errc::NotSym2, "spectrum is not closed under conjugation");
  const auto& lam = pairing.eig.eigenvalues;
  const auto& q = pairing.eig.basis;
  const int d = static_cast<int>(lam.size());
  CMatrix frame(d, d);
  CMatrix k = CMatrix::Zero(d, d);
  CMatrix l = CMatrix::Zero(d, d);
  int c = 0;

  for (const auto& [up, lo] : pairing.pairs) {
    Complex a = lam(up) + std::conj(lam(lo));
    a /= std::abs(a);
    frame.col(c) = q.col(up);
    frame.col(c + 1) = q.col(lo);
    k(c, c + 1) = a;
    k(c + 1, c) = std::conj(a);
    l(c, c + 1) = 1.0;
    l(c + 1, c) = 1.0;
    c += 2;
  }

  std::vector<int> plus, minus;
  for (int i : pairing.reals) (lam(i).real() > 0 ? plus : minus).push_back(i);

  if (!balanced) {
    for (int i : pairing.reals) {
      frame.col(c) = q.col(i);
      k(c, c) = lam(i).real() > 0 ? 1.0 : -1.0;
      l(c, c) = 1.0;
      ++c;
    }
  } else {
    const std::size_t both = std::min(plus.size(), minus.size());
    for (std::size_t t = 0; t < both; ++t) {
      frame.col(c) = q.col(plus[t]);
      frame.col(c + 1) = q.col(minus[t]);
      k(c, c) = 1.0;
      k(c + 1, c + 1) = 1.0;
      l(c, c) = 1.0;
      l(c + 1, c + 1) = -1.0;
      c += 2;
    }
    const auto& rest = plus.size() > both ? plus : minus;
    const double xi = plus.size() > both ? 1.0 : -1.0;
    const std::size_t qn = rest.size() - both;
    const std::size_t a = qn / 2;
    for (std::size_t t = 0; t < qn; ++t) {
      frame.col(c) = q.col(rest[both + t]);
      const double sign = (t >= a && t < 2 * a) ? -1.0 : 1.0;
      k(c, c) = xi * sign;
      l(c, c) = sign;
      ++c;
    }
  }

  const CMatrix j1 = frame * k * frame.adjoint();
  const CMatrix j2 = frame * l * frame.adjoint();
  return {hermitize(j1), hermitize(j2)};
}

std::pair<CMatrix, CMatrix> rebalance(const CMatrix& j1, const CMatrix& j2) {
  const auto pairing = sym2_pairing(j1 * j2, 1e-7);
  if (!pairing.ok) throw Error(Errc::NotSym2, "rebalance: product is not in Sym2");
  return factor_from_pairing(pairing, true);
}

std::array<CMatrix, 3> rebalance3(const CMatrix& j1, const CMatrix& j2, const CMatrix& j3) {
  auto [q2, k3] = rebalance(j2, j3);
  auto [k1, k2] = rebalance(j1, q2);
  return {k1, k2, k3};
}

}  // namespace symprod
