#pragma once

// Dense complex linear algebra on Eigen storage: a cyclic Jacobi Hermitian
// eigensolver, normal/unitary eigendecomposition through the commuting pair
// (A + A*)/2, (A - A*)/(2i), an SVD seeded from the Gram matrix, and the
// polar decomposition. Everything is templated on the real scalar type.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "symprod/error.hpp"

namespace symprod {

template <typename Real>
using CMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using CMatrix = CMatrixT<double>;
using CVector = CVectorT<double>;
using RVector = RVectorT<double>;

/// Default tolerance shared by the numerical routines.
inline constexpr double kDefaultTol = 1e-9;
/// Gap above which two eigenvalues of the Hermitian part are treated as distinct.
inline constexpr double kClusterGap = 1e-8;

template <typename Real>
struct EigenResultT {
  CVectorT<Real> eigenvalues;
  CMatrixT<Real> basis;  // columns are orthonormal eigenvectors
  Real residual = 0;     // ||A B - B diag(lambda)||_F
};
using EigenResult = EigenResultT<double>;

template <typename Real>
struct SvdResultT {
  CMatrixT<Real> left;
  RVectorT<Real> singulars;  // descending, >= 0
  CMatrixT<Real> right;
};
using SvdResult = SvdResultT<double>;

template <typename Real>
struct PolarResultT {
  CMatrixT<Real> unitary_factor;
  CMatrixT<Real> positive_factor;
};
using PolarResult = PolarResultT<double>;

namespace detail {

template <typename Derived>
void require_square_finite(const Eigen::MatrixBase<Derived>& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw Error(Errc::InvalidInput, std::string(who) + ": matrix must be square and non-empty");
  }
  if (!a.allFinite()) {
    throw Error(Errc::InvalidInput, std::string(who) + ": non-finite entry");
  }
}

// Rotate the phase of every column so that its first largest-modulus entry is
// real and positive. Makes eigenvector output deterministic.
template <typename Real>
void fix_column_phases(CMatrixT<Real>& basis) {
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    Eigen::Index best = 0;
    Real best_abs = -1;
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
      const Real m = std::abs(basis(r, c));
      if (m > best_abs * (1 + Real(1e-10)) + Real(1e-14)) {
        best_abs = m;
        best = r;
      }
    }
    if (best_abs > 0) {
      const std::complex<Real> z = basis(best, c);
      basis.col(c) *= std::conj(z) / std::abs(z);
    }
  }
}

// Unitary 2x2 rotation that annihilates the (p, q) entry of the Hermitian block
// [[app, apq], [conj(apq), aqq]]: returns (g_pp, g_pq, g_qp, g_qq) of G with
// G* block G diagonal.
template <typename Real>
std::array<std::complex<Real>, 4> jacobi_rotation(Real app, Real aqq, std::complex<Real> apq) {
  const Real mag = std::abs(apq);
  const std::complex<Real> omega = apq / mag;
  const Real tau = (aqq - app) / (2 * mag);
  const Real t = (tau >= 0 ? Real(1) : Real(-1)) / (std::abs(tau) + std::sqrt(1 + tau * tau));
  const Real c = 1 / std::sqrt(1 + t * t);
  const Real s = t * c;
  return {omega * c, omega * s, std::complex<Real>(-s), std::complex<Real>(c)};
}

template <typename Real>
Real off_diagonal_norm(const CMatrixT<Real>& a) {
  Real sum = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for a Hermitian matrix. Eigenvalues ascending.
/// Throws NotHermitian when ||A - A*||_F > tol ||A||_F and NoConvergence when
/// 30 d^2 rotations do not bring the off-diagonal mass below tol.
template <typename Derived>
EigenResultT<typename Derived::RealScalar> hermitian_eig(
    const Eigen::MatrixBase<Derived>& input,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  using Real = typename Derived::RealScalar;
  using C = std::complex<Real>;
  detail::require_square_finite(input, "hermitian_eig");
  const Eigen::Index d = input.rows();
  const CMatrixT<Real> src = input.template cast<C>();
  const Real norm = src.norm();
  if ((src - src.adjoint()).norm() > tol * norm) {
    throw Error(Errc::NotHermitian, "hermitian_eig: input is not Hermitian within tolerance");
  }

  CMatrixT<Real> a = (src + src.adjoint()) / Real(2);
  CMatrixT<Real> v = CMatrixT<Real>::Identity(d, d);
  const Real scale = std::max<Real>(norm, 1);
  const Real required = tol * scale;
  const Real target = 8 * std::numeric_limits<Real>::epsilon() * scale;
  const long max_rotations = 30L * d * d;
  long rotations = 0;

  for (;;) {
    const Real off = detail::off_diagonal_norm(a);
    if (off <= target) break;
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < d; ++p) {
      for (Eigen::Index q = p + 1; q < d; ++q) {
        const C apq = a(p, q);
        if (std::abs(apq) <= std::numeric_limits<Real>::min()) continue;
        if (rotations >= max_rotations) {
          if (detail::off_diagonal_norm(a) <= required) goto done;
          throw Error(Errc::NoConvergence, "hermitian_eig: rotation cap reached");
        }
        const auto g = detail::jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
        // a <- a G (columns p, q)
        const CVectorT<Real> colp = a.col(p);
        const CVectorT<Real> colq = a.col(q);
        a.col(p) = colp * g[0] + colq * g[2];
        a.col(q) = colp * g[1] + colq * g[3];
        // a <- G* a (rows p, q)
        const auto rowp = a.row(p).eval();
        const auto rowq = a.row(q).eval();
        a.row(p) = std::conj(g[0]) * rowp + std::conj(g[2]) * rowq;
        a.row(q) = std::conj(g[1]) * rowp + std::conj(g[3]) * rowq;
        a(p, q) = C(0);
        a(q, p) = C(0);
        a(p, p) = C(a(p, p).real());
        a(q, q) = C(a(q, q).real());
        const CVectorT<Real> vp = v.col(p);
        const CVectorT<Real> vq = v.col(q);
        v.col(p) = vp * g[0] + vq * g[2];
        v.col(q) = vp * g[1] + vq * g[3];
        ++rotations;
        rotated = true;
      }
    }
    if (!rotated) break;
  }
done:
  if (detail::off_diagonal_norm(a) > required) {
    throw Error(Errc::NoConvergence, "hermitian_eig: off-diagonal mass above tolerance");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  EigenResultT<Real> out;
  out.eigenvalues.resize(d);
  out.basis.resize(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    out.eigenvalues(k) = C(a(order[k], order[k]).real());
    out.basis.col(k) = v.col(order[k]);
  }
  detail::fix_column_phases(out.basis);
  out.residual = (src * out.basis - out.basis * out.eigenvalues.asDiagonal()).norm();
  return out;
}

/// Eigendecomposition of a normal matrix by simultaneous diagonalisation of
/// its Hermitian and skew parts. Eigenvalues are ordered by real part, then
/// imaginary part. Normality is assumed, not checked.
template <typename Derived>
EigenResultT<typename Derived::RealScalar> normal_eig(
    const Eigen::MatrixBase<Derived>& input,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol),
    typename Derived::RealScalar cluster_gap = typename Derived::RealScalar(kClusterGap)) {
  using Real = typename Derived::RealScalar;
  using C = std::complex<Real>;
  detail::require_square_finite(input, "normal_eig");
  const Eigen::Index d = input.rows();
  const CMatrixT<Real> n = input.template cast<C>();
  const CMatrixT<Real> h = (n + n.adjoint()) / Real(2);
  const CMatrixT<Real> k = (n - n.adjoint()) / C(0, 2);

  const auto eh = hermitian_eig(h, tol);
  CMatrixT<Real> basis = eh.basis;
  Eigen::Index begin = 0;
  while (begin < d) {
    Eigen::Index end = begin + 1;
    while (end < d && eh.eigenvalues(end).real() - eh.eigenvalues(end - 1).real() <= cluster_gap) ++end;
    if (end - begin > 1) {
      const CMatrixT<Real> block = basis.middleCols(begin, end - begin);
      CMatrixT<Real> kc = block.adjoint() * k * block;
      kc = (kc + kc.adjoint()).eval() / Real(2);
      const auto ek = hermitian_eig(kc, tol);
      basis.middleCols(begin, end - begin) = block * ek.basis;
    }
    begin = end;
  }
  detail::fix_column_phases(basis);

  EigenResultT<Real> out;
  out.basis = basis;
  out.eigenvalues.resize(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    out.eigenvalues(i) = basis.col(i).dot(n * basis.col(i));  // dot conjugates the left operand
  }
  out.residual = (n * out.basis - out.basis * out.eigenvalues.asDiagonal()).norm();
  return out;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u,
                typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  if (u.rows() != u.cols()) return false;
  const auto d = u.rows();
  return (u.adjoint() * u - Derived::PlainObject::Identity(d, d)).norm() <= tol;
}

/// Eigendecomposition of a unitary matrix; eigenvalues are returned on the
/// unit circle. Throws NotUnitary when ||U*U - I||_F > tol.
template <typename Derived>
EigenResultT<typename Derived::RealScalar> unitary_eig(
    const Eigen::MatrixBase<Derived>& u,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  using Real = typename Derived::RealScalar;
  using C = std::complex<Real>;
  detail::require_square_finite(u, "unitary_eig");
  const CMatrixT<Real> uc = u.template cast<C>();
  if (!is_unitary(uc, tol)) {
    throw Error(Errc::NotUnitary, "unitary_eig: ||U*U - I||_F exceeds tolerance");
  }
  auto out = normal_eig(uc, tol);
  for (Eigen::Index i = 0; i < out.eigenvalues.size(); ++i) {
    const C z = out.eigenvalues(i);
    if (std::abs(std::abs(z) - 1) > 10 * tol) {
      throw Error(Errc::NoConvergence, "unitary_eig: eigenvalue off the unit circle");
    }
    out.eigenvalues(i) = z / std::abs(z);
  }
  out.residual = (uc * out.basis - out.basis * out.eigenvalues.asDiagonal()).norm();
  return out;
}

/// Singular value decomposition A = L diag(s) R*. The right vectors come from
/// the Gram matrix A*A and are polished by one-sided Jacobi on A R; left
/// vectors on the kernel are completed from the eigenvectors of A A*.
template <typename Derived>
SvdResultT<typename Derived::RealScalar> svd(const Eigen::MatrixBase<Derived>& input) {
  using Real = typename Derived::RealScalar;
  using C = std::complex<Real>;
  detail::require_square_finite(input, "svd");
  const Eigen::Index d = input.rows();
  const CMatrixT<Real> a = input.template cast<C>();
  const Real eps = std::numeric_limits<Real>::epsilon();

  CMatrixT<Real> gram = a.adjoint() * a;
  gram = (gram + gram.adjoint()).eval() / Real(2);
  const auto eg = hermitian_eig(gram, Real(1e-6));
  CMatrixT<Real> right = eg.basis.rowwise().reverse();
  CMatrixT<Real> b = a * right;
  // Columns at rounding level carry no direction worth orthogonalising.
  const Real negligible = std::pow(Real(d) * eps * a.norm(), 2);

  // One-sided Jacobi: orthogonalise the columns of b, accumulating into right.
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < d; ++p) {
      for (Eigen::Index q = p + 1; q < d; ++q) {
        const Real alpha = b.col(p).squaredNorm();
        const Real beta = b.col(q).squaredNorm();
        const C gamma = b.col(p).dot(b.col(q));
        if (alpha <= negligible || beta <= negligible ||
            std::abs(gamma) <= 4 * eps * std::sqrt(alpha * beta) ||
            std::abs(gamma) <= std::numeric_limits<Real>::min()) {
          continue;
        }
        const auto g = detail::jacobi_rotation(alpha, beta, gamma);
        const CVectorT<Real> bp = b.col(p);
        const CVectorT<Real> bq = b.col(q);
        b.col(p) = bp * g[0] + bq * g[2];
        b.col(q) = bp * g[1] + bq * g[3];
        const CVectorT<Real> rp = right.col(p);
        const CVectorT<Real> rq = right.col(q);
        right.col(p) = rp * g[0] + rq * g[2];
        right.col(q) = rp * g[1] + rq * g[3];
        rotated = true;
      }
    }
    if (!rotated) break;
    if (sweep == 59) throw Error(Errc::NoConvergence, "svd: one-sided Jacobi did not converge");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  RVectorT<Real> norms(d);
  for (Eigen::Index i = 0; i < d; ++i) norms(i) = b.col(i).norm();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return norms(i) > norms(j); });

  SvdResultT<Real> out;
  out.singulars.resize(d);
  out.right.resize(d, d);
  out.left = CMatrixT<Real>::Zero(d, d);
  const Real smax = norms(order[0]);
  const Real cutoff = std::max<Real>(smax * Real(d) * eps * 16, std::numeric_limits<Real>::min());
  Eigen::Index filled = 0;
  for (Eigen::Index k = 0; k < d; ++k) {
    out.right.col(k) = right.col(order[k]);
    const Real s = norms(order[k]);
    out.singulars(k) = s;
    if (s > cutoff) {
      out.left.col(k) = b.col(order[k]) / s;
      ++filled;
    }
  }
  if (filled < d) {
    CMatrixT<Real> outer = a * a.adjoint();
    outer = (outer + outer.adjoint()).eval() / Real(2);
    const auto eo = hermitian_eig(outer, Real(1e-6));
    Eigen::Index next = filled;
    for (Eigen::Index c = 0; c < d && next < d; ++c) {
      CVectorT<Real> w = eo.basis.col(c);
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index k = 0; k < next; ++k) w -= out.left.col(k) * out.left.col(k).dot(w);
      }
      const Real wn = w.norm();
      if (wn > Real(0.5)) {
        out.left.col(next) = w / wn;
        out.singulars(next) = 0;
        ++next;
      }
    }
    if (next < d) throw Error(Errc::NoConvergence, "svd: kernel completion failed");
  }
  for (Eigen::Index k = filled; k < d; ++k) out.singulars(k) = 0;
  return out;
}

/// Polar decomposition A = U P with U unitary and P = (A*A)^{1/2}. For
/// singular A the unitary factor is completed on the kernel from the SVD.
template <typename Derived>
PolarResultT<typename Derived::RealScalar> polar_decomposition(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  const auto s = svd(a);
  PolarResultT<Real> out;
  out.unitary_factor = s.left * s.right.adjoint();
  CMatrixT<Real> p = s.right * s.singulars.template cast<std::complex<Real>>().asDiagonal() * s.right.adjoint();
  out.positive_factor = (p + p.adjoint()) / Real(2);
  return out;
}

/// polar_decomposition for the default scalar. Non-template, so unqualified
/// calls are not captured by std::polar.
inline PolarResult polar(const CMatrix& a) { return polar_decomposition(a); }

/// Numerical rank: number of singular values above `threshold`.
template <typename Derived>
int numerical_rank(const Eigen::MatrixBase<Derived>& a,
                   typename Derived::RealScalar threshold = typename Derived::RealScalar(1e-8)) {
  if (a.size() == 0) return 0;
  // Pad to square so the SVD contract applies.
  using Real = typename Derived::RealScalar;
  const Eigen::Index n = std::max(a.rows(), a.cols());
  CMatrixT<Real> sq = CMatrixT<Real>::Zero(n, n);
  sq.topLeftCorner(a.rows(), a.cols()) = a.template cast<std::complex<Real>>();
  const auto s = svd(sq);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.singulars.size(); ++i) {
    if (s.singulars(i) > threshold) ++rank;
  }
  return rank;
}

/// Determinant: product of the eigenvalues for unitary input, LU with partial
/// pivoting otherwise.
Complex determinant(const CMatrix& a, double tol = kDefaultTol);

/// exp(A) for skew-Hermitian A, via its Hermitian eigendecomposition.
CMatrix expm_skew(const CMatrix& skew);

}  // namespace symprod
