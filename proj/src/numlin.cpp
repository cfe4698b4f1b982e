#include "symprod/numlin.hpp"

namespace symprod {

Complex determinant(const CMatrix& a, double tol) {
  detail::require_square_finite(a, "determinant");
  if (is_unitary(a, tol)) {
    const auto e = unitary_eig(a, tol);
    Complex prod(1.0);
    for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) prod *= e.eigenvalues(i);
    return prod;
  }
  return Eigen::PartialPivLU<CMatrix>(a).determinant();
}

CMatrix expm_skew(const CMatrix& skew) {
  // skew = i H with H Hermitian
  const CMatrix h = skew / Complex(0, 1);
  const CMatrix hh = (h + h.adjoint()) / 2.0;
  const auto e = hermitian_eig(hh, 1e-6);
  CVector phases(e.eigenvalues.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::polar(1.0, e.eigenvalues(i).real());
  return e.basis * phases.asDiagonal() * e.basis.adjoint();
}

}  // namespace symprod
