#pragma once

// Symmetries (self-adjoint unitary involutions): predicates, the standard
// decomposition relative to a two-space splitting, the spectral pairing that
// characterises products of two symmetries, balanced rewriting, and the
// corner symmetrisation of a unitary.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "symprod/numlin.hpp"

namespace symprod {

/// Splitting C^d = C^{d1} (+) C^{d2}, first block first.
struct Split {
  int d1 = 0;
  int d2 = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;
/// |eta| above this counts as an eigenvalue +-1 of a compressed symmetry.
inline constexpr double kUnitEigenThreshold = 1.0 - 1e-7;

/// max(||J - J*||_F, ||J^2 - I||_F).
double symmetry_residual(const CMatrix& j);
bool is_symmetry(const CMatrix& j, double tol = kDefaultTol);

/// D1 (+) [[M, N], [N, -M]] (+) D2 with the 2x2 blocks interleaved, expressed
/// in a unitary change of basis: basis* * block_form() * basis == J.
struct StandardDecomposition {
  int r1 = 0;
  int r2 = 0;
  int s2 = 0;
  RVector D1;
  RVector D2;
  RVector M;
  RVector N;
  CMatrix basis;
  double residual = 0;

  CMatrix block_form() const;
};

StandardDecomposition standard_decomposition(const CMatrix& j, Split split, double tol = 1e-8,
                                             double unit_threshold = kUnitEigenThreshold);

/// Signature of a symmetry. Throws NonIntegerTrace when the real trace is more
/// than 1e-7 away from an integer.
int trace_of_symmetry(const CMatrix& j);

struct CornerSymmetrization {
  CMatrix X;  // X1 (+) I
  CMatrix Z;  // I (+) Z4
  CMatrix Y;  // X U Z
  double epsilon = 0;  // perturbation size used, 0 when none was needed
  double symmetry_residual = 0;
};

/// X = R1* (+) I and Z = I (+) (-R4*) from the polar factors of the diagonal
/// corners, so that X U Z is a symmetry. Singular corners fall back to the
/// polar factors of U exp(eps G) for a seeded skew-Hermitian G, with eps
/// running 1e-4, 1e-5, ..., 1e-9.
CornerSymmetrization symmetrize_corners(const CMatrix& u, Split split, std::uint64_t seed = kDefaultSeed);

/// Spectral certificate for membership in Sym_2: non-real eigenvalues matched
/// into conjugate pairs, real ones listed separately.
struct Sym2Pairing {
  bool ok = false;
  EigenResult eig;
  std::vector<std::pair<int, int>> pairs;  // (upper, lower) eigenvalue indices
  std::vector<int> reals;
};

/// Greedy matching of sorted upper-half-plane angles against the reflected
/// lower-half-plane angles. |Im| <= real_tol counts as real.
Sym2Pairing sym2_pairing(const CMatrix& u, double tol = kDefaultTol, double match_tol = 1e-7,
                         double real_tol = 1e-7);

/// Builds J1, J2 with J1 J2 = Q diag(lambda) Q* from a pairing. In balanced
/// mode, +1/-1 eigenvalues are paired off and the remaining xi I_q tail is
/// split as xi (I_a (+) -I_a (+) I_b) times (I_a (+) -I_a (+) I_b), so that
/// trace(J2) is 0 or 1.
std::pair<CMatrix, CMatrix> factor_from_pairing(const Sym2Pairing& pairing, bool balanced);

/// K1 K2 = J1 J2 with K2 balanced. Throws NotSym2 if the product fails the
/// pairing test.
std::pair<CMatrix, CMatrix> rebalance(const CMatrix& j1, const CMatrix& j2);
/// K1 K2 K3 = J1 J2 J3 with K2 and K3 balanced.
std::array<CMatrix, 3> rebalance3(const CMatrix& j1, const CMatrix& j2, const CMatrix& j3);

/// Random skew-Hermitian matrix with unit Frobenius norm.
CMatrix random_skew_hermitian(int d, std::uint64_t seed);

}  // namespace symprod
