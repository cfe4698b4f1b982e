#pragma once

// Decompositions U = G * S with G in the unitary commutant of a normal
// matrix N and S a symmetry (or a product of two), which is what equality of
// the unitary orbit of N with its Sym_k orbit amounts to.

#include <cstdint>
#include <utility>
#include <vector>

#include "symprod/angle.hpp"
#include "symprod/symcore.hpp"

namespace symprod {

inline constexpr double kEigenvalueClusterGap = 1e-7;

/// Eigenvalues of a normal matrix grouped into clusters; the basis columns
/// are ordered so that each cluster is contiguous.
struct EigenClusters {
  CMatrix basis;
  std::vector<Complex> values;  // one per cluster
  std::vector<int> sizes;
};

bool is_normal(const CMatrix& n, double tol = kDefaultTol);
EigenClusters cluster_eigenvalues(const CMatrix& n, double gap = kEigenvalueClusterGap);

/// N normal with at most two distinct eigenvalues.
bool sym1_orbit_equals_unitary(const CMatrix& n, double tol = kDefaultTol, double gap = kEigenvalueClusterGap);

struct OrbitDecomposition {
  CMatrix commutant_factor;            // G
  CMatrix symmetry_factor;             // J, or the Sym_2 element S
  std::vector<CMatrix> symmetry_parts;  // S = parts[0] * parts[1] for the Sym_2 version
  CMatrix eigenbasis;                  // of N, clusters contiguous
  std::vector<int> block_sizes;
  double residual = 0;        // ||G S - U||_F
  double off_block_mass = 0;  // of eigenbasis* G eigenbasis outside the cluster blocks
};

/// Frobenius norm of the entries of m outside the diagonal blocks of the
/// given sizes.
double off_block_norm(const CMatrix& m, const std::vector<int>& sizes);

/// U = G J with G commuting with N and J a symmetry. N must be normal with
/// at most two eigenvalues (WrongEigenvalueCount otherwise).
OrbitDecomposition sym1_orbit_decompose(const CMatrix& u, const CMatrix& n, std::uint64_t seed = kDefaultSeed);

/// U = G (J1 J2) with G commuting with N, for N normal with at most four
/// eigenvalues (TooManyEigenvalues otherwise).
OrbitDecomposition sym2_orbit_decompose_upto4(const CMatrix& u, const CMatrix& n,
                                              std::uint64_t seed = kDefaultSeed);

struct ThreeEigenvalueCertificate {
  bool member = false;
  int real_index = -1;  // 0-based, the entry equal to +-1
  int real_value = 0;
  std::pair<int, int> pair{-1, -1};  // the conjugate pair
};

/// diag(alpha, beta, gamma) with product +-1 and real trace lies in Sym_2.
/// Throws HypothesisFailed when either hypothesis fails (tolerance 1e-10).
ThreeEigenvalueCertificate sym2_three_eig_diag(const Angle& alpha, const Angle& beta, const Angle& gamma);

/// The unitary e -> g, f -> e, g -> f on the first basis vectors e, f, g of
/// three consecutive blocks, identity elsewhere.
CMatrix rank_asymmetry_witness(int d1, int d2, int d3);

}  // namespace symprod
