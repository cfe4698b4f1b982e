#pragma once

// Independent witnesses: seeded random unitaries and symmetries,
// factorisation checks, and a randomised search for three-symmetry
// factorisations. A failed search proves nothing.

#include <cstdint>
#include <optional>
#include <vector>

#include "symprod/symfactor.hpp"

namespace symprod {

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// diagonal of R made positive.
CMatrix haar_unitary(int d, std::uint64_t seed);

/// Q diag(I_p, -I_{d-p}) Q* for Haar Q.
CMatrix random_symmetry(int d, int plus_rank, std::uint64_t seed);

struct VerificationReport {
  std::vector<double> involution_residuals;
  double product_residual = 0;
  bool pass = false;
};

VerificationReport verify_factorization(const CMatrix& target, const std::vector<CMatrix>& factors,
                                        double tol = kDefaultTol);

/// min over permutations s of sum_i |lambda_i - conj(lambda_s(i))|: the
/// optimal matching distance between a spectrum and its conjugate.
double pairing_defect(const std::vector<Complex>& eigenvalues);
double pairing_defect(const CMatrix& u);

struct SearchOptions {
  double success_defect = 1e-6;
  int max_steps = 6000;  // accepted or rejected moves per restart
  int threads = 0;       // 0: hardware concurrency
};

struct SearchResult {
  SymmetryFactorization factorization;  // [J1, J2, J] with J1 J2 J = V
  int restart = -1;
  int plus_rank = 0;
  double defect = 0;
};

/// Looks for a symmetry J with V J in Sym_2, then factors V J. Restarts are
/// independent; the lowest successful restart index wins.
std::optional<SearchResult> search_sym3(const CMatrix& v, int iters, std::uint64_t seed,
                                        const SearchOptions& options = {});

}  // namespace symprod
