#pragma once

// Deciders and constructive factorisations for products of two, three and
// four symmetries.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "symprod/angle.hpp"
#include "symprod/symcore.hpp"

namespace symprod {

/// Ordered symmetry factors together with the frame they live in.
/// conjugator* * (factors[0] * factors[1] * ...) * conjugator == target.
struct SymmetryFactorization {
  std::vector<CMatrix> factors;
  CMatrix conjugator;
  std::vector<int> permutation;  // frame position k carries target entry permutation[k]
  CMatrix target;
  std::vector<double> involution_residuals;
  double product_residual = 0;

  CMatrix product() const;
};

/// Fills in the residuals of a factorisation from its factors.
SymmetryFactorization make_factorization(CMatrix target, std::vector<CMatrix> factors, CMatrix conjugator,
                                         std::vector<int> permutation = {});

// ---------------------------------------------------------------- Sym_2

struct Sym2Check {
  bool ok = false;
  std::vector<std::pair<int, int>> pairing;  // (min, max) indices into eig.eigenvalues
  EigenResult eig;
};

Sym2Check sym2_check(const CMatrix& u, double tol = kDefaultTol);
/// J1 J2 = U built from conjugate-pair blocks and real tails.
std::pair<CMatrix, CMatrix> sym2_factor(const CMatrix& u, double tol = kDefaultTol, double match_tol = 1e-7);

// ---------------------------------------------------------------- Condition (P)

struct ConditionPViolation {
  int i = 0;
  int j = 0;
  int value = 0;  // alpha^i beta^j
};

struct ConditionPReport {
  bool holds = false;
  int d = 0;
  int r = 0;
  int s = 0;
  bool power_real = false;
  int power_value = 0;  // alpha^r beta^s when power_real
  std::optional<ConditionPViolation> violation;
};

/// Scans i, j >= 0, (i, j) != (0, 0), i + j < d, by increasing i + j and then
/// increasing i, for alpha^i beta^j in {-1, 1}.
ConditionPReport condition_p(const Angle& alpha, const Angle& beta, int r, int s);

// ---------------------------------------------------------------- Sym_3, two eigenvalues

enum class Sym3Case { Dim2, Odd, EvenGap2, EvenEqualI, EvenEqualII, EvenEqualIII, None };

std::string to_string(Sym3Case c);
std::optional<Sym3Case> sym3_case_from_string(const std::string& s);

struct Sym3Decision {
  bool verdict = false;
  Sym3Case kind = Sym3Case::None;
  std::string reason;     // exclusion reason when verdict is no
  bool boundary = false;  // a strict inequality was met with |slack| < 1e-10
  bool swapped = false;   // inputs were exchanged so that r >= s
  Angle alpha;            // after the swap
  Angle beta;
  int r = 0;
  int s = 0;
  int d0 = 0;
  std::vector<double> m;
  std::optional<Angle> theta;
  std::vector<double> margins;
  ConditionPReport condition;

  double min_margin() const;
};

inline constexpr double kBoundaryTol = 1e-10;

/// Decides alpha I_r (+) beta I_s in Sym_3. With `only`, the even equal-rank
/// tests are restricted to that single case.
Sym3Decision sym3_two_eig_decide(const Angle& alpha, const Angle& beta, int r, int s,
                                 std::optional<Sym3Case> only = std::nullopt);

/// Three symmetries whose product is alpha I_r (+) beta I_s in the recorded
/// interleaved frame. Throws ResidualTooLarge when verification fails.
SymmetryFactorization sym3_two_eig_factor(const Sym3Decision& decision, const Angle& alpha, const Angle& beta,
                                          int r, int s);

/// 2 sin(pi (d0 - 1) / (2 d0)).
double polygon_min(int d0);
/// max_j |(alpha beta)^{2j-1} - gamma| over 1 <= j <= d0.
double polygon_f(const Angle& alpha, const Angle& beta, Complex gamma, int d0);
/// A minimiser of polygon_f: alpha beta for odd d0, alpha beta e^{i pi/d0} for even d0.
Angle polygon_argmin(const Angle& alpha, const Angle& beta, int d0);

bool is_prime(long long p);

struct PrimeRootBlock {
  EigenSpec spec;
  Sym3Decision decision;
  SymmetryFactorization factorization;
};

/// alpha = 1/p turn, beta = -alpha, r = (p+1)/2, s = (p-1)/2.
PrimeRootBlock prime_root_block(int p);

// ---------------------------------------------------------------- Sym_4

/// Four symmetries with J1 J2 J3 J4 = U for det(U) = +-1, by chained
/// conjugate pairing of the eigenvalues.
SymmetryFactorization sym4_factor(const CMatrix& u, double tol = kDefaultTol);

}  // namespace symprod
