#include "symprod/symfactor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace symprod {

CMatrix SymmetryFactorization::product() const {
  if (factors.empty()) return CMatrix::Identity(target.rows(), target.cols());
  CMatrix p = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) p = p * factors[i];
  return p;
}

SymmetryFactorization make_factorization(CMatrix target, std::vector<CMatrix> factors, CMatrix conjugator,
                                         std::vector<int> permutation) {
  SymmetryFactorization f;
  f.target = std::move(target);
  f.factors = std::move(factors);
  f.conjugator = std::move(conjugator);
  f.permutation = std::move(permutation);
  for (const auto& j : f.factors) f.involution_residuals.push_back(symmetry_residual(j));
  f.product_residual = (f.conjugator.adjoint() * f.product() * f.conjugator - f.target).norm();
  return f;
}

// ---------------------------------------------------------------- Sym_2

Sym2Check sym2_check(const CMatrix& u, double tol) {
  auto pairing = sym2_pairing(u, tol);
  Sym2Check out;
  out.ok = pairing.ok;
  for (auto [a, b] : pairing.pairs) out.pairing.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(out.pairing.begin(), out.pairing.end());
  out.eig = std::move(pairing.eig);
  return out;
}

std::pair<CMatrix, CMatrix> sym2_factor(const CMatrix& u, double tol, double match_tol) {
  const auto pairing = sym2_pairing(u, tol, match_tol);
  if (!pairing.ok) throw Error(Errc::NotSym2, "sym2_factor: non-real eigenvalues do not pair with their conjugates");
  return factor_from_pairing(pairing, false);
}

// ---------------------------------------------------------------- Condition (P)

ConditionPReport condition_p(const Angle& alpha, const Angle& beta, int r, int s) {
  ConditionPReport rep;
  rep.r = r;
  rep.s = s;
  rep.d = r + s;
  const Angle power = alpha.times(r) + beta.times(s);
  rep.power_real = power.is_real();
  rep.power_value = rep.power_real ? power.real_sign() : 0;
  for (int total = 1; total < rep.d && !rep.violation; ++total) {
    for (int i = 0; i <= total; ++i) {
      const Angle z = alpha.times(i) + beta.times(total - i);
      if (z.is_real()) {
        rep.violation = ConditionPViolation{i, total - i, z.real_sign()};
        break;
      }
    }
  }
  rep.holds = rep.power_real && !rep.violation;
  return rep;
}

// ---------------------------------------------------------------- Sym_3

std::string to_string(Sym3Case c) {
  switch (c) {
    case Sym3Case::Dim2: return "dim2";
    case Sym3Case::Odd: return "odd";
    case Sym3Case::EvenGap2: return "even-gap2";
    case Sym3Case::EvenEqualI: return "even-equal-i";
    case Sym3Case::EvenEqualII: return "even-equal-ii";
    case Sym3Case::EvenEqualIII: return "even-equal-iii";
    case Sym3Case::None: return "none";
  }
  return "none";
}

std::optional<Sym3Case> sym3_case_from_string(const std::string& s) {
  for (auto c : {Sym3Case::Dim2, Sym3Case::Odd, Sym3Case::EvenGap2, Sym3Case::EvenEqualI, Sym3Case::EvenEqualII,
                 Sym3Case::EvenEqualIII}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

double Sym3Decision::min_margin() const {
  if (margins.empty()) return std::numeric_limits<double>::quiet_NaN();
  return *std::min_element(margins.begin(), margins.end());
}

double polygon_min(int d0) {
  if (d0 < 1) throw Error(Errc::InvalidInput, "polygon_min: d0 must be positive");
  return 2.0 * std::sin(std::numbers::pi * (d0 - 1) / (2.0 * d0));
}

double polygon_f(const Angle& alpha, const Angle& beta, Complex gamma, int d0) {
  const Angle ab = alpha + beta;
  double worst = 0;
  for (int j = 1; j <= d0; ++j) worst = std::max(worst, std::abs(ab.times(2 * j - 1).to_complex() - gamma));
  return worst;
}

Angle polygon_argmin(const Angle& alpha, const Angle& beta, int d0) {
  const Angle ab = alpha + beta;
  if (d0 % 2 == 1) return ab;
  return ab + Angle::turn(1, 2 * d0);
}

namespace {

enum class Outcome { Pass, Fail, Boundary };

Outcome settle(const std::vector<double>& margins) {
  bool all_positive = true;
  for (double m : margins) {
    if (std::abs(m) < kBoundaryTol) return Outcome::Boundary;
    if (m <= 0) all_positive = false;
  }
  return all_positive ? Outcome::Pass : Outcome::Fail;
}

Complex cx(const Angle& a) { return a.to_complex(); }

// Half the angle: a square root of the point.
Angle half(const Angle& a) {
  if (a.is_rational()) return Angle::turn(a.num(), 2 * a.den());
  return Angle::radians(a.to_radians() / 2);
}

double real_checked(Complex z) {
  if (std::abs(z.imag()) > kBoundaryTol) {
    throw Error(Errc::InternalConsistency, "construction coefficient is not real");
  }
  return z.real();
}

// m_j = (-1)^{j-1} (conj(a^j b^{j-1}) - a^{j+1} b^j) / (a - b), 1 <= j <= d0.
std::vector<double> chain_coefficients(const Angle& a, const Angle& b, int d0) {
  std::vector<double> m;
  const Complex denom = cx(a) - cx(b);
  for (int j = 1; j <= d0; ++j) {
    const Complex first = std::conj(cx(a.times(j) + b.times(j - 1)));
    const Complex second = cx(a.times(j + 1) + b.times(j));
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    m.push_back(real_checked(sign * (first - second) / denom));
  }
  return m;
}

// m_j = ((-conj(ab))^{j-1} theta + (-ab)^j conj(theta)) / (a - b), 1 <= j <= d0.
std::vector<double> polygon_coefficients(const Angle& a, const Angle& b, const Angle& theta, int d0) {
  std::vector<double> m;
  const Angle neg_ab = (a + b).negated_point();
  const Angle neg_ab_bar = -neg_ab;
  const Complex denom = cx(a) - cx(b);
  for (int j = 1; j <= d0; ++j) {
    const Complex num = cx(neg_ab_bar.times(j - 1) + theta) + cx(neg_ab.times(j) - theta);
    m.push_back(real_checked(num / denom));
  }
  return m;
}

std::vector<double> polygon_slacks(const Angle& a, const Angle& b, const Angle& theta, int d0) {
  const double gap = std::abs(cx(a) - cx(b));
  const Complex t2 = cx(theta.times(2));
  std::vector<double> out;
  const Angle ab = a + b;
  for (int j = 1; j <= d0; ++j) out.push_back(gap - std::abs(cx(ab.times(2 * j - 1)) - t2));
  return out;
}

void fill_construction(Sym3Decision& dec) {
  const Angle& a = dec.alpha;
  const Angle& b = dec.beta;
  const int d = dec.r + dec.s;
  switch (dec.kind) {
    case Sym3Case::Odd:
      dec.d0 = (d - 1) / 2;
      dec.m = chain_coefficients(a, b, dec.d0);
      break;
    case Sym3Case::EvenGap2:
      dec.d0 = (d - 2) / 2;
      dec.m = chain_coefficients(a, b, dec.d0);
      break;
    case Sym3Case::EvenEqualIII:
      dec.d0 = dec.r - 1;
      dec.m = chain_coefficients(a, b, dec.d0);
      break;
    case Sym3Case::EvenEqualI:
    case Sym3Case::EvenEqualII: {
      dec.d0 = dec.r;
      Angle theta;  // 1
      if (dec.kind == Sym3Case::EvenEqualII && dec.condition.power_value == -1) {
        theta = half(polygon_argmin(a, b, dec.d0));
        // theta must stay off the real line; move it along the circle if needed.
        double delta = 1e-6;
        for (int attempt = 0; std::abs(cx(theta).imag()) <= 1e-9; ++attempt) {
          if (attempt == 20) throw Error(Errc::ResidualTooLarge, "no admissible non-real theta found");
          const Angle trial = theta + Angle::radians(2 * std::numbers::pi * delta);
          const auto slacks = polygon_slacks(a, b, trial, dec.d0);
          if (settle(slacks) == Outcome::Pass) {
            theta = trial;
            break;
          }
          delta /= 2;
        }
        dec.theta = theta;
      }
      dec.m = polygon_coefficients(a, b, theta, dec.d0);
      break;
    }
    default:
      break;
  }
  for (double m : dec.m) {
    if (!(std::abs(m) < 1)) throw Error(Errc::ResidualTooLarge, "construction coefficient outside (-1, 1)");
  }
}

}  // namespace

Sym3Decision sym3_two_eig_decide(const Angle& alpha, const Angle& beta, int r, int s, std::optional<Sym3Case> only) {
  if (r < 1 || s < 1) throw Error(Errc::InvalidInput, "multiplicities must be positive");
  if (alpha.same_point(beta)) throw Error(Errc::InvalidInput, "alpha and beta must be distinct");
  Sym3Decision dec;
  dec.alpha = alpha;
  dec.beta = beta;
  dec.r = r;
  dec.s = s;
  if (r < s) {
    std::swap(dec.alpha, dec.beta);
    std::swap(dec.r, dec.s);
    dec.swapped = true;
  }
  const Angle& a = dec.alpha;
  const Angle& b = dec.beta;
  const int d = dec.r + dec.s;
  dec.condition = condition_p(a, b, dec.r, dec.s);

  if (d == 2) {
    dec.kind = Sym3Case::Dim2;
    dec.verdict = (a + b).is_real();
    if (!dec.verdict) dec.reason = "determinant not real";
    return dec;
  }
  if (!dec.condition.holds) {
    throw Error(Errc::ConditionPViolated, "Condition (P) does not hold for these parameters");
  }

  const double gap = std::abs(cx(a) - cx(b));
  const int power = dec.condition.power_value;
  auto slack = [&](const Angle& z) { return gap - std::abs(1.0 - cx(z)); };
  auto finish = [&](Sym3Case c, Outcome o, const char* fail_reason) {
    if (o == Outcome::Pass) {
      dec.verdict = true;
      dec.kind = c;
      dec.reason.clear();
      fill_construction(dec);
    } else {
      dec.verdict = false;
      dec.boundary = dec.boundary || o == Outcome::Boundary;
      dec.reason = o == Outcome::Boundary ? "boundary case" : fail_reason;
    }
  };

  if (d % 2 == 1) {
    if (dec.r - dec.s != 1) {
      dec.reason = "dimension count: odd d requires r - s = 1";
      return dec;
    }
    const int d0 = (d - 1) / 2;
    for (int j = 1; j <= d0; ++j) dec.margins.push_back(slack((a + b).times(2 * j - 1)));
    finish(Sym3Case::Odd, settle(dec.margins), "inequality fails");
    return dec;
  }

  if (dec.r - dec.s == 2) {
    const int d0 = (d - 2) / 2;
    const int required = (d0 + 1) % 2 == 0 ? 1 : -1;
    if (power != required) {
      dec.reason = "power condition fails";
      return dec;
    }
    for (int j = 1; j <= d0; ++j) dec.margins.push_back(slack(a.times(2 * j + 1) + b.times(2 * j - 1)));
    finish(Sym3Case::EvenGap2, settle(dec.margins), "inequality fails");
    return dec;
  }

  if (dec.r != dec.s) {
    dec.reason = "dimension count: even d requires r - s in {0, 2}";
    return dec;
  }

  const bool div4 = d % 4 == 0;
  const double polygon_margin = gap - polygon_min(dec.r);
  auto wanted = [&](Sym3Case c) { return !only || *only == c; };
  dec.reason = div4 ? "d divisible by 4 requires (alpha beta)^r = -1 and the polygon bound" : "no case applies";

  if (wanted(Sym3Case::EvenEqualI) && div4 && power == -1) {
    dec.margins = {polygon_margin};
    const Outcome o = settle(dec.margins);
    finish(Sym3Case::EvenEqualI, o, "polygon bound fails");
    return dec;
  }
  if (wanted(Sym3Case::EvenEqualII) && !div4) {
    dec.margins = {polygon_margin};
    const Outcome o = settle(dec.margins);
    if (o == Outcome::Pass) {
      finish(Sym3Case::EvenEqualII, o, "");
      return dec;
    }
    dec.boundary = dec.boundary || o == Outcome::Boundary;
  }
  if (wanted(Sym3Case::EvenEqualIII) && !div4 && power == -1) {
    std::vector<double> slacks;
    for (int j = 1; j <= dec.r - 1; ++j) slacks.push_back(slack(a.times(2 * j + 1) + b.times(2 * j - 1)));
    dec.margins.insert(dec.margins.end(), slacks.begin(), slacks.end());
    const Outcome o = settle(slacks);
    if (o == Outcome::Pass) {
      dec.margins = slacks;
      finish(Sym3Case::EvenEqualIII, o, "");
      return dec;
    }
    dec.boundary = dec.boundary || o == Outcome::Boundary;
  }
  dec.verdict = false;
  if (dec.boundary) dec.reason = "boundary case";
  return dec;
}

SymmetryFactorization sym3_two_eig_factor(const Sym3Decision& dec, const Angle& alpha, const Angle& beta, int r,
                                          int s) {
  if (!dec.verdict) throw Error(Errc::InvalidInput, "sym3_two_eig_factor: decision is not yes");
  const bool consistent =
      dec.swapped ? (dec.alpha.same_point(beta) && dec.beta.same_point(alpha) && dec.r == s && dec.s == r)
                  : (dec.alpha.same_point(alpha) && dec.beta.same_point(beta) && dec.r == r && dec.s == s);
  if (!consistent) throw Error(Errc::InvalidInput, "sym3_two_eig_factor: decision does not match the inputs");

  const Complex a = cx(dec.alpha);
  const Complex b = cx(dec.beta);
  const int d = r + s;
  CMatrix z = CMatrix::Zero(d, d);
  CMatrix j = CMatrix::Zero(d, d);
  std::vector<bool> slot_is_a;
  int pos = 0;
  auto single = [&](Complex zval, double jval, bool is_a) {
    z(pos, pos) = zval;
    j(pos, pos) = jval;
    slot_is_a.push_back(is_a);
    ++pos;
  };
  auto blocks = [&]() {
    for (double m : dec.m) {
      const double n = std::sqrt(std::max(0.0, 1.0 - m * m));
      z(pos, pos) = a * m;
      z(pos, pos + 1) = a * n;
      z(pos + 1, pos) = b * n;
      z(pos + 1, pos + 1) = -b * m;
      j(pos, pos) = m;
      j(pos, pos + 1) = n;
      j(pos + 1, pos) = n;
      j(pos + 1, pos + 1) = -m;
      slot_is_a.push_back(true);
      slot_is_a.push_back(false);
      pos += 2;
    }
  };

  switch (dec.kind) {
    case Sym3Case::Dim2:
      if ((dec.alpha + dec.beta).real_sign() == 1) {
        single(a, 1, true);
        single(b, 1, false);
      } else {
        single(a, 1, true);
        single(-b, -1, false);
      }
      break;
    case Sym3Case::Odd:
      single(a, 1, true);
      blocks();
      break;
    case Sym3Case::EvenGap2:
      single(a, 1, true);
      single(-a, -1, true);
      blocks();
      break;
    case Sym3Case::EvenEqualI:
    case Sym3Case::EvenEqualII:
      blocks();
      break;
    case Sym3Case::EvenEqualIII:
      single(a, 1, true);
      blocks();
      single(-b, -1, false);
      break;
    case Sym3Case::None:
      throw Error(Errc::InvalidInput, "sym3_two_eig_factor: no construction case");
  }
  if (pos != d) throw Error(Errc::InternalConsistency, "sym3_two_eig_factor: frame size mismatch");

  // Frame slot k holds the original alpha iff (slot is a) differs from swapped.
  std::vector<int> perm(d);
  int next_alpha = 0;
  int next_beta = r;
  for (int k = 0; k < d; ++k) perm[k] = (slot_is_a[k] != dec.swapped) ? next_alpha++ : next_beta++;
  CMatrix conj = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) conj(k, perm[k]) = 1.0;

  auto [j1, j2] = sym2_factor(z, 1e-9, 1e-7);
  CMatrix target = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) target(k, k) = k < r ? cx(alpha) : cx(beta);
  auto f = make_factorization(target, {j1, j2, j}, conj, perm);
  const double worst = *std::max_element(f.involution_residuals.begin(), f.involution_residuals.end());
  if (f.product_residual > 1e-7 || worst > 1e-8) {
    throw Error(Errc::ResidualTooLarge, "sym3_two_eig_factor: verification failed");
  }
  return f;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

PrimeRootBlock prime_root_block(int p) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  PrimeRootBlock out;
  const Angle alpha = Angle::turn(1, p);
  const Angle beta = alpha.negated_point();
  const int r = (p + 1) / 2;
  const int s = (p - 1) / 2;
  out.spec.pairs = {{alpha, r}, {beta, s}};
  out.decision = sym3_two_eig_decide(alpha, beta, r, s);
  if (!out.decision.verdict) throw Error(Errc::InternalConsistency, "prime root block was not decided yes");
  out.factorization = sym3_two_eig_factor(out.decision, alpha, beta, r, s);
  return out;
}

// ---------------------------------------------------------------- Sym_4

SymmetryFactorization sym4_factor(const CMatrix& u, double tol) {
  detail::require_square_finite(u, "sym4_factor");
  if (!is_unitary(u, tol)) throw Error(Errc::NotUnitary, "sym4_factor: input is not unitary");
  const int d = static_cast<int>(u.rows());
  const CMatrix id = CMatrix::Identity(d, d);
  if (is_symmetry(u, 1e-8)) return make_factorization(u, {u, id, id, id}, id);

  const auto eig = unitary_eig(u, tol);
  const auto& lam = eig.eigenvalues;
  Complex det(1.0);
  for (int i = 0; i < d; ++i) det *= lam(i);
  const double sign = det.real() >= 0 ? 1.0 : -1.0;
  if (std::abs(det - sign) > 1e-7) {
    throw Error(Errc::DeterminantNotReal, "sym4_factor: det(U) is not +-1");
  }

  // a_1 = lambda_1, b_1 = 1; then alternately a_k = conj(a_{k-1}) or b_k = conj(b_{k-1}).
  std::vector<Complex> av(d), bv(d);
  av[0] = lam(0);
  bv[0] = 1.0;
  for (int k = 1; k < d; ++k) {
    if (k % 2 == 1) {
      av[k] = std::conj(av[k - 1]);
      bv[k] = lam(k) / av[k];
    } else {
      bv[k] = std::conj(bv[k - 1]);
      av[k] = lam(k) / bv[k];
    }
  }
  // The unpaired entry carries det(U).
  if (d % 2 == 1) {
    av[d - 1] = sign;
  } else {
    bv[d - 1] = sign;
  }

  auto pair_blocks = [&](const std::vector<Complex>& v, int first) {
    CMatrix k = CMatrix::Zero(d, d);
    CMatrix l = CMatrix::Zero(d, d);
    std::vector<bool> used(d, false);
    for (int p = first; p + 1 < d; p += 2) {
      const Complex x = v[p] / std::abs(v[p]);
      k(p, p + 1) = x;
      k(p + 1, p) = std::conj(x);
      l(p, p + 1) = 1.0;
      l(p + 1, p) = 1.0;
      used[p] = used[p + 1] = true;
    }
    for (int p = 0; p < d; ++p) {
      if (!used[p]) {
        k(p, p) = v[p].real() >= 0 ? 1.0 : -1.0;
        l(p, p) = 1.0;
      }
    }
    return std::pair{k, l};
  };
  const auto [ka, la] = pair_blocks(av, 0);
  const auto [kb, lb] = pair_blocks(bv, 1);
  const CMatrix& q = eig.basis;
  auto lift = [&](const CMatrix& m) {
    CMatrix x = q * m * q.adjoint();
    return CMatrix((x + x.adjoint()) / 2.0);
  };
  return make_factorization(u, {lift(ka), lift(la), lift(kb), lift(lb)}, id);
}

}  // namespace symprod
