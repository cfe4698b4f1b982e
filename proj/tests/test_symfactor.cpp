#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "symprod/symfactor.hpp"

using namespace symprod;
using testing::Gen;
using testing::kPi;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalConsistency;
}

const double kEps = std::sqrt(2.0) * kPi / 1000;

CMatrix two_eig_target(const Angle& a, const Angle& b, int r, int s) {
  std::vector<Complex> z(r, a.to_complex());
  z.insert(z.end(), s, b.to_complex());
  return testing::diag_of(z);
}

void check_factorization(const SymmetryFactorization& f, const CMatrix& target, double tol) {
  REQUIRE(f.factors.size() == 3);
  for (const auto& j : f.factors) {
    CHECK((j - j.adjoint()).norm() <= 1e-8);
    CHECK((j * j - CMatrix::Identity(j.rows(), j.cols())).norm() <= 1e-8);
  }
  const CMatrix prod = f.factors[0] * f.factors[1] * f.factors[2];
  CHECK((f.conjugator.adjoint() * prod * f.conjugator - target).norm() <= tol);
  CHECK(testing::unitarity_defect(f.conjugator) <= 1e-10);
  CHECK(f.product_residual <= tol);
}

SymmetryFactorization decide_and_factor(const Angle& a, const Angle& b, int r, int s, Sym3Case expected,
                                        std::optional<Sym3Case> only = std::nullopt) {
  const auto dec = sym3_two_eig_decide(a, b, r, s, only);
  CHECK(dec.verdict);
  CHECK(dec.kind == expected);
  for (double m : dec.margins) CHECK(m > 0);
  for (double m : dec.m) CHECK(std::abs(m) < 1);
  auto f = sym3_two_eig_factor(dec, a, b, r, s);
  check_factorization(f, two_eig_target(a, b, r, s), 1e-7);
  return f;
}

// alpha^i beta^j in {-1, 1} for k/n turns, by integer arithmetic.
bool relation(int ka, int kb, int n, int i, int j) { return (2LL * (i * ka + j * kb)) % n == 0; }

}  // namespace

TEST_CASE("sym2_check examples") {
  const auto a = sym2_check(testing::diag_of({Complex(0, 1), Complex(0, -1)}));
  CHECK(a.ok);
  REQUIRE(a.pairing.size() == 1);
  CHECK(a.pairing[0] == std::pair{0, 1});
  CHECK_FALSE(sym2_check(testing::diag_of({Complex(0, 1), Complex(0, 1)})).ok);
  const Complex w = std::polar(1.0, 2 * kPi / 3);
  CHECK_FALSE(sym2_check(testing::diag_of({w, w})).ok);
  CHECK(code_of([] { sym2_check(CMatrix(2.0 * CMatrix::Identity(2, 2))); }) == Errc::NotUnitary);
}

TEST_CASE("sym2_factor examples") {
  auto [j1, j2] = sym2_factor(testing::diag_of({Complex(0, 1), Complex(0, -1)}));
  CMatrix k(2, 2);
  k << 0, Complex(0, 1), Complex(0, -1), 0;
  CHECK((j1 - k).norm() < 1e-10);
  CHECK((j2 - testing::flip()).norm() < 1e-10);

  auto [i1, i2] = sym2_factor(CMatrix::Identity(3, 3));
  CHECK((i1 - CMatrix::Identity(3, 3)).norm() < 1e-12);
  CHECK((i2 - CMatrix::Identity(3, 3)).norm() < 1e-12);

  Gen g(41);
  const CMatrix u0 = testing::diag_of({std::polar(1.0, 1.1), std::polar(1.0, -1.1), 1.0, -1.0});
  const CMatrix q = g.unitary(4);
  const CMatrix u = q * u0 * q.adjoint();
  auto [a1, a2] = sym2_factor(u);
  CHECK(is_symmetry(a1, 1e-8));
  CHECK(is_symmetry(a2, 1e-8));
  CHECK((a1 * a2 - u).norm() <= 1e-7);

  CHECK(code_of([] { sym2_factor(testing::diag_of({Complex(0, 1), Complex(0, 1)})); }) == Errc::NotSym2);
}

TEST_CASE("sym2_check is conjugation invariant and sym2_factor inverts products") {
  Gen g(42);
  for (int t = 0; t < 200; ++t) {
    const int d = g.integer(1, 10);
    CMatrix u;
    if (t % 2 == 0) {
      u = random_symmetry(d, g.integer(0, d), g.next()) * random_symmetry(d, g.integer(0, d), g.next());
    } else {
      u = g.unitary(d);
    }
    const CMatrix q = g.unitary(d);
    const bool a = sym2_check(u).ok;
    CHECK(a == sym2_check(CMatrix(q.adjoint() * u * q)).ok);
    if (t % 2 == 0) {
      CHECK(a);
      auto [j1, j2] = sym2_factor(u);
      CHECK(is_symmetry(j1, 1e-8));
      CHECK(is_symmetry(j2, 1e-8));
      CHECK((j1 * j2 - u).norm() <= 1e-7);
    } else if (d >= 2) {
      CHECK_FALSE(a);  // Haar spectra are almost surely not conjugation-closed
    }
  }
}

TEST_CASE("condition_p examples") {
  const auto a = condition_p(Angle::turn(58, 360), Angle::turn(183, 360), 3, 2);
  CHECK(a.holds);
  CHECK(a.power_value == -1);
  const auto b = condition_p(Angle::turn(1, 16), Angle::turn(9, 16), 5, 3);
  CHECK(b.holds);
  CHECK(b.power_value == 1);
  const auto c = condition_p(Angle::turn(1, 4), Angle::turn(1, 2), 2, 1);
  CHECK_FALSE(c.holds);
  REQUIRE(c.violation);
  CHECK(c.violation->i == 0);
  CHECK(c.violation->j == 1);
  CHECK(c.violation->value == -1);
}

TEST_CASE("condition_p agrees with a brute-force integer scan") {
  const int n = 24;
  for (int d = 3; d <= 7; ++d) {
    for (int ka = 0; ka < n; ++ka) {
      for (int kb = 0; kb < n; ++kb) {
        if (ka == kb) continue;
        for (int r = (d + 1) / 2; r < d; ++r) {
          const int s = d - r;
          bool shorter = false;
          for (int i = 0; i < d && !shorter; ++i) {
            for (int j = 0; i + j < d && !shorter; ++j) {
              if (i + j > 0 && relation(ka, kb, n, i, j)) shorter = true;
            }
          }
          const bool expected = !shorter && relation(ka, kb, n, r, s);
          const auto rep = condition_p(Angle::turn(ka, n), Angle::turn(kb, n), r, s);
          CHECK(rep.holds == expected);
          CHECK(rep.holds == (!rep.violation && rep.power_real));
        }
      }
    }
  }
}

TEST_CASE("two-eigenvalue decisions: worked examples") {
  SUBCASE("odd, d = 5") {
    decide_and_factor(Angle::turn(58, 360), Angle::turn(183, 360), 3, 2, Sym3Case::Odd);
  }
  SUBCASE("gap two, d = 8") {
    decide_and_factor(Angle::turn(1, 16), Angle::turn(9, 16), 5, 3, Sym3Case::EvenGap2);
  }
  SUBCASE("d = 10, alpha = 1/20 turn, beta = -alpha") {
    const Angle a = Angle::turn(1, 20);
    const Angle b = Angle::turn(11, 20);
    // alpha^5 beta^5 = -alpha^10 = +1 exactly, so (ii) is the case that applies.
    const Angle det = a.times(5) + b.times(5);
    CHECK(det.is_real());
    CHECK(det.real_sign() == 1);
    decide_and_factor(a, b, 5, 5, Sym3Case::EvenEqualII);
    CHECK_FALSE(sym3_two_eig_decide(a, b, 5, 5, Sym3Case::EvenEqualIII).verdict);
  }
  SUBCASE("equal ranks, d = 8, case (i)") {
    decide_and_factor(Angle::radians(kPi + kEps), Angle::radians(kPi / 4 - kEps), 4, 4, Sym3Case::EvenEqualI);
  }
  SUBCASE("equal ranks, d = 6, case (ii) with power +1") {
    decide_and_factor(Angle::radians(kPi + kEps), Angle::radians(kPi / 3 - kEps), 3, 3, Sym3Case::EvenEqualII);
  }
  SUBCASE("equal ranks, d = 6, cases (ii) and (iii)") {
    const Angle a = Angle::radians(kPi + kPi / 6 + kEps);
    const Angle b = Angle::radians(kPi / 2 - kEps);
    decide_and_factor(a, b, 3, 3, Sym3Case::EvenEqualII);
    decide_and_factor(a, b, 3, 3, Sym3Case::EvenEqualIII, Sym3Case::EvenEqualIII);
    decide_and_factor(a, b, 3, 3, Sym3Case::EvenEqualII, Sym3Case::EvenEqualII);
  }
}

TEST_CASE("decisions are independent of input order") {
  const Angle a = Angle::turn(58, 360);
  const Angle b = Angle::turn(183, 360);
  const auto dec = sym3_two_eig_decide(b, a, 2, 3);
  CHECK(dec.swapped);
  CHECK(dec.verdict);
  CHECK(dec.r == 3);
  auto f = sym3_two_eig_factor(dec, b, a, 2, 3);
  check_factorization(f, two_eig_target(b, a, 2, 3), 1e-7);
  CHECK(code_of([&] { sym3_two_eig_factor(dec, a, b, 3, 2); }) == Errc::InvalidInput);
}

TEST_CASE("two-eigenvalue decisions: negative branches") {
  // dimension counts
  int counted = 0;
  for (int ka = 0; ka < 24; ++ka) {
    for (int kb = 0; kb < 24; ++kb) {
      for (auto [r, s] : {std::pair{4, 1}, std::pair{5, 1}, std::pair{6, 2}}) {
        const Angle a = Angle::turn(ka, 24);
        const Angle b = Angle::turn(kb, 24);
        if (ka == kb || !condition_p(a, b, r, s).holds) continue;
        const auto dec = sym3_two_eig_decide(a, b, r, s);
        CHECK_FALSE(dec.verdict);
        CHECK(dec.reason.find("dimension") != std::string::npos);
        ++counted;
      }
    }
  }
  CHECK(counted > 0);
  // d = 4, r = s = 2: Condition (P) already forces (alpha beta)^2 = -1.
  for (int ka = 0; ka < 24; ++ka) {
    for (int kb = 0; kb < 24; ++kb) {
      const Angle a = Angle::turn(ka, 24);
      const Angle b = Angle::turn(kb, 24);
      if (ka == kb || !condition_p(a, b, 2, 2).holds) continue;
      CHECK((a + b).times(2).real_sign() == -1);
    }
  }
  CHECK(code_of([] { sym3_two_eig_decide(Angle::turn(1, 4), Angle::turn(1, 2), 2, 1); }) ==
        Errc::ConditionPViolated);
  CHECK(code_of([] { sym3_two_eig_decide(Angle::turn(1, 4), Angle::turn(1, 4), 2, 1); }) == Errc::InvalidInput);
  CHECK(code_of([] { sym3_two_eig_decide(Angle::turn(1, 4), Angle::turn(1, 3), 0, 1); }) == Errc::InvalidInput);
}

TEST_CASE("d = 2 decisions follow the determinant") {
  for (int ka = 0; ka < 12; ++ka) {
    for (int kb = 0; kb < 12; ++kb) {
      if (ka == kb) continue;
      const auto dec = sym3_two_eig_decide(Angle::turn(ka, 12), Angle::turn(kb, 12), 1, 1);
      CHECK(dec.kind == Sym3Case::Dim2);
      CHECK(dec.verdict == ((2 * (ka + kb)) % 12 == 0));
      if (dec.verdict) {
        auto f = sym3_two_eig_factor(dec, Angle::turn(ka, 12), Angle::turn(kb, 12), 1, 1);
        check_factorization(f, two_eig_target(Angle::turn(ka, 12), Angle::turn(kb, 12), 1, 1), 1e-7);
      }
    }
  }
  const auto dec = sym3_two_eig_decide(Angle::turn(1, 6), Angle::turn(1, 3), 1, 1);
  CHECK(dec.verdict);
}

TEST_CASE("odd-dimension verdicts match a direct complex-arithmetic check") {
  const int n = 30;
  for (int d : {3, 5, 7}) {
    const int r = (d + 1) / 2;
    const int s = d - r;
    const int d0 = (d - 1) / 2;
    for (int ka = 0; ka < n; ++ka) {
      for (int kb = 0; kb < n; ++kb) {
        if (ka == kb) continue;
        const Angle a = Angle::turn(ka, n);
        const Angle b = Angle::turn(kb, n);
        if (!condition_p(a, b, r, s).holds) continue;
        const Complex za = std::polar(1.0, 2 * kPi * ka / n);
        const Complex zb = std::polar(1.0, 2 * kPi * kb / n);
        bool expected = true;
        bool boundary = false;
        for (int j = 1; j <= d0; ++j) {
          const double slack = std::abs(za - zb) - std::abs(1.0 - std::pow(za * zb, 2 * j - 1));
          if (std::abs(slack) < 1e-10) boundary = true;
          if (slack <= 0) expected = false;
        }
        const auto dec = sym3_two_eig_decide(a, b, r, s);
        if (!boundary) CHECK(dec.verdict == expected);
        else CHECK_FALSE(dec.verdict);
      }
    }
  }
}

TEST_CASE("every yes on a small grid has a verified factorization") {
  const int n = 20;
  std::vector<int> yes(9, 0);
  for (int d = 3; d <= 8; ++d) {
    for (int ka = 0; ka < n; ++ka) {
      for (int kb = 0; kb < n; ++kb) {
        if (ka == kb) continue;
        for (int r = (d + 1) / 2; r < d; ++r) {
          const Angle a = Angle::turn(ka, n);
          const Angle b = Angle::turn(kb, n);
          Sym3Decision dec;
          try {
            dec = sym3_two_eig_decide(a, b, r, d - r);
          } catch (const Error& e) {
            CHECK(e.code() == Errc::ConditionPViolated);
            continue;
          }
          if (dec.kind == Sym3Case::EvenEqualIII) CHECK(d % 4 != 0);
          if (!dec.verdict) continue;
          ++yes[d];
          auto f = sym3_two_eig_factor(dec, a, b, r, d - r);
          check_factorization(f, two_eig_target(a, b, r, d - r), 1e-7);
          // Per-block determinant and spectral pairing of the construction.
          const Complex za = dec.alpha.to_complex();
          const Complex zb = dec.beta.to_complex();
          for (double m : dec.m) {
            const double nn = std::sqrt(1 - m * m);
            CMatrix y(2, 2);
            y << za * m, za * nn, zb * nn, -zb * m;
            CHECK(std::abs(y.determinant() + za * zb) <= 1e-10);
            const auto ev = testing::reference_spectrum(y);
            CHECK(testing::same_multiset(ev, {-za * zb * std::conj(ev[0]), -za * zb * std::conj(ev[1])}, 1e-9));
          }
        }
      }
    }
  }
  // Condition (P) leaves no admissible pair on this grid once d >= 6.
  for (int d = 3; d <= 5; ++d) {
    INFO("d = " << d);
    CHECK(yes[d] > 0);
  }
}

TEST_CASE("conjugation and negation leave decisions unchanged") {
  const int n = 24;
  for (int d = 3; d <= 6; ++d) {
    for (int ka = 0; ka < n; ++ka) {
      for (int kb = 0; kb < n; ++kb) {
        if (ka == kb) continue;
        for (int r = (d + 1) / 2; r < d; ++r) {
          const Angle a = Angle::turn(ka, n);
          const Angle b = Angle::turn(kb, n);
          if (!condition_p(a, b, r, d - r).holds) continue;
          const bool v = sym3_two_eig_decide(a, b, r, d - r).verdict;
          CHECK(v == sym3_two_eig_decide(-a, -b, r, d - r).verdict);
          CHECK(v == sym3_two_eig_decide(a.negated_point(), b.negated_point(), r, d - r).verdict);
        }
      }
    }
  }
}

TEST_CASE("polygon_min values") {
  CHECK(polygon_min(1) == doctest::Approx(0).epsilon(1e-15));
  CHECK(polygon_min(2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(polygon_min(4) == doctest::Approx(2 * std::sin(3 * kPi / 8)));
  CHECK(polygon_min(4) == doctest::Approx(1.8478).epsilon(1e-4));
  for (int d0 = 1; d0 <= 10; ++d0) {
    CHECK(polygon_min(d0) == doctest::Approx(std::abs(std::polar(1.0, kPi * (d0 - 1) / d0) - 1.0)));
  }
}

TEST_CASE("polygon_argmin attains polygon_min on the roots it describes") {
  for (int d0 = 1; d0 <= 8; ++d0) {
    // alpha beta a primitive 2 d0-th root of unity: alpha = 1/(2 d0) turn, beta = 1.
    const Angle a = Angle::turn(1, 2 * d0);
    const Angle b = Angle::turn(0, 1);
    const Angle g = polygon_argmin(a, b, d0);
    CHECK(polygon_f(a, b, g.to_complex(), d0) == doctest::Approx(polygon_min(d0)).epsilon(1e-12));
    for (int k = 0; k < 360; ++k) {
      CHECK(polygon_f(a, b, std::polar(1.0, 2 * kPi * k / 360), d0) >= polygon_min(d0) - 1e-12);
    }
  }
}

TEST_CASE("prime_root_block") {
  const auto p3 = prime_root_block(3);
  CHECK(p3.spec.to_string() == "1/3:2,5/6:1");
  CHECK(p3.decision.verdict);
  for (int p : {3, 5, 7, 11, 13}) {
    const auto blk = prime_root_block(p);
    CHECK(blk.spec.dimension() == p);
    CHECK(blk.spec.pairs[0].second == (p + 1) / 2);
    check_factorization(blk.factorization, blk.spec.to_matrix(), 1e-7);
  }
  CHECK(code_of([] { prime_root_block(4); }) == Errc::NotPrime);
  CHECK(code_of([] { prime_root_block(2); }) == Errc::NotPrime);
  CHECK(is_prime(11));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("sym4_factor") {
  const CMatrix flip = testing::flip();
  const auto s = sym4_factor(flip);
  REQUIRE(s.factors.size() == 4);
  CHECK((s.factors[0] - flip).norm() == 0);
  for (int i = 1; i < 4; ++i) CHECK((s.factors[i] - CMatrix::Identity(2, 2)).norm() == 0);

  const Complex w = std::polar(1.0, 2 * kPi / 3);
  const CMatrix wi = testing::diag_of({w, w, w});
  const auto f = sym4_factor(wi);
  REQUIRE(f.factors.size() == 4);
  for (const auto& j : f.factors) CHECK(is_symmetry(j, 1e-8));
  CHECK((f.factors[0] * f.factors[1] * f.factors[2] * f.factors[3] - wi).norm() <= 1e-7);

  Gen g(43);
  for (int t = 0; t < 100; ++t) {
    const int d = t < 50 ? 7 : g.integer(1, 9);
    CMatrix u = g.unitary(d);
    const Complex det = Eigen::PartialPivLU<CMatrix>(u).determinant();
    u *= std::polar(1.0, -std::arg(det) / d + (t % 2) * kPi / d);
    const auto h = sym4_factor(u);
    REQUIRE(h.factors.size() == 4);
    for (const auto& j : h.factors) CHECK(is_symmetry(j, 1e-8));
    const CMatrix prod = h.factors[0] * h.factors[1] * h.factors[2] * h.factors[3];
    CHECK((prod - u).norm() <= 1e-6);
    const CMatrix a = h.factors[0] * h.factors[1];
    const CMatrix b = h.factors[2] * h.factors[3];
    CHECK((a * b - b * a).norm() <= 1e-6);
    CHECK(sym2_check(a).ok);
    CHECK(sym2_check(b).ok);
  }
  CHECK(code_of([] { sym4_factor(testing::diag_of({Complex(0, 1), 1.0})); }) == Errc::DeterminantNotReal);
}

TEST_CASE("case names round trip") {
  for (auto c : {Sym3Case::Dim2, Sym3Case::Odd, Sym3Case::EvenGap2, Sym3Case::EvenEqualI, Sym3Case::EvenEqualII,
                 Sym3Case::EvenEqualIII}) {
    CHECK(sym3_case_from_string(to_string(c)) == c);
  }
  CHECK_FALSE(sym3_case_from_string(to_string(Sym3Case::None)));
  CHECK_FALSE(sym3_case_from_string("bogus"));
}
