#include "symprod/reflen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace symprod {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStrict = 1e-10;
constexpr double kDetTol = 1e-7;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

void run_screens(LengthReport& rep) {
  const int d = rep.d;
  const int cap = d + d / 2;
  rep.screened = true;

  if (rep.length) {
    const bool over = *rep.length > cap;
    rep.bound.status = over ? ScreenStatus::Excluded : ScreenStatus::Pass;
    rep.bound.evidence = "length " + std::to_string(*rep.length) + (over ? " > " : " <= ") + std::to_string(cap);
  } else {
    rep.bound.status = ScreenStatus::NotApplicable;
    rep.bound.evidence = "determinant not real";
  }

  rep.arc.status = ScreenStatus::Pass;
  rep.arc.evidence = "spectrum not inside a single open quarter arc";
  for (int m = 1; m <= 4; ++m) {
    const double lo = (m - 1) * kPi / 2;
    const double hi = m * kPi / 2;
    const bool inside = std::all_of(rep.angles.begin(), rep.angles.end(),
                                    [&](double t) { return t > lo + kStrict && t < hi - kStrict; });
    if (inside) {
      rep.arc.status = ScreenStatus::Excluded;
      rep.arc.arc = m;
      rep.arc.evidence = "all angles inside arc " + std::to_string(m);
      break;
    }
  }

  const bool lower = std::all_of(rep.angles.begin(), rep.angles.end(),
                                 [](double t) { return t > kPi + kStrict && t < 2 * kPi - kStrict; });
  if (!lower) {
    rep.halfplane.status = ScreenStatus::NotApplicable;
    rep.halfplane.evidence = "spectrum not in the open lower half-plane";
    rep.parity.status = ScreenStatus::NotApplicable;
    rep.parity.evidence = rep.halfplane.evidence;
    return;
  }

  if (d >= 3 && rep.length) {
    const bool bad = d % 2 == 1 || *rep.length != cap;
    rep.halfplane.status = bad ? ScreenStatus::Excluded : ScreenStatus::Pass;
    rep.halfplane.evidence = d % 2 == 1 ? "odd dimension"
                                        : "length " + std::to_string(*rep.length) + (bad ? " != " : " == ") +
                                              std::to_string(cap);
  } else {
    rep.halfplane.status = ScreenStatus::NotApplicable;
    rep.halfplane.evidence = d < 3 ? "dimension below 3" : "determinant not real";
  }

  if (d % 2 == 0) {
    const double required = (d / 2) % 2 == 0 ? 1.0 : -1.0;
    const bool bad = std::abs(rep.det - required) > kDetTol;
    rep.parity.status = bad ? ScreenStatus::Excluded : ScreenStatus::Pass;
    rep.parity.evidence = "det " + fmt(rep.det.real()) + (rep.det.imag() != 0 ? "+" + fmt(rep.det.imag()) + "i" : "") +
                          ", required " + fmt(required);
  } else {
    rep.parity.status = ScreenStatus::NotApplicable;
    rep.parity.evidence = "odd dimension";
  }
}

}  // namespace

std::string to_string(ScreenStatus s) {
  switch (s) {
    case ScreenStatus::Pass: return "pass";
    case ScreenStatus::Excluded: return "excluded";
    case ScreenStatus::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

bool LengthReport::excluded() const {
  return bound.status == ScreenStatus::Excluded || arc.status == ScreenStatus::Excluded ||
         halfplane.status == ScreenStatus::Excluded || parity.status == ScreenStatus::Excluded;
}

LengthReport length_report_from_eigenvalues(const std::vector<Complex>& eigenvalues, bool screens) {
  LengthReport rep;
  rep.d = static_cast<int>(eigenvalues.size());
  rep.det = 1.0;
  int nonzero = 0;
  double sum = 0;
  for (const Complex& z : eigenvalues) {
    rep.det *= z;
    double t = 0;
    if (std::abs(z - 1.0) > 1e-9) {
      t = std::arg(z);
      if (t < 0) t += 2 * kPi;
      ++nonzero;
    }
    rep.angles.push_back(t);
    sum += t;
  }
  std::sort(rep.angles.begin(), rep.angles.end());
  rep.kappa = sum / kPi;
  rep.kappa_star = 2.0 * nonzero - rep.kappa;
  rep.det_real = std::abs(rep.det - 1.0) <= kDetTol || std::abs(rep.det + 1.0) <= kDetTol;
  if (rep.det_real) {
    const double top = std::max(rep.kappa, rep.kappa_star);
    const double rounded = std::round(top);
    if (std::abs(top - rounded) > 1e-7) {
      throw Error(Errc::InternalConsistency, "reflection length is not an integer: " + fmt(top));
    }
    rep.length = static_cast<int>(rounded);
  }
  if (screens) run_screens(rep);
  return rep;
}

namespace {

std::vector<Complex> spectrum(const CMatrix& w) {
  const auto e = unitary_eig(w);
  return {e.eigenvalues.data(), e.eigenvalues.data() + e.eigenvalues.size()};
}

}  // namespace

LengthReport reflection_length(const CMatrix& w) {
  auto rep = length_report_from_eigenvalues(spectrum(w), false);
  if (!rep.det_real) throw Error(Errc::DeterminantNotReal, "reflection_length: det(W) is not +-1");
  return rep;
}

LengthReport sym3_screen(const CMatrix& w) { return length_report_from_eigenvalues(spectrum(w), true); }

}  // namespace symprod
