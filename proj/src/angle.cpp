#include "symprod/angle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace symprod {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap_radians(double r) {
  double w = std::fmod(r, kTwoPi);
  if (w < 0) w += kTwoPi;
  if (w >= kTwoPi) w -= kTwoPi;
  return w;
}

// Circular distance between two angles in radians.
double circle_gap(double a, double b) {
  const double g = wrap_radians(a - b);
  return std::min(g, kTwoPi - g);
}

}  // namespace

Angle Angle::turn(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(Errc::InvalidInput, "Angle::turn: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  Angle a;
  a.rational_ = true;
  a.num_ = num / g;
  a.den_ = den / g;
  a.rad_ = kTwoPi * static_cast<double>(a.num_) / static_cast<double>(a.den_);
  return a;
}

Angle Angle::radians(double rad) {
  if (!std::isfinite(rad)) throw Error(Errc::InvalidInput, "Angle::radians: non-finite value");
  Angle a;
  a.rational_ = false;
  a.rad_ = wrap_radians(rad);
  return a;
}

Angle Angle::of(Complex z) {
  if (std::abs(z) == 0) throw Error(Errc::InvalidInput, "Angle::of: zero has no angle");
  return radians(std::arg(z));
}

double Angle::to_radians() const { return rad_; }

double Angle::to_turns() const {
  return rational_ ? static_cast<double>(num_) / static_cast<double>(den_) : rad_ / kTwoPi;
}

Complex Angle::to_complex() const {
  if (rational_) {
    // Exact values on the real and imaginary axes.
    const std::int64_t four = 4 * num_;
    if (four % den_ == 0) {
      switch (four / den_) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        case 3: return {0, -1};
        default: break;
      }
    }
  }
  return std::polar(1.0, rad_);
}

Angle Angle::operator+(const Angle& other) const {
  if (rational_ && other.rational_) {
    const std::int64_t l = std::lcm(den_, other.den_);
    return turn(num_ * (l / den_) + other.num_ * (l / other.den_), l);
  }
  return radians(rad_ + other.rad_);
}

Angle Angle::operator-() const {
  if (rational_) return turn(-num_, den_);
  return radians(-rad_);
}

Angle Angle::times(std::int64_t k) const {
  if (rational_) {
    // k * num may be large; reduce k first.
    const std::int64_t kk = ((k % den_) + den_) % den_;
    return turn(kk * num_, den_);
  }
  return radians(static_cast<double>(k) * rad_);
}

bool Angle::is_real() const {
  if (rational_) return num_ == 0 || 2 * num_ == den_;
  return circle_gap(rad_, 0.0) <= kFloatTol || circle_gap(rad_, std::numbers::pi) <= kFloatTol;
}

int Angle::real_sign() const {
  if (rational_) return num_ == 0 ? 1 : -1;
  return circle_gap(rad_, 0.0) <= circle_gap(rad_, std::numbers::pi) ? 1 : -1;
}

bool Angle::same_point(const Angle& other) const {
  if (rational_ && other.rational_) return num_ == other.num_ && den_ == other.den_;
  return circle_gap(rad_, other.rad_) <= kFloatTol;
}

std::string Angle::to_string() const {
  std::ostringstream os;
  if (rational_) {
    os << num_ << '/' << den_;
  } else {
    os.precision(17);
    os << "rad:" << rad_;
  }
  return os.str();
}

int EigenSpec::dimension() const {
  int d = 0;
  for (const auto& [a, m] : pairs) d += m;
  return d;
}

void EigenSpec::validate() const {
  if (pairs.empty()) throw Error(Errc::InvalidInput, "eigen-spec is empty");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].second <= 0) throw Error(Errc::InvalidInput, "eigen-spec multiplicities must be positive");
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Angle& a = pairs[i].first;
      const Angle& b = pairs[j].first;
      const bool same = (a.is_rational() && b.is_rational())
                            ? a.same_point(b)
                            : circle_gap(a.to_radians(), b.to_radians()) <= 1e-10;
      if (same) throw Error(Errc::InvalidInput, "eigen-spec angles must be distinct");
    }
  }
}

CMatrix EigenSpec::to_matrix() const {
  const int d = dimension();
  CMatrix m = CMatrix::Zero(d, d);
  int k = 0;
  for (const auto& [a, mult] : pairs) {
    const Complex z = a.to_complex();
    for (int t = 0; t < mult; ++t, ++k) m(k, k) = z;
  }
  return m;
}

std::string EigenSpec::to_string() const {
  std::string s;
  for (const auto& [a, m] : pairs) {
    if (!s.empty()) s += ',';
    s += a.to_string() + ':' + std::to_string(m);
  }
  return s;
}

}  // namespace symprod
