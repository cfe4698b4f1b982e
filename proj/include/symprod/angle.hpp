#pragma once

// Points of the unit circle stored as angles: exact rational turns, or
// floating radians when no rational form is available.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symprod/numlin.hpp"

namespace symprod {

class Angle {
 public:
  static constexpr double kFloatTol = 1e-12;

  Angle() = default;
  /// num/den of a full turn, reduced into [0, 1).
  static Angle turn(std::int64_t num, std::int64_t den);
  /// Radians, reduced into [0, 2pi).
  static Angle radians(double rad);
  /// Nearest angle of a nonzero complex number (float mode).
  static Angle of(Complex z);

  bool is_rational() const { return rational_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_radians() const;
  double to_turns() const;
  Complex to_complex() const;

  Angle operator+(const Angle& other) const;
  /// Complex conjugate of the point.
  Angle operator-() const;
  Angle operator-(const Angle& other) const { return *this + (-other); }
  /// z^k.
  Angle times(std::int64_t k) const;
  /// -z.
  Angle negated_point() const { return *this + turn(1, 2); }

  /// z in {-1, 1}; exact for rational turns, within kFloatTol otherwise.
  bool is_real() const;
  /// +1 or -1; only meaningful when is_real().
  int real_sign() const;
  /// z == w, exact or within kFloatTol on the circle.
  bool same_point(const Angle& other) const;

  /// "num/den" or "rad:<value>".
  std::string to_string() const;

 private:
  bool rational_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double rad_ = 0;
};

/// Unit-circle eigenvalues with multiplicities.
struct EigenSpec {
  std::vector<std::pair<Angle, int>> pairs;

  int dimension() const;
  /// Throws InvalidInput on non-positive multiplicities or repeated angles.
  void validate() const;
  /// diag(alpha_1 I_{mu_1}, alpha_2 I_{mu_2}, ...).
  CMatrix to_matrix() const;
  std::string to_string() const;
};

}  // namespace symprod
