#pragma once

// Reflection length of a unitary with real determinant, and the necessary
// conditions for membership in Sym_3 that follow from it.

#include <optional>
#include <string>
#include <vector>

#include "symprod/numlin.hpp"

namespace symprod {

enum class ScreenStatus { Pass, Excluded, NotApplicable };

std::string to_string(ScreenStatus s);

struct ScreenResult {
  ScreenStatus status = ScreenStatus::NotApplicable;
  std::string evidence;
  int arc = 0;  // for the arc screen: the arc 1..4 containing the spectrum
};

struct LengthReport {
  int d = 0;
  std::vector<double> angles;  // sorted, in [0, 2pi)
  double kappa = 0;
  double kappa_star = 0;
  Complex det;
  bool det_real = false;
  std::optional<int> length;
  bool screened = false;
  ScreenResult bound;      // length bound d + floor(d/2)
  ScreenResult arc;        // spectrum inside one open quarter arc
  ScreenResult halfplane;  // spectrum in the open lower half-plane: l(W) + l(-W) = 3d
  ScreenResult parity;     // same, even d: det(W) = (-1)^{d/2}

  /// Whether some screen proves W is not a product of three symmetries.
  bool excluded() const;
};

/// Angles, kappa values and reflection length max(kappa, kappa*). Throws
/// DeterminantNotReal unless |det(W) -+ 1| <= 1e-7.
LengthReport reflection_length(const CMatrix& w);

/// Same report, with the Sym_3 screens populated. Never throws on the
/// determinant; screens needing a real determinant report not-applicable.
LengthReport sym3_screen(const CMatrix& w);

/// Report built directly from a list of unit eigenvalues.
LengthReport length_report_from_eigenvalues(const std::vector<Complex>& eigenvalues, bool screens);

}  // namespace symprod
