#pragma once

// Seeded generators and independent reference computations for the tests.
// Reference spectra come from Eigen's general complex eigensolver, which
// shares no code with the Jacobi routines under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "symprod/numlin.hpp"
#include "symprod/oracle.hpp"

namespace testing {

using symprod::CMatrix;
using symprod::Complex;

inline constexpr double kPi = std::numbers::pi;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double gauss() { return std::normal_distribution<double>()(rng_); }

  CMatrix gaussian(int d) {
    CMatrix m(d, d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) m(r, c) = Complex(gauss(), gauss());
    }
    return m;
  }
  CMatrix hermitian(int d) {
    const CMatrix g = gaussian(d);
    return (g + g.adjoint()) / 2.0;
  }
  CMatrix unitary(int d) { return d == 0 ? CMatrix(0, 0) : symprod::haar_unitary(d, next()); }
  /// Angles uniform in (lo, hi).
  std::vector<double> angles(int d, double lo, double hi) {
    std::vector<double> out(d);
    for (auto& t : out) t = real(lo, hi);
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

inline CMatrix diag_of(const std::vector<Complex>& z) {
  CMatrix m = CMatrix::Zero(static_cast<int>(z.size()), static_cast<int>(z.size()));
  for (std::size_t i = 0; i < z.size(); ++i) m(i, i) = z[i];
  return m;
}

inline CMatrix diag_angles(const std::vector<double>& rad) {
  std::vector<Complex> z;
  for (double t : rad) z.push_back(std::polar(1.0, t));
  return diag_of(z);
}

inline std::vector<Complex> reference_spectrum(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Multisets equal within tol (greedy nearest matching, fine for separated
/// or exactly repeated values).
inline bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const Complex& z : a) {
    auto it = std::min_element(b.begin(), b.end(),
                               [&](const Complex& x, const Complex& y) { return std::abs(x - z) < std::abs(y - z); });
    if (it == b.end() || std::abs(*it - z) > tol) return false;
    b.erase(it);
  }
  return true;
}

inline CMatrix flip() {
  CMatrix f(2, 2);
  f << 0, 1, 1, 0;
  return f;
}

inline double unitarity_defect(const CMatrix& u) {
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm();
}

}  // namespace testing
