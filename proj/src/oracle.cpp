#include "symprod/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>

namespace symprod {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CMatrix haar_from(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  CMatrix g(d, d);
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) g(r, c) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const Complex rk = rr(k, k);
    if (std::abs(rk) > 0) q.col(k) *= rk / std::abs(rk);
  }
  return q;
}

// Hungarian algorithm on a dense square cost matrix; returns the optimal
// assignment row -> column.
std::vector<int> assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n);
  for (int j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

// Optimal matching against the conjugate spectrum under |.|^power.
double matching_cost(const std::vector<Complex>& lam, int power) {
  const std::size_t n = lam.size();
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double dist = std::abs(lam[i] - std::conj(lam[j]));
      cost[i][j] = power == 2 ? dist * dist : dist;
    }
  }
  const auto match = assignment(cost);
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) total += cost[i][match[i]];
  return total;
}

std::vector<Complex> spectrum_eigen(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

struct Candidate {
  CMatrix j;
  double defect = std::numeric_limits<double>::infinity();
  int plus_rank = 0;
};

int plus_rank_for(int d, int restart, std::mt19937_64& rng) {
  // Balanced choices first; occasionally any rank.
  if (restart % 4 == 3) return std::uniform_int_distribution<int>(0, d)(rng);
  return restart % 2 == 0 ? (d + 1) / 2 : d / 2;
}

Candidate descend(const CMatrix& v, int restart, std::uint64_t seed, const SearchOptions& opt) {
  const int d = static_cast<int>(v.rows());
  std::mt19937_64 rng(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(restart) + 1)));
  Candidate c;
  c.plus_rank = plus_rank_for(d, restart, rng);
  const CMatrix q = haar_from(d, rng);
  CMatrix diag = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) diag(i, i) = i < c.plus_rank ? 1.0 : -1.0;
  CMatrix j = q * diag * q.adjoint();

  auto objective = [&](const CMatrix& jj) { return matching_cost(spectrum_eigen(v * jj), 2); };
  double best = objective(j);
  if (d >= 2) {
    std::uniform_int_distribution<int> pick(0, d - 1);
    std::uniform_real_distribution<double> phase(0, 2 * std::numbers::pi);
    double step = 0.5;
    int stalls = 0;
    const int patience = 4 * d * d;
    for (int it = 0; it < opt.max_steps && step > 1e-12 && best > 1e-26; ++it) {
      int a = pick(rng);
      int b = pick(rng);
      while (b == a) b = pick(rng);
      const Complex w = std::polar(1.0, phase(rng));
      bool improved = false;
      for (double sgn : {1.0, -1.0}) {
        const double t = sgn * step;
        CMatrix r = CMatrix::Identity(d, d);
        r(a, a) = std::cos(t);
        r(b, b) = std::cos(t);
        r(a, b) = -std::sin(t) * std::conj(w);
        r(b, a) = std::sin(t) * w;
        const CMatrix trial = r * j * r.adjoint();
        const double val = objective(trial);
        if (val < best) {
          best = val;
          j = trial;
          improved = true;
          break;
        }
      }
      if (improved) {
        stalls = 0;
      } else if (++stalls >= patience) {
        step /= 2;
        stalls = 0;
      }
    }
  }
  c.j = (j + j.adjoint()) / 2.0;
  c.defect = pairing_defect(spectrum_eigen(v * c.j));
  return c;
}

}  // namespace

CMatrix haar_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw Error(Errc::InvalidInput, "haar_unitary: d must be positive");
  std::mt19937_64 rng(seed);
  return haar_from(d, rng);
}

CMatrix random_symmetry(int d, int plus_rank, std::uint64_t seed) {
  if (d < 1 || plus_rank < 0 || plus_rank > d) throw Error(Errc::InvalidInput, "random_symmetry: bad rank");
  if (plus_rank == d) return CMatrix::Identity(d, d);
  if (plus_rank == 0) return -CMatrix::Identity(d, d);
  const CMatrix q = haar_unitary(d, seed);
  CMatrix diag = CMatrix::Zero(d, d);
  for (int i = 0; i < plus_rank; ++i) diag(i, i) = 1.0;
  for (int i = plus_rank; i < d; ++i) diag(i, i) = -1.0;
  CMatrix j = q * diag * q.adjoint();
  return (j + j.adjoint()) / 2.0;
}

VerificationReport verify_factorization(const CMatrix& target, const std::vector<CMatrix>& factors, double tol) {
  VerificationReport rep;
  const auto d = target.rows();
  CMatrix prod = CMatrix::Identity(d, d);
  bool ok = target.rows() == target.cols();
  for (const auto& f : factors) {
    if (f.rows() != d || f.cols() != d) {
      rep.involution_residuals.push_back(std::numeric_limits<double>::infinity());
      ok = false;
      continue;
    }
    rep.involution_residuals.push_back(symmetry_residual(f));
    prod = prod * f;
  }
  rep.product_residual = ok ? (prod - target).norm() : std::numeric_limits<double>::infinity();
  rep.pass = ok && rep.product_residual <= tol &&
             std::all_of(rep.involution_residuals.begin(), rep.involution_residuals.end(),
                         [&](double r) { return r <= tol; });
  return rep;
}

double pairing_defect(const std::vector<Complex>& eigenvalues) {
  if (eigenvalues.empty()) return 0;
  return matching_cost(eigenvalues, 1);
}

double pairing_defect(const CMatrix& u) { return pairing_defect(spectrum_eigen(u)); }

std::optional<SearchResult> search_sym3(const CMatrix& v, int iters, std::uint64_t seed,
                                        const SearchOptions& options) {
  detail::require_square_finite(v, "search_sym3");
  if (!is_unitary(v, 1e-8)) throw Error(Errc::NotUnitary, "search_sym3: V is not unitary");
  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, threads);

  auto finish = [&](const Candidate& c, int restart) -> std::optional<SearchResult> {
    if (!(c.defect <= options.success_defect)) return std::nullopt;
    const CMatrix z = v * c.j;
    const double loose = std::max(1e-7, 10 * c.defect);
    auto pairing = sym2_pairing(z, 1e-7, loose, loose);
    if (!pairing.ok) return std::nullopt;
    auto [j1, j2] = factor_from_pairing(pairing, false);
    const auto d = v.rows();
    SearchResult res;
    res.factorization = make_factorization(v, {j1, j2, c.j}, CMatrix::Identity(d, d));
    res.restart = restart;
    res.plus_rank = c.plus_rank;
    res.defect = c.defect;
    return res;
  };

  for (int base = 0; base < iters; base += threads) {
    const int batch = std::min(threads, iters - base);
    std::vector<std::optional<SearchResult>> results(batch);
    std::vector<std::thread> pool;
    auto work = [&](int slot) {
      try {
        results[slot] = finish(descend(v, base + slot, seed, options), base + slot);
      } catch (const Error&) {
        results[slot] = std::nullopt;
      }
    };
    if (batch == 1) {
      work(0);
    } else {
      for (int s = 0; s < batch; ++s) pool.emplace_back(work, s);
      for (auto& t : pool) t.join();
    }
    for (auto& r : results) {
      if (r) return r;
    }
  }
  return std::nullopt;
}

}  // namespace symprod
