#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "symprod/io.hpp"
#include "symprod/oracle.hpp"
#include "symprod/orbits.hpp"
#include "symprod/reflen.hpp"
#include "symprod/symfactor.hpp"

namespace symprod::cli {

namespace {

struct Input {
  std::optional<EigenSpec> spec;
  CMatrix matrix;
};

struct Options {
  std::string kind;
  std::string matrix_path;
  std::string spec_text;
  std::string out_path;
  std::string only_case;
  bool screen_only = false;
  bool fail_on_no = false;
  std::uint64_t seed = kDefaultSeed;
  int search_iters = 200;
  // survey
  int d = 0;
  int grid = 0;
  int threads = 0;
  // orbit
  std::string normal_spec;
  std::string unitary_path;
  int k = 1;
};

Input load(const Options& o) {
  if (o.matrix_path.empty() == o.spec_text.empty()) {
    throw Error(Errc::InvalidInput, "give exactly one of --matrix or --spec");
  }
  Input in;
  if (!o.spec_text.empty()) {
    in.spec = parse_eigen_spec(o.spec_text);
    in.matrix = in.spec->to_matrix();
  } else {
    in.matrix = read_matrix_file(o.matrix_path);
  }
  return in;
}

std::vector<Complex> spectrum(const Input& in) {
  if (in.spec) {
    std::vector<Complex> out;
    for (const auto& [a, m] : in.spec->pairs) out.insert(out.end(), m, a.to_complex());
    return out;
  }
  const auto e = unitary_eig(in.matrix);
  return {e.eigenvalues.data(), e.eigenvalues.data() + e.eigenvalues.size()};
}

std::optional<Sym3Case> parse_case(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto c = sym3_case_from_string(s);
  if (!c) throw Error(Errc::InvalidInput, "unknown case '" + s + "'");
  return c;
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json screen_json(const ScreenResult& s) {
  Json j{{"status", to_string(s.status)}, {"evidence", s.evidence}};
  if (s.arc) j["arc"] = s.arc;
  return j;
}

Json screens_json(const LengthReport& rep) {
  return Json{{"bound", screen_json(rep.bound)},
              {"arc", screen_json(rep.arc)},
              {"halfplane", screen_json(rep.halfplane)},
              {"parity", screen_json(rep.parity)}};
}

std::vector<std::string> excluded_screens(const LengthReport& rep) {
  std::vector<std::string> names;
  const std::pair<const char*, const ScreenResult*> all[] = {
      {"bound", &rep.bound}, {"arc", &rep.arc}, {"halfplane", &rep.halfplane}, {"parity", &rep.parity}};
  for (const auto& [name, s] : all) {
    if (s->status == ScreenStatus::Excluded) names.push_back(std::string(name) + ": " + s->evidence);
  }
  return names;
}

Json length_json(const LengthReport& rep) {
  Json j{{"d", rep.d},
         {"angles", rep.angles},
         {"kappa", rep.kappa},
         {"kappa_star", rep.kappa_star},
         {"det", complex_to_json(rep.det)},
         {"det_real", rep.det_real},
         {"length", rep.length ? Json(*rep.length) : Json(nullptr)}};
  if (rep.screened) j["screens"] = screens_json(rep);
  return j;
}

Json condition_json(const ConditionPReport& c) {
  Json j{{"holds", c.holds}, {"power_real", c.power_real}};
  if (c.power_real) j["power_value"] = c.power_value;
  if (c.violation) j["violation"] = Json{{"i", c.violation->i}, {"j", c.violation->j}, {"value", c.violation->value}};
  return j;
}

Json decision_json(const Sym3Decision& d) {
  Json j{{"verdict", d.verdict},
         {"case", to_string(d.kind)},
         {"boundary", d.boundary},
         {"swapped", d.swapped},
         {"alpha", d.alpha.to_string()},
         {"beta", d.beta.to_string()},
         {"r", d.r},
         {"s", d.s},
         {"margins", d.margins},
         {"min_margin", number_or_null(d.min_margin())},
         {"condition_p", condition_json(d.condition)}};
  if (!d.reason.empty()) j["reason"] = d.reason;
  if (d.d0 > 0) j["d0"] = d.d0;
  if (!d.m.empty()) j["m"] = d.m;
  if (d.theta) j["theta"] = d.theta->to_string();
  return j;
}

Json factorization_json(const SymmetryFactorization& f) {
  Json factors = Json::array();
  for (const auto& m : f.factors) factors.push_back(matrix_to_json(m));
  return Json{{"factors", std::move(factors)},
              {"conjugator", matrix_to_json(f.conjugator)},
              {"permutation", f.permutation},
              {"target", matrix_to_json(f.target)},
              {"involution_residuals", f.involution_residuals},
              {"product_residual", f.product_residual}};
}

/// The input as alpha I_r (+) beta I_s in some orthonormal frame.
struct TwoEigenvalues {
  Angle alpha;
  Angle beta;
  int r = 0;
  int s = 0;
  CMatrix frame;  // frame* U frame = diag(alpha I_r, beta I_s); empty for spec input
};

std::optional<TwoEigenvalues> two_eigenvalue_form(const Input& in) {
  if (in.spec) {
    if (in.spec->pairs.size() != 2) return std::nullopt;
    const auto& p = in.spec->pairs;
    return TwoEigenvalues{p[0].first, p[1].first, p[0].second, p[1].second, CMatrix()};
  }
  if (!is_unitary(in.matrix, kDefaultTol)) throw Error(Errc::NotUnitary, "input matrix is not unitary");
  const auto cl = cluster_eigenvalues(in.matrix);
  if (cl.values.size() != 2) return std::nullopt;
  return TwoEigenvalues{Angle::of(cl.values[0]), Angle::of(cl.values[1]), cl.sizes[0], cl.sizes[1], cl.basis};
}

/// Moves a factorisation of the diagonal form back onto the input matrix.
SymmetryFactorization lift(const SymmetryFactorization& f, const CMatrix& frame, const CMatrix& u) {
  const CMatrix w = frame * f.conjugator.adjoint();
  std::vector<CMatrix> factors;
  for (const auto& k : f.factors) {
    CMatrix g = w * k * w.adjoint();
    factors.push_back((g + g.adjoint()) / 2.0);
  }
  return make_factorization(u, std::move(factors), CMatrix::Identity(u.rows(), u.cols()));
}

/// alpha I_r (+) beta I_s is conjugation-closed, hence a product of two symmetries.
bool conjugation_closed(const Angle& a, const Angle& b, int r, int s) {
  return (a.is_real() && b.is_real()) || (r == s && b.same_point(-a));
}

bool is_negative(const std::string& verdict) { return verdict == "no" || verdict == "excluded"; }

// ---------------------------------------------------------------- check

struct CheckResult {
  Json body = Json::object();
  std::string verdict;
};

CheckResult check_sym3(const Options& o, const Input& in) {
  CheckResult res;
  Json& j = res.body;
  const auto eigs = spectrum(in);
  const auto scr = length_report_from_eigenvalues(eigs, true);
  j["screens"] = screens_json(scr);
  j["det"] = complex_to_json(scr.det);
  std::vector<std::string> reasons = excluded_screens(scr);
  std::string verdict;
  std::string kind = "none";
  Json margins = Json::array();

  if (o.screen_only) {
    verdict = reasons.empty() ? "unknown" : "excluded";
  } else if (!scr.det_real) {
    verdict = "no";
    reasons.insert(reasons.begin(), "determinant not real");
  } else {
    const auto two = two_eigenvalue_form(in);
    if (!two) {
      if (scr.d == 2) {
        verdict = "yes";
        kind = to_string(Sym3Case::Dim2);
      } else {
        throw Error(Errc::InvalidInput, "sym3 check needs exactly two distinct eigenvalues (or --screen-only)");
      }
    } else {
      try {
        const auto dec = sym3_two_eig_decide(two->alpha, two->beta, two->r, two->s, parse_case(o.only_case));
        verdict = dec.verdict ? "yes" : "no";
        kind = to_string(dec.kind);
        margins = dec.margins;
        if (!dec.reason.empty()) reasons.insert(reasons.begin(), dec.reason);
        j["decision"] = decision_json(dec);
      } catch (const Error& e) {
        if (e.code() != Errc::ConditionPViolated) throw;
        if (conjugation_closed(two->alpha, two->beta, two->r, two->s)) {
          verdict = "yes";
          reasons.insert(reasons.begin(), "spectrum closed under conjugation: already in Sym_2");
        } else {
          verdict = scr.excluded() ? "excluded" : "unknown";
          reasons.insert(reasons.begin(), e.what());
        }
        j["condition_p"] = condition_json(condition_p(two->alpha, two->beta, std::max(two->r, two->s),
                                                      std::min(two->r, two->s)));
      }
    }
  }
  j["verdict"] = verdict;
  j["case"] = kind;
  j["margins"] = margins;
  j["reasons"] = reasons;
  res.verdict = verdict;
  return res;
}

CheckResult check(const Options& o, const Input& in) {
  if (o.kind == "sym3") return check_sym3(o, in);
  CheckResult res;
  std::vector<std::string> reasons;
  bool yes = false;
  if (o.kind == "sym1") {
    if (in.spec) {
      yes = std::all_of(in.spec->pairs.begin(), in.spec->pairs.end(), [](const auto& p) { return p.first.is_real(); });
      if (!yes) reasons.push_back("eigenvalue outside {-1, 1}");
    } else {
      const double resid = symmetry_residual(in.matrix);
      yes = resid <= 1e-8;
      res.body["symmetry_residual"] = resid;
      if (!yes) reasons.push_back("not self-adjoint involutive");
    }
  } else if (o.kind == "sym2") {
    const auto c = sym2_check(in.matrix);
    yes = c.ok;
    if (!yes) reasons.push_back("non-real eigenvalues do not pair with their conjugates");
  } else if (o.kind == "sym4") {
    const Complex det = determinant(in.matrix);
    if (!is_unitary(in.matrix, kDefaultTol)) throw Error(Errc::NotUnitary, "input matrix is not unitary");
    yes = std::abs(det - 1.0) <= 1e-7 || std::abs(det + 1.0) <= 1e-7;
    res.body["det"] = complex_to_json(det);
    if (!yes) reasons.push_back("determinant not real");
  } else {
    throw Error(Errc::InvalidInput, "unknown kind '" + o.kind + "'");
  }
  res.verdict = yes ? "yes" : "no";
  res.body["verdict"] = res.verdict;
  res.body["case"] = "none";
  res.body["margins"] = Json::array();
  res.body["reasons"] = reasons;
  return res;
}

// ---------------------------------------------------------------- factor

struct FactorResult {
  std::optional<SymmetryFactorization> fac;
  std::string verdict;
  std::vector<std::string> reasons;
  Json extra = Json::object();
};

FactorResult factor_sym3(const Options& o, const Input& in) {
  FactorResult res;
  const CMatrix& u = in.matrix;
  if (!is_unitary(u, kDefaultTol)) throw Error(Errc::NotUnitary, "input matrix is not unitary");
  const Complex det = determinant(u);
  if (std::abs(det - 1.0) > 1e-7 && std::abs(det + 1.0) > 1e-7) {
    res.verdict = "no";
    res.reasons.push_back("determinant not real");
    return res;
  }
  const auto two = two_eigenvalue_form(in);
  if (!two) {
    if (u.rows() != 2) throw Error(Errc::InvalidInput, "sym3 factor needs exactly two distinct eigenvalues");
    // Scalar 2x2 with real determinant: +-I or +-iI.
    if (is_symmetry(u, 1e-8)) {
      const CMatrix id = CMatrix::Identity(2, 2);
      res.fac = make_factorization(u, {u, id, id}, id);
    } else {
      auto found = search_sym3(u, o.search_iters, o.seed);
      if (!found) throw Error(Errc::NoConvergence, "search found no witness");
      res.fac = found->factorization;
    }
    res.verdict = "yes";
    return res;
  }
  Sym3Decision dec;
  try {
    dec = sym3_two_eig_decide(two->alpha, two->beta, two->r, two->s, parse_case(o.only_case));
  } catch (const Error& e) {
    if (e.code() != Errc::ConditionPViolated) throw;
    if (!conjugation_closed(two->alpha, two->beta, two->r, two->s)) {
      res.verdict = "unknown";
      res.reasons.push_back(e.what());
      return res;
    }
    auto [j1, j2] = sym2_factor(u);
    const CMatrix id = CMatrix::Identity(u.rows(), u.cols());
    res.fac = make_factorization(u, {j1, j2, id}, id);
    res.verdict = "yes";
    res.reasons.push_back("spectrum closed under conjugation: already in Sym_2");
    return res;
  }
  res.extra["decision"] = decision_json(dec);
  if (!dec.verdict) {
    res.verdict = "no";
    res.reasons.push_back(dec.reason);
    return res;
  }
  auto fac = sym3_two_eig_factor(dec, two->alpha, two->beta, two->r, two->s);
  res.fac = in.spec ? fac : lift(fac, two->frame, u);
  res.verdict = "yes";
  return res;
}

FactorResult factor(const Options& o, const Input& in) {
  if (o.kind == "sym3") return factor_sym3(o, in);
  FactorResult res;
  const CMatrix& u = in.matrix;
  const CMatrix id = CMatrix::Identity(u.rows(), u.cols());
  if (o.kind == "sym1") {
    if (is_symmetry(u, 1e-8)) res.fac = make_factorization(u, {u}, id);
    else res.reasons.push_back("not a symmetry");
  } else if (o.kind == "sym2") {
    if (sym2_check(u).ok) {
      auto [j1, j2] = sym2_factor(u);
      res.fac = make_factorization(u, {j1, j2}, id);
    } else {
      res.reasons.push_back("non-real eigenvalues do not pair with their conjugates");
    }
  } else if (o.kind == "sym4") {
    try {
      res.fac = sym4_factor(u);
    } catch (const Error& e) {
      if (e.code() != Errc::DeterminantNotReal) throw;
      res.reasons.push_back("determinant not real");
    }
  } else {
    throw Error(Errc::InvalidInput, "unknown kind '" + o.kind + "'");
  }
  res.verdict = res.fac ? "yes" : "no";
  return res;
}

void verify_or_throw(const SymmetryFactorization& f) {
  const double worst = f.involution_residuals.empty()
                           ? 0
                           : *std::max_element(f.involution_residuals.begin(), f.involution_residuals.end());
  if (!(f.product_residual <= 1e-7) || !(worst <= 1e-8)) {
    throw Error(Errc::ResidualTooLarge, "factorization failed re-verification");
  }
}

// ---------------------------------------------------------------- survey

std::string fmt17(double x) {
  if (!std::isfinite(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string survey_row(int ka, int kb, int r, int s, int n) {
  const Angle a = Angle::turn(ka, n);
  const Angle b = Angle::turn(kb, n);
  std::string cp = "false";
  std::string verdict = "unknown";
  std::string kind = "none";
  std::string margin = "nan";
  try {
    const auto dec = sym3_two_eig_decide(a, b, r, s);
    cp = dec.condition.holds ? "true" : "false";
    verdict = dec.verdict ? "yes" : "no";
    kind = to_string(dec.kind);
    if (!dec.margins.empty()) margin = fmt17(dec.min_margin());
  } catch (const Error& e) {
    if (e.code() != Errc::ConditionPViolated) throw;
    if (!(a.times(r) + b.times(s)).is_real()) verdict = "no";
    else if (conjugation_closed(a, b, r, s)) verdict = "yes";
  }
  std::ostringstream os;
  os << ka << '/' << n << ',' << kb << '/' << n << ',' << r << ',' << s << ',' << cp << ',' << verdict << ','
     << kind << ',' << margin << '\n';
  return os.str();
}

std::string survey(int d, int n, int threads) {
  if (d < 2 || d > 12) throw Error(Errc::InvalidInput, "survey: --d must be in [2, 12]");
  if (n < 1 || n > 720) throw Error(Errc::InvalidInput, "survey: --grid must be in [1, 720]");
  std::vector<std::string> rows(n);
  auto fill = [&](int ka) {
    std::string text;
    for (int kb = 0; kb < n; ++kb) {
      if (kb == ka) continue;
      for (int r = (d + 1) / 2; r <= d - 1; ++r) text += survey_row(ka, kb, r, d - r, n);
    }
    rows[ka] = std::move(text);
  };
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int ka = w; ka < n; ka += workers) fill(ka);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  std::string csv = "alpha_turn,beta_turn,r,s,condition_p,verdict,case,min_margin\n";
  for (const auto& r : rows) csv += r;
  return csv;
}

// ---------------------------------------------------------------- orbit

int orbit(const Options& o, std::ostream& out) {
  if (o.normal_spec.empty() || o.unitary_path.empty()) {
    throw Error(Errc::InvalidInput, "orbit needs --normal and --unitary");
  }
  const CMatrix n = parse_eigen_spec(o.normal_spec).to_matrix();
  const CMatrix u = read_matrix_file(o.unitary_path);
  Json j{{"command", "orbit"}, {"k", o.k}};
  OrbitDecomposition dec;
  try {
    if (o.k == 1) dec = sym1_orbit_decompose(u, n, o.seed);
    else if (o.k == 2) dec = sym2_orbit_decompose_upto4(u, n, o.seed);
    else throw Error(Errc::InvalidInput, "--k must be 1 or 2");
  } catch (const Error& e) {
    if (e.code() != Errc::WrongEigenvalueCount && e.code() != Errc::TooManyEigenvalues) throw;
    j["verdict"] = e.code() == Errc::WrongEigenvalueCount ? "no" : "unknown";
    j["reason"] = to_string(e.code());
    j["message"] = e.what();
    out << j.dump(2) << '\n';
    return kDecidedNo;
  }
  j["verdict"] = "yes";
  j["G"] = matrix_to_json(dec.commutant_factor);
  if (o.k == 1) {
    j["J"] = matrix_to_json(dec.symmetry_factor);
  } else {
    j["J1"] = matrix_to_json(dec.symmetry_parts[0]);
    j["J2"] = matrix_to_json(dec.symmetry_parts[1]);
  }
  std::vector<double> parts;
  for (const auto& p : dec.symmetry_parts) parts.push_back(symmetry_residual(p));
  j["block_sizes"] = dec.block_sizes;
  j["residual"] = dec.residual;
  j["off_block_mass"] = dec.off_block_mass;
  j["symmetry_residuals"] = parts;
  if (!o.out_path.empty()) write_json_file(o.out_path, j);
  out << j.dump(2) << '\n';
  return kOk;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--matrix", o.matrix_path, "matrix JSON file");
  cmd->add_option("--spec", o.spec_text, "eigen-spec, e.g. 1/20:5,11/20:5");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Products of symmetries: deciders, factorizations, reflection length"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> kinds{"sym1", "sym2", "sym3", "sym4"};

  auto* check_cmd = app.add_subcommand("check", "decide membership in Sym_k");
  check_cmd->add_option("kind", o.kind)->required()->check(CLI::IsMember(kinds));
  add_input(check_cmd, o);
  check_cmd->add_flag("--screen-only", o.screen_only, "sym3: reflection-length screens only");
  check_cmd->add_flag("--fail-on-no", o.fail_on_no, "exit 3 on a no or excluded verdict");
  check_cmd->add_option("--case", o.only_case, "sym3: restrict the even equal-rank tests to one case");

  auto* factor_cmd = app.add_subcommand("factor", "write a factorization into symmetries");
  factor_cmd->add_option("kind", o.kind)->required()->check(CLI::IsMember(kinds));
  add_input(factor_cmd, o);
  factor_cmd->add_option("--out", o.out_path, "output JSON file");
  factor_cmd->add_option("--case", o.only_case, "sym3: restrict the even equal-rank tests to one case");
  factor_cmd->add_option("--seed", o.seed, "seed for randomized fallbacks");

  auto* length_cmd = app.add_subcommand("length", "reflection length and Sym_3 screens");
  add_input(length_cmd, o);

  auto* survey_cmd = app.add_subcommand("survey", "Sym_3 verdicts over a rational grid of two-eigenvalue spectra");
  survey_cmd->add_option("--d", o.d, "dimension")->required();
  survey_cmd->add_option("--grid", o.grid, "grid size n (angles k/n turns)")->required();
  survey_cmd->add_option("--out", o.out_path, "output CSV file");
  survey_cmd->add_option("--threads", o.threads, "worker threads, 0 for all cores");

  auto* orbit_cmd = app.add_subcommand("orbit", "decompose U = G S with G commuting with N");
  orbit_cmd->add_option("--normal", o.normal_spec, "eigen-spec of N")->required();
  orbit_cmd->add_option("--unitary", o.unitary_path, "matrix JSON file of U")->required();
  orbit_cmd->add_option("--k", o.k, "1 or 2")->check(CLI::IsMember({1, 2}));
  orbit_cmd->add_option("--out", o.out_path, "output JSON file");
  orbit_cmd->add_option("--seed", o.seed, "perturbation seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kError;
  }

  try {
    if (check_cmd->parsed()) {
      const auto in = load(o);
      auto res = check(o, in);
      Json j{{"command", "check"}, {"kind", o.kind}};
      j.update(res.body);
      out << j.dump(2) << '\n';
      return o.fail_on_no && is_negative(res.verdict) ? kFailOnNo : kOk;
    }
    if (factor_cmd->parsed()) {
      const auto in = load(o);
      auto res = factor(o, in);
      Json j{{"command", "factor"}, {"kind", o.kind}, {"verdict", res.verdict}, {"reasons", res.reasons}};
      j.update(res.extra);
      if (!res.fac) {
        out << j.dump(2) << '\n';
        return kDecidedNo;
      }
      verify_or_throw(*res.fac);
      j.update(factorization_json(*res.fac));
      if (!o.out_path.empty()) {
        write_json_file(o.out_path, j);
        Json summary{{"command", "factor"},
                     {"kind", o.kind},
                     {"verdict", res.verdict},
                     {"out", o.out_path},
                     {"factor_count", res.fac->factors.size()},
                     {"involution_residuals", res.fac->involution_residuals},
                     {"product_residual", res.fac->product_residual}};
        out << summary.dump(2) << '\n';
      } else {
        out << j.dump(2) << '\n';
      }
      return kOk;
    }
    if (length_cmd->parsed()) {
      const auto in = load(o);
      if (!in.spec && !is_unitary(in.matrix, kDefaultTol)) {
        throw Error(Errc::NotUnitary, "input matrix is not unitary");
      }
      const auto rep = length_report_from_eigenvalues(spectrum(in), true);
      if (!rep.det_real) throw Error(Errc::DeterminantNotReal, "det(W) is not +-1");
      Json j{{"command", "length"}};
      j.update(length_json(rep));
      out << j.dump(2) << '\n';
      return kOk;
    }
    if (survey_cmd->parsed()) {
      const std::string csv = survey(o.d, o.grid, o.threads);
      if (o.out_path.empty()) {
        out << csv;
      } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw Error(Errc::InvalidInput, "cannot write " + o.out_path);
        f << csv;
      }
      return kOk;
    }
    if (orbit_cmd->parsed()) return orbit(o, out);
  } catch (const Error& e) {
    err << Json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace symprod::cli
