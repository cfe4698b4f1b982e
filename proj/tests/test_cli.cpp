#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "../tools/cli.hpp"
#include "support.hpp"
#include "symprod/io.hpp"

using namespace symprod;
using testing::kPi;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("symprod_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string matrix(const std::string& name, const CMatrix& m) const {
    write_json_file(file(name), matrix_to_json(m));
    return file(name);
  }

 private:
  std::filesystem::path path_;
};

CMatrix example_w() {
  const double e = 1.0 / 100;
  std::vector<double> t{17 * kPi / 12, 17 * kPi / 12 + e, 17 * kPi / 12 - e, 15 * kPi / 8, 15 * kPi / 8};
  std::vector<double> tt = t;
  tt.insert(tt.end(), t.begin(), t.end());
  return testing::diag_angles(tt);
}

CMatrix product_of(const Json& factors) {
  CMatrix p = matrix_from_json(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) p = p * matrix_from_json(factors[i]);
  return p;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int numerator(const std::string& turn) { return std::stoi(turn.substr(0, turn.find('/'))); }

}  // namespace

TEST_CASE("check sym3 on the odd worked example") {
  const auto r = run({"check", "sym3", "--spec", "58/360:3,183/360:2"});
  REQUIRE(r.code == cli::kOk);
  const Json j = r.json();
  CHECK(j["verdict"] == "yes");
  CHECK(j["case"] == "odd");
  CHECK(j["margins"].size() >= 1);
  CHECK(j["screens"]["parity"]["status"] == "not-applicable");
}

TEST_CASE("check sym3 --screen-only excludes W = V (+) V") {
  TempDir dir;
  const auto w = dir.matrix("wV.json", example_w());
  const auto r = run({"check", "sym3", "--matrix", w, "--screen-only"});
  REQUIRE(r.code == cli::kOk);
  const Json j = r.json();
  CHECK(j["verdict"] == "excluded");
  CHECK(j["screens"]["parity"]["status"] == "excluded");
  CHECK(j["screens"]["halfplane"]["status"] == "excluded");
  CHECK(run({"check", "sym3", "--matrix", w, "--screen-only", "--fail-on-no"}).code == cli::kFailOnNo);
}

TEST_CASE("check sym1, sym2 and sym4") {
  TempDir dir;
  const auto flip = dir.matrix("flip.json", testing::flip());
  CHECK(run({"check", "sym1", "--matrix", flip}).json()["verdict"] == "yes");
  CHECK(run({"check", "sym1", "--spec", "1/4:1,3/4:1"}).json()["verdict"] == "no");
  CHECK(run({"check", "sym2", "--spec", "i-pair"}).json()["verdict"] == "yes");
  const auto no = run({"check", "sym2", "--spec", "1/4:2", "--fail-on-no"});
  CHECK(no.code == cli::kFailOnNo);
  CHECK(no.json()["verdict"] == "no");
  CHECK(run({"check", "sym4", "--spec", "1/3:1,2/3:1,1/2:1"}).json()["verdict"] == "yes");
  CHECK(run({"check", "sym4", "--spec", "1/3:1"}).json()["verdict"] == "no");
}

TEST_CASE("check sym3 decides the remaining cases without a matrix factorization") {
  CHECK(run({"check", "sym3", "--spec", "1/4:1,1/2:1"}).json()["verdict"] == "no");
  const auto d2 = run({"check", "sym3", "--spec", "1/3:1,2/3:1"}).json();
  CHECK(d2["verdict"] == "yes");
  CHECK(d2["case"] == "dim2");
  const auto closed = run({"check", "sym3", "--spec", "1/8:2,7/8:2"}).json();
  CHECK(closed["verdict"] == "yes");
  const auto forced = run({"check", "sym3", "--spec", "1/20:5,11/20:5", "--case", "even-equal-iii"}).json();
  CHECK(forced["verdict"] == "no");
  CHECK(run({"check", "sym3", "--spec", "1/20:5,11/20:5"}).json()["verdict"] == "yes");
}

TEST_CASE("check on ill-formed input exits 2 with a JSON error") {
  TempDir dir;
  const auto r = run({"check", "sym3", "--spec", "1/0:1"});
  CHECK(r.code == cli::kError);
  CHECK(Json::parse(r.err)["error"] == "InvalidInput");
  CHECK(run({"check", "sym3"}).code == cli::kError);
  CHECK(run({"check", "sym7", "--spec", "1/2:1"}).code == cli::kError);
  CHECK(run({"check", "sym1", "--matrix", dir.file("missing.json")}).code == cli::kError);
  const auto notu = dir.matrix("notu.json", CMatrix(2.0 * CMatrix::Identity(3, 3)));
  CHECK(run({"check", "sym3", "--matrix", notu}).code == cli::kError);
  CHECK(run({"check", "sym3", "--spec", "1/5:1,2/5:1,3/5:1,4/5:1"}).code == cli::kError);
  CHECK(run({"bogus"}).code == cli::kError);
}

TEST_CASE("factor sym3 on the equal-rank example") {
  TempDir dir;
  const auto out = dir.file("factors.json");
  const auto r = run({"factor", "sym3", "--spec", "1/20:5,11/20:5", "--out", out});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.json()["factor_count"] == 3);
  std::ifstream f(out);
  const Json j = Json::parse(f);
  REQUIRE(j["factors"].size() == 3);
  const CMatrix target = matrix_from_json(j["target"]);
  const CMatrix c = matrix_from_json(j["conjugator"]);
  CHECK((c.adjoint() * product_of(j["factors"]) * c - target).norm() <= 1e-7);
  for (const auto& m : j["factors"]) CHECK(symmetry_residual(matrix_from_json(m)) <= 1e-8);
  const CMatrix diag = parse_eigen_spec("1/20:5,11/20:5").to_matrix();
  const CVector want = diag.diagonal();
  CHECK(testing::same_multiset(testing::reference_spectrum(target), {want.data(), want.data() + want.size()}, 1e-9));
}

TEST_CASE("factor sym3 on a matrix lifts the factors back to the input") {
  TempDir dir;
  const CMatrix q = haar_unitary(5, 17);
  const CMatrix v = q * parse_eigen_spec("58/360:3,183/360:2").to_matrix() * q.adjoint();
  const auto r = run({"factor", "sym3", "--matrix", dir.matrix("v.json", v)});
  REQUIRE(r.code == cli::kOk);
  const Json j = r.json();
  REQUIRE(j["factors"].size() == 3);
  CHECK((product_of(j["factors"]) - v).norm() <= 1e-7);
}

TEST_CASE("factor sym4 and sym2") {
  TempDir dir;
  CMatrix h = haar_unitary(7, 5);
  h *= std::pow(h.determinant(), -1.0 / 7);
  const auto r = run({"factor", "sym4", "--matrix", dir.matrix("haar7.json", h)});
  REQUIRE(r.code == cli::kOk);
  const Json j = r.json();
  REQUIRE(j["factors"].size() == 4);
  CHECK((product_of(j["factors"]) - h).norm() <= 1e-7);
  CHECK(verify_factorization(h, {matrix_from_json(j["factors"][0]), matrix_from_json(j["factors"][1]),
                                 matrix_from_json(j["factors"][2]), matrix_from_json(j["factors"][3])},
                             1e-7)
            .pass);

  const auto s = run({"factor", "sym2", "--spec", "i-pair"});
  REQUIRE(s.code == cli::kOk);
  const Json k = s.json();
  REQUIRE(k["factors"].size() == 2);
  CHECK((product_of(k["factors"]) - testing::diag_of({Complex(0, 1), Complex(0, -1)})).norm() <= 1e-10);
}

TEST_CASE("factor exits 4 when the decider says no") {
  const auto r = run({"factor", "sym3", "--spec", "1/20:5,11/20:5", "--case", "even-equal-iii"});
  CHECK(r.code == cli::kDecidedNo);
  CHECK(r.json()["verdict"] == "no");
  CHECK(run({"factor", "sym2", "--spec", "1/4:2"}).code == cli::kDecidedNo);
  CHECK(run({"factor", "sym3", "--spec", "1/4:1,1/2:1"}).code == cli::kDecidedNo);
  CHECK(run({"factor", "sym4", "--spec", "1/3:1"}).code == cli::kDecidedNo);
}

TEST_CASE("length examples") {
  TempDir dir;
  const auto refl = run({"length", "--spec", "1/2:1,0/1:2"});
  REQUIRE(refl.code == cli::kOk);
  CHECK(refl.json()["length"] == 1);
  CHECK(run({"length", "--spec", "0/1:4"}).json()["length"] == 0);
  const double e = 1.0 / 100;
  const CMatrix v = testing::diag_angles({17 * kPi / 12, 17 * kPi / 12 + e, 17 * kPi / 12 - e, 15 * kPi / 8, 15 * kPi / 8});
  const auto r = run({"length", "--matrix", dir.matrix("v.json", v)});
  REQUIRE(r.code == cli::kOk);
  const Json j = r.json();
  CHECK(j["length"] == 8);
  CHECK(j["kappa"].get<double>() == doctest::Approx(8).epsilon(1e-10));
  CHECK(j["kappa_star"].get<double>() == doctest::Approx(2).epsilon(1e-10));
  CHECK(run({"length", "--spec", "1/4:1,0/1:1"}).code == cli::kError);
}

TEST_CASE("survey rows for d = 5 contain the odd worked example") {
  const auto r = run({"survey", "--d", "5", "--grid", "360"});
  REQUIRE(r.code == cli::kOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 1 + 360 * 359 * 2);
  CHECK(r.out.substr(0, r.out.find('\n')) == "alpha_turn,beta_turn,r,s,condition_p,verdict,case,min_margin");
  bool found = false;
  for (const auto& row : rows) {
    if (row[0] == "58/360" && row[1] == "183/360" && row[2] == "3") {
      found = true;
      CHECK(row[4] == "true");
      CHECK(row[5] == "yes");
      CHECK(row[6] == "odd");
    }
  }
  CHECK(found);
}

TEST_CASE("survey is deterministic and thread-count independent") {
  const auto a = run({"survey", "--d", "6", "--grid", "30", "--threads", "1"});
  const auto b = run({"survey", "--d", "6", "--grid", "30", "--threads", "3"});
  const auto c = run({"survey", "--d", "6", "--grid", "30", "--threads", "3"});
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  TempDir dir;
  REQUIRE(run({"survey", "--d", "6", "--grid", "30", "--out", dir.file("s.csv")}).code == cli::kOk);
  std::ifstream f(dir.file("s.csv"), std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(text == a.out);
}

TEST_CASE("survey d = 2 rows are yes exactly when alpha beta is real") {
  const int n = 40;
  const auto r = run({"survey", "--d", "2", "--grid", std::to_string(n)});
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 1 + n * (n - 1));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int sum = numerator(rows[i][0]) + numerator(rows[i][1]);
    CHECK((rows[i][5] == "yes") == (2 * sum % n == 0));
    CHECK(rows[i][6] == "dim2");
  }
}

TEST_CASE("survey d = 4 equal-rank rows need (alpha beta)^2 = -1") {
  const int n = 48;
  const auto rows = csv_rows(run({"survey", "--d", "4", "--grid", std::to_string(n)}).out);
  int checked = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][2] != "2") continue;
    const int ka = numerator(rows[i][0]);
    const int kb = numerator(rows[i][1]);
    if ((2 * (ka + kb)) % n == n / 2) continue;  // (alpha beta)^2 = -1
    ++checked;
    CHECK(rows[i][4] == "false");
    const bool both_real = ka % (n / 2) == 0 && kb % (n / 2) == 0;
    const bool conjugate_pair = (ka + kb) % n == 0 || both_real;
    if (conjugate_pair) CHECK(rows[i][5] == "yes");
    else CHECK(rows[i][5] != "yes");
    if ((2 * (ka + kb)) % (n / 2) != 0) CHECK(rows[i][5] == "no");
  }
  CHECK(checked > 0);
}

TEST_CASE("survey rejects out-of-range flags") {
  CHECK(run({"survey", "--d", "13", "--grid", "10"}).code == cli::kError);
  CHECK(run({"survey", "--d", "4", "--grid", "721"}).code == cli::kError);
  CHECK(run({"survey", "--d", "1", "--grid", "10"}).code == cli::kError);
}

TEST_CASE("orbit decompositions through the CLI") {
  TempDir dir;
  const CMatrix u = haar_unitary(5, 23);
  const auto path = dir.matrix("u.json", u);
  const auto one = run({"orbit", "--normal", "0/1:2,1/3:3", "--unitary", path, "--k", "1", "--out", dir.file("o.json")});
  REQUIRE(one.code == cli::kOk);
  const Json j = one.json();
  CHECK(j["verdict"] == "yes");
  const CMatrix g = matrix_from_json(j["G"]);
  const CMatrix jm = matrix_from_json(j["J"]);
  CHECK((g * jm - u).norm() <= 1e-6);
  CHECK(j["off_block_mass"].get<double>() <= 1e-10);
  std::ifstream f(dir.file("o.json"));
  CHECK(Json::parse(f) == j);

  const auto two = run({"orbit", "--normal", "0/1:1,1/4:2,1/2:1,3/4:1", "--unitary", path, "--k", "2"});
  REQUIRE(two.code == cli::kOk);
  const Json k = two.json();
  CHECK((matrix_from_json(k["G"]) * matrix_from_json(k["J1"]) * matrix_from_json(k["J2"]) - u).norm() <= 1e-6);

  const auto many = run({"orbit", "--normal", "0/1:1,1/5:1,2/5:1,3/5:1,4/5:1", "--unitary", path, "--k", "2"});
  CHECK(many.code == cli::kDecidedNo);
  CHECK(many.json()["reason"] == "TooManyEigenvalues");
  const auto three = run({"orbit", "--normal", "0/1:1,1/5:2,2/5:2", "--unitary", path, "--k", "1"});
  CHECK(three.code == cli::kDecidedNo);
  CHECK(three.json()["reason"] == "WrongEigenvalueCount");
  CHECK(run({"orbit", "--normal", "0/1:1,1/5:2", "--unitary", path, "--k", "1"}).code == cli::kError);
}

TEST_CASE("emitted JSON round-trips byte for byte") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", "sym3", "--spec", "58/360:3,183/360:2"},
        std::vector<std::string>{"factor", "sym3", "--spec", "1/16:5,9/16:3"},
        std::vector<std::string>{"length", "--spec", "5/8:4,3/4:2"}}) {
    const auto r = run(args);
    REQUIRE(r.code == cli::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(Json::parse(j.dump()).dump(2) + "\n" == r.out);
  }
}
