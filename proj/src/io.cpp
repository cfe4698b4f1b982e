#include "symprod/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace symprod {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidInput, what); }

std::int64_t parse_int(const std::string& s, const std::string& ctx) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) bad("bad integer '" + s + "' in " + ctx);
  return v;
}

double parse_double(const std::string& s, const std::string& ctx) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    bad("bad number '" + s + "' in " + ctx);
  }
  if (used != s.size() || !std::isfinite(v)) bad("bad number '" + s + "' in " + ctx);
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("entries")) bad("matrix JSON needs \"d\" and \"entries\"");
  if (!j["d"].is_number_integer()) bad("matrix JSON: \"d\" must be an integer");
  const auto d = j["d"].get<long long>();
  if (d < 1 || d > 4096) bad("matrix JSON: \"d\" out of range");
  const auto& e = j["entries"];
  if (!e.is_array() || static_cast<long long>(e.size()) != d * d) bad("matrix JSON: expected d*d entries");
  CMatrix m(d, d);
  for (long long k = 0; k < d * d; ++k) {
    const auto& z = e[k];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      bad("matrix JSON: entry " + std::to_string(k) + " is not [re, im]");
    }
    m(k / d, k % d) = Complex(z[0].get<double>(), z[1].get<double>());
  }
  if (!m.allFinite()) bad("matrix JSON: non-finite entry");
  return m;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const CMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
  }
  return Json{{"d", m.rows()}, {"entries", std::move(entries)}};
}

CMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    bad(path + ": " + ex.what());
  }
  return matrix_from_json(j);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path);
  out << j.dump(2) << '\n';
}

Angle parse_angle(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.rfind("rad:", 0) == 0) return Angle::radians(parse_double(text.substr(4), text));
  const auto slash = text.find('/');
  if (slash == std::string::npos) bad("angle '" + text + "' is neither num/den nor rad:<x>");
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den <= 0) bad("angle '" + text + "': denominator must be positive");
  return Angle::turn(num, den);
}

EigenSpec parse_eigen_spec(const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "i-pair") return parse_eigen_spec("1/4:1,3/4:1");
  if (text.empty()) bad("empty eigen-spec");
  EigenSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const auto colon = item.rfind(':');
    std::string angle = item;
    int mult = 1;
    // "rad:x" alone has its only colon right after "rad".
    if (colon != std::string::npos && !(item.rfind("rad:", 0) == 0 && colon == 3)) {
      angle = item.substr(0, colon);
      const auto m = parse_int(item.substr(colon + 1), item);
      if (m < 1 || m > 100000) bad("multiplicity out of range in '" + item + "'");
      mult = static_cast<int>(m);
    }
    spec.pairs.emplace_back(parse_angle(angle), mult);
  }
  spec.validate();
  return spec;
}

}  // namespace symprod
