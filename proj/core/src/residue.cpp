#include "cliquecover/residue.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cliquecover {

ResidueClass::ResidueClass(mpz_class a_, mpz_class n_) : a(std::move(a_)), n(std::move(n_)) {
  if (n <= 0) throw std::invalid_argument("residue class: modulus must be positive");
  mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());  // canonical 0 <= a < n
}

std::string ResidueClass::str() const { return a.get_str() + "(" + n.get_str() + ")"; }

mpz_class CoveringSystem::period() const {
  mpz_class N = 1;
  for (const auto& c : classes) mpz_lcm(N.get_mpz_t(), N.get_mpz_t(), c.n.get_mpz_t());
  return N;
}

int covering_function(const CoveringSystem& sys, const mpz_class& x) {
  int w = 0;
  mpz_class r;
  for (const auto& c : sys.classes) {
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), c.n.get_mpz_t());
    if (r == c.a) ++w;
  }
  return w;
}

bool classes_intersect(const ResidueClass& c1, const ResidueClass& c2) {
  mpz_class g, diff = c1.a - c2.a;
  mpz_gcd(g.get_mpz_t(), c1.n.get_mpz_t(), c2.n.get_mpz_t());
  return mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()) != 0;
}

std::optional<ResidueClass> intersect_classes(const ResidueClass& c1, const ResidueClass& c2) {
  mpz_class g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), c1.n.get_mpz_t(), c2.n.get_mpz_t());
  mpz_class diff = c2.a - c1.a;
  if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
  // x = a1 + n1 * t with t = (diff/g) * u mod (n2/g)
  mpz_class n2g = c2.n / g;
  mpz_class t = (diff / g) * u;
  mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n2g.get_mpz_t());
  mpz_class lcm = c1.n * n2g;
  return ResidueClass(c1.a + c1.n * t, lcm);
}

Graph intersection_graph(const CoveringSystem& sys) {
  const int s = sys.size();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (classes_intersect(sys.classes[i], sys.classes[j])) edges.emplace_back(i, j);
  return Graph(s, std::move(edges));
}

namespace {

CoveringSystem system_from_json(const nlohmann::json& j) {
  CoveringSystem sys;
  for (const auto& c : j.at("classes")) {
    mpz_class a(c.at("a").get<std::string>());
    mpz_class n(c.at("n").get<std::string>());
    sys.classes.emplace_back(std::move(a), std::move(n));
  }
  return sys;
}

}  // namespace

CoveringSystem read_system(std::istream& in) {
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
    in.get();
    c = in.peek();
  }
  if (c == '{') {
    nlohmann::json j;
    in >> j;
    return system_from_json(j);
  }
  CoveringSystem sys;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string a_str, n_str;
    if (!(ls >> a_str)) continue;
    if (!(ls >> n_str))
      throw std::invalid_argument("system text: expected '<a> <n>' per line, got: " + line);
    sys.classes.emplace_back(mpz_class(a_str), mpz_class(n_str));
  }
  return sys;
}

CoveringSystem read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open system file: " + path);
  return read_system(in);
}

void write_system_text(std::ostream& out, const CoveringSystem& sys) {
  for (const auto& c : sys.classes) out << c.a.get_str() << " " << c.n.get_str() << "\n";
}

std::string system_to_text(const CoveringSystem& sys) {
  std::ostringstream ss;
  write_system_text(ss, sys);
  return ss.str();
}

std::string system_to_json(const CoveringSystem& sys) {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : sys.classes) arr.push_back({{"a", c.a.get_str()}, {"n", c.n.get_str()}});
  j["classes"] = std::move(arr);
  return j.dump();
}

}  // namespace cliquecover
