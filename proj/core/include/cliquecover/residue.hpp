#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

// The residue class a(n) = { x : x == a (mod n) }. Stored normalized with
// 0 <= a < n. Arbitrary precision throughout: the realization of even small
// graphs produces moduli far beyond 64 bits.
struct ResidueClass {
  mpz_class a;
  mpz_class n;

  ResidueClass(mpz_class a_, mpz_class n_);

  bool operator==(const ResidueClass&) const = default;
  std::string str() const;  // "a(n)"
};

struct CoveringSystem {
  std::vector<ResidueClass> classes;

  int size() const { return static_cast<int>(classes.size()); }
  mpz_class period() const;  // lcm of all moduli; 1 for the empty system
};

// Number of classes containing x.
int covering_function(const CoveringSystem& sys, const mpz_class& x);

// Nonempty intersection test: gcd(n1, n2) | a1 - a2.
bool classes_intersect(const ResidueClass& c1, const ResidueClass& c2);

// The intersection of two residue classes is itself a residue class mod the
// lcm (CRT), or empty.
std::optional<ResidueClass> intersect_classes(const ResidueClass& c1, const ResidueClass& c2);

// Graph on one vertex per class, edges between intersecting pairs.
Graph intersection_graph(const CoveringSystem& sys);

// Text format: one "<a> <n>" pair per line, decimal, '#' comments. The JSON
// form {"classes":[{"a":"...","n":"..."}]} is accepted interchangeably.
CoveringSystem read_system(std::istream& in);
CoveringSystem read_system_file(const std::string& path);
void write_system_text(std::ostream& out, const CoveringSystem& sys);
std::string system_to_text(const CoveringSystem& sys);
std::string system_to_json(const CoveringSystem& sys);

}  // namespace cliquecover
