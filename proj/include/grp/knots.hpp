#pragma once

#include <map>
#include <string>
#include <vector>

#include "grp/presentation.hpp"

namespace grp {

// One pass of the diagram traversal through a classical crossing.
struct Pass {
  int crossing = 0;
  bool over = false;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Pass&, const Pass&) = default;
};

// Cyclic sequence of signed over/under passes. Virtual crossings impose no
// relations and break no arcs, so they are simply not recorded. Each
// crossing id occurs exactly twice, once over and once under, and both
// passes carry the same sign.
struct GaussCode {
  std::vector<Pass> passes;

  std::size_t crossing_count() const { return passes.size() / 2; }
};

// Tokens `O<id><sign>` / `U<id><sign>` separated by whitespace or commas,
// e.g. "O1+ U2+ O3+ U1+ O2+ U3+".
GaussCode parse_gauss_code(const std::string& text);

// One generator per arc (maximal run between consecutive under-passes in
// cyclic order), one relator per crossing. With over-arc b, incoming
// under-arc a and outgoing under-arc c, the relation is c = b a b^{-1} at a
// positive crossing and c = b^{-1} a b at a negative one. Arc k (generator
// "a<k+1>") is the run ending at the k-th under-pass of the code.
Presentation wirtinger_presentation(const GaussCode& code);

struct MaedaGroup {
  Presentation metacyclic;  // < x, a | a^m, x^-1 a x a^-n >
  Presentation wirtinger;   // the two-relator form in x and y = x a^-1
  long q = 0;               // q (n-1) = 1 (mod m), 0 <= q < m
};

// The group with abelianization Z and derived subgroup Z_m, in both its
// metacyclic and its Wirtinger presentation:
//   y = (y^-1 x)^-q x (y^-1 x)^q,  x = (y^-1 x)^-m x (y^-1 x)^m.
// Requires gcd(m, n) = 1 and gcd(n-1, m) = 1.
MaedaGroup maeda_group(long m, long n);

// Normal form x^k a^j, 0 <= j < m.
struct MetacyclicNF {
  long k = 0;
  long j = 0;

  friend bool operator==(const MetacyclicNF&, const MetacyclicNF&) = default;
};

// Normal form of a word over {x, a} (generator indices 0 and 1) modulo
// a^m = 1 and a x = x a^l. Requires gcd(l, m) = 1 so that x can be pushed
// past a in both directions.
MetacyclicNF metacyclic_normal_form(const Word& w, long m, long l);

// x^{k1} a^{j1} * x^{k2} a^{j2} by the semidirect rule a^j x^k = x^k a^{j l^k}.
MetacyclicNF nf_multiply(const MetacyclicNF& lhs, const MetacyclicNF& rhs,
                         long m, long l);

// Bundled table ids in presentation order: Z, G1..G9.
const std::vector<std::string>& green_ids();

// The packaged presentations, keyed by id. The embedded copy of
// green_groups.txt is checksum-verified once, on first use.
const std::map<std::string, Presentation>& green_table();

// Same table read from an external copy of green_groups.txt. Throws Error
// when the checksum header does not match the file contents.
std::map<std::string, Presentation> green_table_from_file(
    const std::string& path);

}  // namespace grp
