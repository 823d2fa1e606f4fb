#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grp/finite_group.hpp"

namespace grp {

// Normalized inhomogeneous 2-cocycle f: G x G -> {0,1} encoding a circular
// order: f(id,g) = f(g,id) = 0, f(g,g^-1) = 1 off the identity, and
// f(g,h) + f(gh,k) = f(h,k) + f(g,hk).
struct CocycleTable {
  FiniteGroup group;
  std::vector<uint8_t> f;  // (g, h) at index g * |group| + h

  int value(int32_t g, int32_t h) const {
    return f[g * static_cast<int32_t>(group.order()) + h];
  }
};

// First violated invariant as text, or nullopt when the table is valid.
std::optional<std::string> validate_inhomogeneous(const CocycleTable& t);

// The canonical circular order on Z_n: f(i, j) = 1 iff i + j >= n with
// representatives 0..n-1.
CocycleTable carry_cocycle(int32_t n);

// Homogeneous circular order c: G^3 -> {-1,0,1} with the four conditions:
// values in {-1,0,1}; zero set exactly the repeating triples; the homogeneous
// cocycle identity; left invariance.
struct HomogeneousOrder {
  FiniteGroup group;
  std::vector<int8_t> c;  // (g1,g2,g3) at index (g1 * n + g2) * n + g3

  int value(int32_t g1, int32_t g2, int32_t g3) const {
    const int32_t n = static_cast<int32_t>(group.order());
    return c[(g1 * n + g2) * n + g3];
  }
};

// Builds the linear order "id minimal; a < b iff f(a, a^-1 b) = 0" and takes
// c to be the cyclic-rotation parity of each triple's sorted positions. All
// four homogeneous conditions are then checked exhaustively; any failure
// throws (the correspondence formula, not the axioms, would be at fault).
HomogeneousOrder homogeneous_from_inhomogeneous(const CocycleTable& t);

// Central extension 1 -> Z -> G_f -> G -> 1 with elements (m, g) and
// product (m, g)(m', g') = (m + m' + f(g, g'), gg'). Elements are produced
// on demand; invariants (associativity, centrality of (k, id)) are asserted
// exhaustively on the window |m| <= 3 at construction.
class ExtensionGroup {
 public:
  struct Elem {
    int64_t m;
    int32_t g;
    friend bool operator==(const Elem&, const Elem&) = default;
  };

  explicit ExtensionGroup(CocycleTable f);

  const FiniteGroup& base() const { return f_.group; }
  const CocycleTable& cocycle() const { return f_; }

  Elem identity() const { return {0, 0}; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inverse(const Elem& a) const;
  Elem power(Elem a, long e) const;

 private:
  CocycleTable f_;
};

}  // namespace grp
