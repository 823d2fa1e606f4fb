#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grp/intmatrix.hpp"
#include "grp/presentation.hpp"
#include "grp/word.hpp"

namespace grp {

class CosetTable;

// A finite group as an explicit multiplication table. Element 0 is the
// identity. Construction validates the identity laws and that rows and
// columns are permutations; associativity is guaranteed by every factory in
// this library (tables always come from an action or a direct construction)
// and can be checked explicitly with validate_associativity.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<int32_t>> table,
                                std::vector<int32_t> generators);

  std::size_t order() const { return table_.size(); }
  int32_t mul(int32_t a, int32_t b) const { return table_[a][b]; }
  int32_t inv(int32_t a) const { return inv_[a]; }
  const std::vector<int32_t>& generators() const { return gens_; }

  int32_t power(int32_t a, long e) const;
  int32_t element_order(int32_t a) const;
  // Image of a word over the group's generator list.
  int32_t evaluate(const Word& w) const;

  void validate_associativity() const;  // throws Error; O(n^3)

 private:
  FiniteGroup() = default;
  std::vector<std::vector<int32_t>> table_;
  std::vector<int32_t> inv_;
  std::vector<int32_t> gens_;
};

// g h g^-1 and [g, h] = g h g^-1 h^-1.
int32_t conjugate(const FiniteGroup& g, int32_t x, int32_t y);
int32_t commutator(const FiniteGroup& g, int32_t x, int32_t y);

// Closure of the permutation group generated by perms (maps {0..deg-1} to
// itself; perm[i] is the image of i; composition applies the left factor
// first). Errors on degree mismatch, non-bijections, or closure past 10^6
// elements. An empty generator list yields the trivial group.
FiniteGroup group_from_permutations(
    const std::vector<std::vector<int32_t>>& perms);

// Elements are the cosets of an enumeration over the trivial subgroup.
FiniteGroup group_from_coset_table(const CosetTable& t);

FiniteGroup cyclic_group(int32_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

struct Subgroup {
  const FiniteGroup* parent;
  std::vector<int32_t> elements;  // sorted, contains 0

  std::size_t order() const { return elements.size(); }
  bool contains(int32_t e) const;
  // The subgroup as a group in its own right, elements renumbered in sorted
  // order (works for any subgroup since subgroups contain the identity).
  FiniteGroup as_group() const;
};

Subgroup subgroup_generated(const FiniteGroup& g,
                            const std::vector<int32_t>& elems);
Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
// Subgroup generated by commutators [a, b], a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a,
                             const Subgroup& b);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
bool is_abelian(const FiniteGroup& g);
bool is_central(const FiniteGroup& g, int32_t e);

// Invariant factors of a finite abelian group, extracted from element-order
// counts prime by prime; errors when g is not abelian.
AbelianInvariants abelian_invariants(const FiniteGroup& g);

// Total homomorphism between finite groups, stored as the full element map.
class Hom {
 public:
  // Verifies f(ab) = f(a)f(b) for all a, b.
  Hom(const FiniteGroup* source, const FiniteGroup* target,
      std::vector<int32_t> element_map);

  // Same, but the hom co-owns the target, for targets with no independent
  // owner (the projection built by quotient()). Keeps target() valid across
  // moves of whatever struct carries the hom.
  Hom(const FiniteGroup* source, std::shared_ptr<const FiniteGroup> target,
      std::vector<int32_t> element_map);

  const FiniteGroup& source() const { return *source_; }
  const FiniteGroup& target() const { return *target_; }
  int32_t apply(int32_t e) const { return map_[e]; }

  friend bool operator==(const Hom&, const Hom&);

 private:
  const FiniteGroup* source_;
  const FiniteGroup* target_;
  std::shared_ptr<const FiniteGroup> owned_target_;
  std::vector<int32_t> map_;
};

// Extends generator images to the whole group; errors when the images do not
// define a homomorphism.
Hom hom_from_generator_images(const FiniteGroup& source,
                              const FiniteGroup& target,
                              const std::vector<int32_t>& images);

Subgroup kernel(const Hom& h);
Subgroup image(const Hom& h);

// Homomorphism from a finitely presented group, one image per generator;
// errors naming the first relator that fails to map to the identity.
class PresentationHom {
 public:
  PresentationHom(Presentation source, const FiniteGroup* target,
                  std::vector<int32_t> images);

  const Presentation& source() const { return source_; }
  const FiniteGroup& target() const { return *target_; }
  int32_t apply(const Word& w) const;
  const std::vector<int32_t>& generator_images() const { return images_; }

 private:
  Presentation source_;
  const FiniteGroup* target_;
  std::vector<int32_t> images_;
};

// `projection` co-owns its own copy of the quotient group, so it stays valid
// even when the result is moved or `group` is discarded.
struct QuotientResult {
  FiniteGroup group;
  Hom projection;
};

// G/N with the canonical projection; errors when n is not normal.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

struct Fingerprint {
  BigInt order;
  AbelianInvariants abelianization;
  std::vector<BigInt> derived_series_orders;  // |G|, |G'|, ... until stable
  BigInt center_order;
  std::optional<int> nilpotency_class;  // nullopt: not nilpotent
  BigInt exponent;
  std::map<int64_t, int64_t> order_histogram;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

// One-line rendering, e.g.
// |G|=24 ab=Z/2 + Z/6 derived=[24, 8, 1] |Z|=6 class=2 exp=12 orders={1:1, ...}
std::string to_string(const Fingerprint& f);

}  // namespace grp
