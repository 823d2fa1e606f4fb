#pragma once

#include <cstdint>
#include <vector>

#include "grp/enumerator.hpp"
#include "grp/finite_group.hpp"

namespace grp {

// Non-abelian tensor square G (x) G: the group generated by symbols g(x)h,
// g, h in G, subject to, for all g, h, k (with ^gh = g h g^-1):
//
//   gh (x) k = (^gh (x) ^gk) (g (x) k)
//   g (x) hk = (g (x) h) (^hg (x) ^hk)
//
// Built definitionally: one presentation generator per ordered pair, both
// relation families instantiated over all of G^3, enumerated over the
// trivial subgroup.
struct TensorSquare {
  FiniteGroup source;
  FiniteGroup carrier;
  std::vector<int32_t> pair_map;  // (g, h) at index g * |source| + h

  int32_t pair(int32_t g, int32_t h) const {
    return pair_map[g * static_cast<int32_t>(source.order()) + h];
  }
};

// Quotient of the tensor square by the diagonal elements g (x) g over all g.
struct ExteriorSquare {
  FiniteGroup source;
  FiniteGroup carrier;
  std::vector<int32_t> pair_map;

  int32_t pair(int32_t g, int32_t h) const {
    return pair_map[g * static_cast<int32_t>(source.order()) + h];
  }
};

// Central extension 1 -> A -> K -> G -> 1.
struct ExtensionData {
  const FiniteGroup* total;       // K
  Subgroup central;               // A, must be central in K
  Hom projection;                 // pi: K -> G, surjective with kernel A

  void validate() const;  // throws Error on any violated invariant
};

// Construction budget: group order cap for the definitional construction
// (the presentation has |G|^2 generators and 2|G|^3 relators) and the
// live-coset budget handed to the enumerator.
inline constexpr std::size_t kTensorOrderBudget = 36;
inline constexpr std::size_t kTensorCosetBudget = 50000;

TensorSquare tensor_square(const FiniteGroup& g,
                           const Limits& limits = Limits{kTensorCosetBudget});
ExteriorSquare exterior_square(
    const FiniteGroup& g, const Limits& limits = Limits{kTensorCosetBudget});

// Central subgroup of the carrier generated by the diagonal values g (x) g.
Subgroup nabla(const TensorSquare& t);

// g (x) h -> [g, h]; the hom points into t, which must stay alive.
Hom commutator_hom(const TensorSquare& t);
Hom commutator_hom(const ExteriorSquare& e);

// Kernel of the commutator map on the exterior square (H_2(G)).
AbelianInvariants schur_multiplier(
    const FiniteGroup& g, const Limits& limits = Limits{kTensorCosetBudget});

// J(G): kernel of the commutator map on the tensor square; central.
Subgroup j_subgroup(const TensorSquare& t);

// xi: G (x) G -> K sending g (x) h to [k_1, k_2] for any lifts k_i of g, h
// through ext.projection. Verified independent of the lifts by re-deriving
// with a second section, and pi o xi is checked to be the commutator map.
// ext.projection's target must carry the same multiplication table as
// t.source.
Hom xi_hom(const ExtensionData& ext, const TensorSquare& t);

// (a (x) g)^n = e for a central of order n: true iff the pair value raised
// to order(a) is the carrier identity. Errors when a is not central.
bool central_torsion_power_check(const TensorSquare& t, int32_t a, int32_t g);

}  // namespace grp
