#include "grp/tensor.hpp"

#include <algorithm>
#include <string>

#include "grp/errors.hpp"

namespace grp {

namespace {

// Pair generator index for g (x) h.
inline int32_t pg(int32_t n, int32_t g, int32_t h) { return g * n + h; }

Presentation tensor_presentation(const FiniteGroup& src, bool exterior) {
  const int32_t n = static_cast<int32_t>(src.order());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) * n);
  for (int32_t g = 0; g < n; ++g)
    for (int32_t h = 0; h < n; ++h)
      names.push_back("t" + std::to_string(g) + "_" + std::to_string(h));
  std::vector<Word> rels;
  rels.reserve(2 * static_cast<std::size_t>(n) * n * n + (exterior ? n : 0));
  for (int32_t g = 0; g < n; ++g)
    for (int32_t h = 0; h < n; ++h)
      for (int32_t k = 0; k < n; ++k) {
        // gh (x) k = (^gh (x) ^gk)(g (x) k)
        Word r1({Letter{pg(n, src.mul(g, h), k), -1},
                 Letter{pg(n, conjugate(src, g, h), conjugate(src, g, k)), 1},
                 Letter{pg(n, g, k), 1}});
        rels.push_back(free_reduce(r1));
        // g (x) hk = (g (x) h)(^hg (x) ^hk)
        Word r2({Letter{pg(n, g, src.mul(h, k)), -1},
                 Letter{pg(n, g, h), 1},
                 Letter{pg(n, conjugate(src, h, g), conjugate(src, h, k)), 1}});
        rels.push_back(free_reduce(r2));
      }
  if (exterior)
    for (int32_t g = 0; g < n; ++g)
      rels.push_back(Word({Letter{pg(n, g, g), 1}}));
  return Presentation(std::move(names), std::move(rels));
}

struct Built {
  FiniteGroup carrier;
  std::vector<int32_t> pair_map;
};

Built build(const FiniteGroup& src, bool exterior, const Limits& limits) {
  if (src.order() > kTensorOrderBudget)
    throw Error("group order exceeds the tensor construction budget of " +
                std::to_string(kTensorOrderBudget));
  Presentation p = tensor_presentation(src, exterior);
  EnumerationResult res = todd_coxeter(p, {}, limits);
  const CosetTable& t = require_table(res);
  FiniteGroup carrier = group_from_coset_table(t);
  std::vector<int32_t> pair_map(carrier.generators().begin(),
                                carrier.generators().end());
  return Built{std::move(carrier), std::move(pair_map)};
}

// Both defining relation families, rechecked on the finished table.
template <typename Square>
void verify_relations(const Square& s) {
  const FiniteGroup& g = s.source;
  const FiniteGroup& c = s.carrier;
  const int32_t n = static_cast<int32_t>(g.order());
  for (int32_t x = 0; x < n; ++x)
    for (int32_t y = 0; y < n; ++y)
      for (int32_t z = 0; z < n; ++z) {
        int32_t lhs1 = s.pair(g.mul(x, y), z);
        int32_t rhs1 = c.mul(s.pair(conjugate(g, x, y), conjugate(g, x, z)),
                             s.pair(x, z));
        if (lhs1 != rhs1) throw Error("tensor relation family 1 violated");
        int32_t lhs2 = s.pair(x, g.mul(y, z));
        int32_t rhs2 = c.mul(s.pair(x, y),
                             s.pair(conjugate(g, y, x), conjugate(g, y, z)));
        if (lhs2 != rhs2) throw Error("tensor relation family 2 violated");
      }
}

Hom pair_value_hom(const FiniteGroup& carrier, const FiniteGroup& source,
                   const std::vector<int32_t>& pair_map) {
  const int32_t n = static_cast<int32_t>(source.order());
  std::vector<int32_t> images(pair_map.size());
  for (int32_t g = 0; g < n; ++g)
    for (int32_t h = 0; h < n; ++h)
      images[pg(n, g, h)] = commutator(source, g, h);
  return hom_from_generator_images(carrier, source, images);
}

}  // namespace

TensorSquare tensor_square(const FiniteGroup& g, const Limits& limits) {
  Built b = build(g, false, limits);
  TensorSquare t{g, std::move(b.carrier), std::move(b.pair_map)};
  verify_relations(t);
  return t;
}

ExteriorSquare exterior_square(const FiniteGroup& g, const Limits& limits) {
  Built b = build(g, true, limits);
  ExteriorSquare e{g, std::move(b.carrier), std::move(b.pair_map)};
  verify_relations(e);
  const int32_t n = static_cast<int32_t>(g.order());
  for (int32_t x = 0; x < n; ++x)
    if (e.pair(x, x) != 0) throw Error("diagonal element survives in G ^ G");
  return e;
}

Subgroup nabla(const TensorSquare& t) {
  const int32_t n = static_cast<int32_t>(t.source.order());
  std::vector<int32_t> diag;
  for (int32_t g = 0; g < n; ++g) diag.push_back(t.pair(g, g));
  Subgroup s = subgroup_generated(t.carrier, diag);
  for (int32_t e : s.elements)
    if (!is_central(t.carrier, e))
      throw Error("nabla subgroup is not central");
  return s;
}

Hom commutator_hom(const TensorSquare& t) {
  return pair_value_hom(t.carrier, t.source, t.pair_map);
}

Hom commutator_hom(const ExteriorSquare& e) {
  return pair_value_hom(e.carrier, e.source, e.pair_map);
}

AbelianInvariants schur_multiplier(const FiniteGroup& g, const Limits& limits) {
  ExteriorSquare e = exterior_square(g, limits);
  Hom kappa = commutator_hom(e);
  Subgroup ker = kernel(kappa);
  FiniteGroup k = ker.as_group();
  return abelian_invariants(k);
}

Subgroup j_subgroup(const TensorSquare& t) {
  Hom kappa = commutator_hom(t);
  Subgroup ker = kernel(kappa);
  for (int32_t e : ker.elements)
    if (!is_central(t.carrier, e))
      throw Error("J(G) is not central in the tensor square");
  return ker;
}

void ExtensionData::validate() const {
  if (central.parent != total)
    throw Error("central subgroup belongs to a different group");
  for (int32_t e : central.elements)
    if (!is_central(*total, e))
      throw Error("subgroup A is not central in K");
  if (&projection.source() != total)
    throw Error("projection source is not K");
  Subgroup ker = kernel(projection);
  if (ker.elements != central.elements)
    throw Error("projection kernel differs from A");
  if (image(projection).order() != projection.target().order())
    throw Error("projection is not surjective");
}

Hom xi_hom(const ExtensionData& ext, const TensorSquare& t) {
  ext.validate();
  const FiniteGroup& target = ext.projection.target();
  const int32_t n = static_cast<int32_t>(t.source.order());
  if (target.order() != t.source.order())
    throw Error("extension quotient is incompatible with the tensor source");
  for (int32_t a = 0; a < n; ++a)
    for (int32_t b = 0; b < n; ++b)
      if (target.mul(a, b) != t.source.mul(a, b))
        throw Error("extension quotient is incompatible with the tensor source");

  const FiniteGroup& k = *ext.total;
  auto section = [&](bool last) {
    std::vector<int32_t> lift(n, -1);
    for (int32_t e = 0; e < static_cast<int32_t>(k.order()); ++e) {
      int32_t img = ext.projection.apply(e);
      if (lift[img] == -1 || last) lift[img] = e;
    }
    return lift;
  };
  auto images_for = [&](const std::vector<int32_t>& lift) {
    std::vector<int32_t> images(static_cast<std::size_t>(n) * n);
    for (int32_t a = 0; a < n; ++a)
      for (int32_t b = 0; b < n; ++b)
        images[pg(n, a, b)] = commutator(k, lift[a], lift[b]);
    return images;
  };
  Hom xi1 = hom_from_generator_images(t.carrier, k, images_for(section(false)));
  Hom xi2 = hom_from_generator_images(t.carrier, k, images_for(section(true)));
  if (!(xi1 == xi2)) throw Error("xi depends on the choice of lifts");
  Hom kappa = commutator_hom(t);
  for (int32_t e = 0; e < static_cast<int32_t>(t.carrier.order()); ++e)
    if (ext.projection.apply(xi1.apply(e)) != kappa.apply(e))
      throw Error("pi composed with xi is not the commutator map");
  return xi1;
}

bool central_torsion_power_check(const TensorSquare& t, int32_t a, int32_t g) {
  if (!is_central(t.source, a))
    throw Error("element is not central in the source group");
  int32_t order = t.source.element_order(a);
  return t.carrier.power(t.pair(a, g), order) == 0;
}

}  // namespace grp
