#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grp/enumerator.hpp"
#include "grp/errors.hpp"
#include "grp/finite_group.hpp"
#include "grp/presentation.hpp"
#include "oracles.hpp"

using namespace grp;

TEST_CASE("from_table validates the table") {
  // broken identity row
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 0}, {1, 1}}, {1}), Error);
  // rows must be permutations
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}, {1}), Error);
  FiniteGroup c2 = FiniteGroup::from_table({{0, 1}, {1, 0}}, {1});
  CHECK(c2.order() == 2);
  CHECK(c2.inv(1) == 1);
  c2.validate_associativity();
}

TEST_CASE("hand-built oracles are sound") {
  FiniteGroup q = oracle::q8();
  q.validate_associativity();
  CHECK(q.order() == 8);
  CHECK(q.element_order(2) == 4);   // i
  CHECK(q.element_order(1) == 2);   // -1
  CHECK(q.mul(2, 4) == 6);          // i j = k
  CHECK(q.mul(4, 2) == 7);          // j i = -k
  CHECK(center(q).elements == std::vector<int32_t>{0, 1});
  CHECK(derived_subgroup(q).elements == std::vector<int32_t>{0, 1});
  CHECK_FALSE(is_abelian(q));

  FiniteGroup h = oracle::sl23();
  h.validate_associativity();
  CHECK(h.order() == 24);
  CHECK(center(h).order() == 2);
  CHECK(derived_subgroup(h).order() == 8);

  FiniteGroup s = oracle::s3();
  s.validate_associativity();
  CHECK(s.order() == 6);
  CHECK(center(s).order() == 1);
  CHECK(s.element_order(4) == 3);

  oracle::z3q8().validate_associativity();
  oracle::klein4().validate_associativity();
}

TEST_CASE("fingerprints of the oracles") {
  Fingerprint q = fingerprint(oracle::q8());
  CHECK(q.order == 8);
  CHECK(q.center_order == 2);
  CHECK(q.nilpotency_class == 2);
  CHECK(q.exponent == 4);
  CHECK(q.order_histogram == std::map<int64_t, int64_t>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(to_string(q.abelianization) == "Z/2 + Z/2");

  Fingerprint h = fingerprint(oracle::sl23());
  CHECK(h.order == 24);
  CHECK_FALSE(h.nilpotency_class.has_value());
  CHECK(h.derived_series_orders == std::vector<BigInt>{24, 8, 2, 1});
  CHECK(h.order_histogram ==
        std::map<int64_t, int64_t>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
  CHECK(to_string(h.abelianization) == "Z/3");
  CHECK(h.exponent == 12);

  Fingerprint zq = fingerprint(oracle::z3q8());
  CHECK(zq.order == 24);
  CHECK(zq.nilpotency_class == 2);
  CHECK(zq.order_histogram == std::map<int64_t, int64_t>{{1, 1}, {2, 1}, {3, 2},
                                                         {4, 6}, {6, 2}, {12, 12}});
  CHECK(to_string(zq.abelianization) == "Z/2 + Z/6");
  CHECK(zq.center_order == 6);
}

TEST_CASE("fingerprint is invariant under relabeling") {
  // same group reached through a different construction path
  FiniteGroup perms = group_from_permutations({{1, 0, 2}, {0, 2, 1}});
  CHECK(perms.order() == 6);
  CHECK(fingerprint(perms) == fingerprint(oracle::s3()));

  FiniteGroup v = group_from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}});
  CHECK(fingerprint(v) == fingerprint(oracle::klein4()));
}

TEST_CASE("abelian invariants from element orders") {
  CHECK(abelian_invariants(cyclic_group(12)).torsion == std::vector<BigInt>{12});
  CHECK(abelian_invariants(oracle::klein4()).torsion ==
        std::vector<BigInt>{2, 2});
  FiniteGroup c2c6 = direct_product(cyclic_group(2), cyclic_group(6));
  CHECK(abelian_invariants(c2c6).torsion == std::vector<BigInt>{2, 6});
  FiniteGroup c4c6 = direct_product(cyclic_group(4), cyclic_group(6));
  CHECK(abelian_invariants(c4c6).torsion == std::vector<BigInt>{2, 12});
  CHECK_THROWS_AS(abelian_invariants(oracle::q8()), Error);
}

TEST_CASE("subgroups, quotients, homs") {
  FiniteGroup s = oracle::s3();
  Subgroup a3 = subgroup_generated(s, {4});  // (012)
  CHECK(a3.order() == 3);
  CHECK(is_normal(s, a3));
  Subgroup refl = subgroup_generated(s, {1});
  CHECK(refl.order() == 2);
  CHECK_FALSE(is_normal(s, refl));

  QuotientResult q = quotient(s, a3);
  CHECK(q.group.order() == 2);
  CHECK(kernel(q.projection).elements == a3.elements);
  CHECK(image(q.projection).order() == 2);
  CHECK_THROWS_AS(quotient(s, refl), Error);

  // sign homomorphism by generator images
  FiniteGroup c2 = cyclic_group(2);
  Hom sign = hom_from_generator_images(s, c2, {1, 1});
  CHECK(kernel(sign).order() == 3);
  CHECK_THROWS_AS(hom_from_generator_images(s, c2, {1, 0}), Error);

  FiniteGroup q8 = oracle::q8();
  Subgroup z = center(q8);
  QuotientResult v4 = quotient(q8, z);
  CHECK(fingerprint(v4.group) == fingerprint(oracle::klein4()));
  CHECK(v4.group.order() == 4);
  CHECK(commutator_subgroup(q8, subgroup_generated(q8, {2, 4}),
                            subgroup_generated(q8, {2, 4}))
            .elements == std::vector<int32_t>{0, 1});
}

TEST_CASE("presentation homs check the relators") {
  Presentation tre = parse_presentation(
      "< a1, a2, a3 | a2 a3^-1 a1^-1 a3, a3 a1^-1 a2^-1 a1, a1 a2^-1 a3^-1 a2 >");
  FiniteGroup s = oracle::s3();
  PresentationHom h(tre, &s, {1, 2, 3});  // (01), (02), (12)
  CHECK(h.apply(Word::generator(0)) == 1);
  CHECK(h.apply(Word::generator(0) * Word::generator(1)) ==
        s.mul(1, 2));
  // a3 -> (01) breaks the first relator: conj of (01) by (01) is not (02)
  CHECK_THROWS_AS(PresentationHom(tre, &s, {1, 2, 1}), Error);
}

TEST_CASE("element evaluation agrees with the table") {
  FiniteGroup q = oracle::q8();
  // generators are i, j
  Word wij = Word::generator(0) * Word::generator(1);
  CHECK(q.evaluate(wij) == q.mul(2, 4));
  CHECK(q.evaluate(Word::generator(0).pow(-1)) == q.inv(2));
  CHECK(q.power(2, 5) == 2);
  CHECK(q.power(2, -1) == q.inv(2));
}
