#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grp/enumerator.hpp"
#include "grp/errors.hpp"
#include "grp/finite_group.hpp"
#include "grp/presentation.hpp"
#include "grp/tensor.hpp"
#include "oracles.hpp"

using namespace grp;

namespace {

FiniteGroup from_pres(const std::string& text) {
  auto res = todd_coxeter(parse_presentation(text), {});
  return group_from_coset_table(require_table(res));
}

}  // namespace

TEST_CASE("tensor square of cyclic groups") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    TensorSquare t = tensor_square(cyclic_group(n));
    CHECK(t.carrier.order() == static_cast<std::size_t>(n));
    CHECK(is_abelian(t.carrier));
    if (n > 1)
      CHECK(abelian_invariants(t.carrier) == oracle::tensor_of_abelian({n}));
    ExteriorSquare e = exterior_square(cyclic_group(n));
    CHECK(e.carrier.order() == 1);
    CHECK(schur_multiplier(cyclic_group(n)).is_trivial());
  }
}

TEST_CASE("tensor square of elementary abelian groups") {
  TensorSquare t22 = tensor_square(oracle::klein4());
  CHECK(t22.carrier.order() == 16);
  CHECK(abelian_invariants(t22.carrier) == oracle::tensor_of_abelian({2, 2}));
  CHECK(abelian_invariants(exterior_square(oracle::klein4()).carrier) ==
        oracle::exterior_of_abelian({2, 2}));

  FiniteGroup z33 = direct_product(cyclic_group(3), cyclic_group(3));
  TensorSquare t33 = tensor_square(z33);
  CHECK(t33.carrier.order() == 81);
  CHECK(abelian_invariants(t33.carrier) == oracle::tensor_of_abelian({3, 3}));
  CHECK(abelian_invariants(exterior_square(z33).carrier) ==
        oracle::exterior_of_abelian({3, 3}));
}

TEST_CASE("tensor square of a mixed abelian group") {
  FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(4));
  TensorSquare t = tensor_square(g);
  CHECK(abelian_invariants(t.carrier) == oracle::tensor_of_abelian({2, 4}));
  CHECK(nabla(t).order() == oracle::nabla_of_abelian({2, 4}).order());
  CHECK(abelian_invariants(exterior_square(g).carrier) ==
        oracle::exterior_of_abelian({2, 4}));
}

TEST_CASE("schur multipliers against the gcd formula") {
  CHECK(schur_multiplier(oracle::klein4()).torsion == std::vector<BigInt>{2});
  FiniteGroup z33 = direct_product(cyclic_group(3), cyclic_group(3));
  CHECK(schur_multiplier(z33).torsion == std::vector<BigInt>{3});
  CHECK(schur_multiplier(oracle::s3()).is_trivial());
  CHECK(schur_multiplier(oracle::q8()).is_trivial());
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      FiniteGroup g = direct_product(cyclic_group(m), cyclic_group(n));
      AbelianInvariants mult = schur_multiplier(g);
      AbelianInvariants want =
          oracle::exterior_of_abelian({m, n});  // Z_gcd(m, n)
      CHECK(mult == want);
    }
}

TEST_CASE("exterior square order identity |GwedgeG| = |M||G'|") {
  auto check_identity = [](const FiniteGroup& g) {
    ExteriorSquare e = exterior_square(g);
    AbelianInvariants m = schur_multiplier(g);
    BigInt derived = derived_subgroup(g).order();
    CHECK(BigInt(e.carrier.order()) == m.order() * derived);
  };
  check_identity(oracle::s3());
  check_identity(oracle::q8());
  check_identity(oracle::klein4());
  check_identity(cyclic_group(6));
}

TEST_CASE("tensor square of SL(2,3)") {
  FiniteGroup h = oracle::sl23();
  TensorSquare t = tensor_square(h);
  CHECK(t.carrier.order() == 24);
  CHECK(fingerprint(t.carrier) == fingerprint(oracle::z3q8()));

  // nabla(G) only depends on G_ab (odd here), TensorBFM
  Subgroup nb = nabla(t);
  CHECK(abelian_invariants(nb.as_group()) == oracle::nabla_of_abelian({3}));

  ExteriorSquare e = exterior_square(h);
  CHECK(e.carrier.order() == 8);
  CHECK(BigInt(t.carrier.order()) ==
        BigInt(nb.order()) * BigInt(e.carrier.order()));
  CHECK(schur_multiplier(h).is_trivial());
}

TEST_CASE("commutator hom and its kernels") {
  FiniteGroup q = oracle::q8();
  TensorSquare t = tensor_square(q);
  Hom kappa = commutator_hom(t);
  CHECK(image(kappa).elements == derived_subgroup(q).elements);
  Subgroup j = j_subgroup(t);
  CHECK(j.order() * derived_subgroup(q).order() == t.carrier.order());
  for (int32_t e : j.elements) CHECK(is_central(t.carrier, e));

  ExteriorSquare ex = exterior_square(q);
  Hom kexp = commutator_hom(ex);
  CHECK(kernel(kexp).order() == schur_multiplier(q).order());
}

TEST_CASE("pair map satisfies the defining relations") {
  FiniteGroup g = oracle::s3();
  TensorSquare t = tensor_square(g);
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // (ab)(x)c = (^a b (x) ^a c)(a (x) c)
        int32_t lhs = t.pair(g.mul(a, b), c);
        int32_t rhs = t.carrier.mul(t.pair(conjugate(g, a, b), conjugate(g, a, c)),
                                    t.pair(a, c));
        CHECK(lhs == rhs);
        // a(x)(bc) = (a (x) b)(^b a (x) ^b c)
        int32_t lhs2 = t.pair(a, g.mul(b, c));
        int32_t rhs2 = t.carrier.mul(t.pair(a, b),
                                     t.pair(conjugate(g, b, a), conjugate(g, b, c)));
        CHECK(lhs2 == rhs2);
      }
}

TEST_CASE("central torsion powers vanish") {
  for (const FiniteGroup& g : {oracle::q8(), oracle::sl23()}) {
    TensorSquare t = tensor_square(g);
    for (int32_t a : center(g).elements)
      for (int32_t x = 0; x < static_cast<int32_t>(g.order()); ++x)
        CHECK(central_torsion_power_check(t, a, x));
  }
  TensorSquare t = tensor_square(oracle::q8());
  CHECK_THROWS_AS(central_torsion_power_check(t, 2, 0), Error);  // i not central
}

TEST_CASE("xi is well-defined on a central extension") {
  FiniteGroup q = oracle::q8();
  Subgroup z = center(q);
  QuotientResult v4 = quotient(q, z);
  TensorSquare t = tensor_square(v4.group);
  ExtensionData ext{&q, z, v4.projection};
  ext.validate();
  Hom xi = xi_hom(ext, t);
  // pi o xi is the commutator map of the base
  const int n = static_cast<int>(v4.group.order());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      CHECK(v4.projection.apply(xi.apply(t.pair(a, b))) ==
            commutator(v4.group, a, b));
  CHECK(image(xi).order() == derived_subgroup(q).order());
}

TEST_CASE("tensor square rejects oversized input") {
  // order 48 exceeds the construction budget
  FiniteGroup big = direct_product(oracle::sl23(), cyclic_group(2));
  CHECK(big.order() == 48);
  CHECK_THROWS_AS(tensor_square(big), Error);
}

TEST_CASE("tensor square through an enumerated presentation") {
  FiniteGroup s3 = from_pres("< s, t | s^2, t^2, (s t)^3 >");
  TensorSquare t = tensor_square(s3);
  ExteriorSquare e = exterior_square(s3);
  CHECK(e.carrier.order() == 3);  // |M(S3)| = 1, |S3'| = 3
  CHECK(BigInt(t.carrier.order()) ==
        BigInt(j_subgroup(t).order()) * BigInt(derived_subgroup(s3).order()));
}
