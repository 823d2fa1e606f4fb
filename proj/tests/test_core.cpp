#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "grp/errors.hpp"
#include "grp/intmatrix.hpp"
#include "grp/presentation.hpp"
#include "grp/word.hpp"

using namespace grp;

namespace {

Word w(std::initializer_list<int> signed_gens) {
  // 1-based signed generator shorthand: {1, -2} = x y^-1
  std::vector<Letter> ls;
  for (int g : signed_gens)
    ls.push_back({std::abs(g) - 1, g > 0 ? 1 : -1});
  return Word(std::move(ls));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(w({1, -1})).empty());
  CHECK(free_reduce(w({1, 2, -2, -1})).empty());
  CHECK(free_reduce(w({1, 2, -2, 1})) == w({1, 1}));
  CHECK(free_reduce(w({-2, 2, 1})) == w({1}));
  CHECK(is_reduced(w({1, 2, 1})));
  CHECK_FALSE(is_reduced(w({1, -1})));
}

TEST_CASE("word algebra") {
  Word a = w({1, 2});
  CHECK(a.inverse() == w({-2, -1}));
  CHECK(a.pow(2) == w({1, 2, 1, 2}));
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(0).empty());
  CHECK(exponent_sum(w({1, 2, 1, -2, 1}), 0) == 3);
  CHECK(exponent_sum(w({1, 2, 1, -2, 1}), 1) == 0);
  CHECK(w({1}).max_generator() == 0);
  CHECK(Word{}.max_generator() == -1);
}

TEST_CASE("cyclic reduction") {
  auto cr = cyclic_reduce(free_reduce(w({1, 2, 3, -2, -1})));
  CHECK(cr.core == w({3}));
  CHECK(cr.conjugator == w({1, 2}));
  CHECK(cyclic_reduce(w({1, 2})).conjugator.empty());
}

TEST_CASE("proper power detection") {
  auto r = proper_power_root(w({1, 2, 1, 2}));
  REQUIRE(r.has_value());
  CHECK(r->root == w({1, 2}));
  CHECK(r->exponent == 2);
  auto cube = proper_power_root(w({1, 1, 1}));
  REQUIRE(cube.has_value());
  CHECK(cube->exponent == 3);
  CHECK_FALSE(proper_power_root(w({1, 2})).has_value());
  CHECK_FALSE(proper_power_root(w({1, 2, 1, -2})).has_value());
}

TEST_CASE("presentation parsing round trip") {
  Presentation p = parse_presentation("< x, y | x y x = y x y >");
  CHECK(p.generators == std::vector<std::string>{"x", "y"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == w({1, 2, 1, -2, -1, -2}));
  CHECK(to_text(p) == "< x, y | x y x y^-1 x^-1 y^-1 >");
  CHECK(parse_presentation(to_text(p)).relators == p.relators);

  Presentation q = parse_presentation("< a | (a^2)^3 >");
  CHECK(q.relators[0].size() == 6);

  Presentation free2 = parse_presentation("< a, b | >");
  CHECK(free2.relators.empty());

  Presentation trivial_rel = parse_presentation("< a | 1 >");
  REQUIRE(trivial_rel.relators.size() == 1);
  CHECK(trivial_rel.relators[0].empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_presentation("< x | y >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< x | x > junk"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< x, x | >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("x y"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< x | x ? >"), ParseError);
  CHECK_THROWS_AS(parse_word({"x"}, "x x^"), ParseError);
  try {
    parse_presentation("< x | y >");
    FAIL("unreachable");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("word rendering compresses powers") {
  CHECK(word_to_text({"x", "y"}, w({1, 1, 1, -2, -2})) == "x^3 y^-2");
  CHECK(word_to_text({"x"}, Word{}) == "1");
  CHECK(word_to_text({"x", "y"}, w({1, 2})) == "x y");
}

TEST_CASE("wirtinger shape recognition") {
  // braid relator: a rotation reads y^-1 (x y) x (x y)^-1
  CHECK(is_wirtinger(parse_presentation("< x, y | x y x = y x y >")));
  CHECK(is_wirtinger(parse_presentation(
      "< a1, a2, a3 | a2 a3^-1 a1^-1 a3, a3 a1^-1 a2^-1 a1 >")));
  CHECK_FALSE(is_wirtinger(parse_presentation("< x | x^3 >")));
  CHECK_FALSE(is_wirtinger(parse_presentation("< x, y | x^2 y^2 >")));
  CHECK(deficiency(parse_presentation("< x, y | x y >")) == 1);
}

TEST_CASE("exponent matrix and abelianization") {
  Presentation p = parse_presentation("< x, y | x y x = y x y >");
  IntMatrix m = exponent_matrix(p);
  REQUIRE(m.rows() == 1);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == -1);

  AbelianInvariants ab = abelianization(p);
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion.empty());
  CHECK(to_string(ab) == "Z");

  AbelianInvariants z6z4 = abelianization(
      parse_presentation("< a, b | a^6, b^4, a b a^-1 b^-1 >"));
  CHECK(z6z4.free_rank == 0);
  CHECK(z6z4.torsion == std::vector<BigInt>{2, 12});
  CHECK(to_string(z6z4) == "Z/2 + Z/12");

  CHECK(to_string(abelianization(parse_presentation("< x | x >"))) == "0");
}

TEST_CASE("smith normal form on pinned matrices") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 6;
  m.at(1, 1) = 8;
  SmithForm s = smith_normal_form(m);
  CHECK(s.d.at(0, 0) == 2);
  CHECK(s.d.at(1, 1) == 4);
  CHECK(s.u * m * s.v == s.d);

  IntMatrix zero(2, 3);
  SmithForm z = smith_normal_form(zero);
  CHECK(z.d.at(0, 0) == 0);
  CHECK(z.u * zero * z.v == z.d);
}

namespace {

BigInt det(const IntMatrix& m) {
  // Laplace expansion; fine for the sizes used in tests.
  const std::size_t n = m.rows();
  REQUIRE(n == m.cols());
  if (n == 1) return m.at(0, 0);
  BigInt sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor.at(r - 1, kk++) = m.at(r, k);
    BigInt term = m.at(0, c) * det(minor);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    SmithForm s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    BigInt du = det(s.u), dv = det(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (std::size_t i = 0; i + 1 < std::min(r, c); ++i) {
      CHECK(s.d.at(i, i) >= 0);
      if (s.d.at(i, i) != 0) CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
      if (s.d.at(i, i) == 0) CHECK(s.d.at(i + 1, i + 1) == 0);
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
  }
}

TEST_CASE("cokernel invariant factors") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 6;
  m.at(1, 1) = 4;
  AbelianInvariants a = cokernel(m);
  CHECK(a.torsion == std::vector<BigInt>{2, 12});
  CHECK(a.free_rank == 0);
  CHECK(a.order() == 24);

  IntMatrix wide(1, 3);
  wide.at(0, 0) = 2;
  AbelianInvariants b = cokernel(wide);
  CHECK(b.free_rank == 2);
  CHECK(b.torsion == std::vector<BigInt>{2});
  CHECK(b.order() == 0);
}
