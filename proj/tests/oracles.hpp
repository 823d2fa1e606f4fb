#pragma once

// Hand-built reference groups and closed-form abelian formulas used as
// independent oracles. Nothing here goes through presentations or coset
// enumeration; tables are written out from the textbook definitions.

#include <numeric>
#include <vector>

#include "grp/finite_group.hpp"
#include "grp/intmatrix.hpp"

namespace oracle {

// Q8 = {1, -1, i, -i, j, -j, k, -k}, element = axis * 2 + (sign < 0).
inline grp::FiniteGroup q8() {
  static const int axis_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int32_t>> table(8, std::vector<int32_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = axis_mul[a / 2][b / 2];
      int s = sgn[a / 2][b / 2];
      if (a % 2) s = -s;
      if (b % 2) s = -s;
      table[a][b] = ax * 2 + (s < 0);
    }
  return grp::FiniteGroup::from_table(std::move(table), {2, 4});  // i, j
}

// SL(2,3) as 2x2 matrices over F_3 of determinant 1, identity first,
// the rest in lexicographic order of (a, b, c, d).
inline grp::FiniteGroup sl23() {
  struct M {
    int a, b, c, d;
  };
  std::vector<M> mats{{1, 0, 0, 1}};
  std::vector<int> index(81, -1);
  auto code = [](const M& m) { return ((m.a * 3 + m.b) * 3 + m.c) * 3 + m.d; };
  index[code(mats[0])] = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          M m{a, b, c, d};
          if ((a * d - b * c) % 3 != 1 && (a * d - b * c) % 3 != -2) continue;
          if (index[code(m)] >= 0) continue;
          index[code(m)] = static_cast<int>(mats.size());
          mats.push_back(m);
        }
  auto mul = [](const M& x, const M& y) {
    auto r = [](int v) { return ((v % 3) + 3) % 3; };
    return M{r(x.a * y.a + x.b * y.c), r(x.a * y.b + x.b * y.d),
             r(x.c * y.a + x.d * y.c), r(x.c * y.b + x.d * y.d)};
  };
  const int n = static_cast<int>(mats.size());
  std::vector<std::vector<int32_t>> table(n, std::vector<int32_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index[code(mul(mats[i], mats[j]))];
  return grp::FiniteGroup::from_table(
      std::move(table),
      {index[code(M{1, 1, 0, 1})], index[code(M{1, 0, 1, 1})]});
}

// S3 on {0,1,2}: e, (01), (02), (12), (012), (021); the product applies the
// left factor first, matching the library's permutation convention.
inline grp::FiniteGroup s3() {
  static const int perm[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                 {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto find = [](const int img[3]) {
    for (int p = 0; p < 6; ++p)
      if (perm[p][0] == img[0] && perm[p][1] == img[1] && perm[p][2] == img[2])
        return p;
    return -1;
  };
  std::vector<std::vector<int32_t>> table(6, std::vector<int32_t>(6));
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      int img[3];
      for (int x = 0; x < 3; ++x) img[x] = perm[q][perm[p][x]];
      table[p][q] = find(img);
    }
  return grp::FiniteGroup::from_table(std::move(table), {1, 3});
}

inline grp::FiniteGroup klein4() {
  std::vector<std::vector<int32_t>> table(4, std::vector<int32_t>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a][b] = a ^ b;
  return grp::FiniteGroup::from_table(std::move(table), {1, 2});
}

// Z_3 x Q8 with pairs (c, q) at index c * 8 + q; built on the q8 table
// above, not on the library's direct_product.
inline grp::FiniteGroup z3q8() {
  grp::FiniteGroup q = q8();
  std::vector<std::vector<int32_t>> table(24, std::vector<int32_t>(24));
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b)
      table[a][b] = (a / 8 + b / 8) % 3 * 8 + q.mul(a % 8, b % 8);
  return grp::FiniteGroup::from_table(std::move(table), {8, 2, 4});
}

// Invariant factors of (+) Z_gcd(d_i, d_j) over the given index pairs; the
// classical formulas for the tensor square, exterior square and nabla of
// Z_{d_1} x ... x Z_{d_k}. Finite groups only (all d_i >= 1).
enum class PairRange { All, Below, BelowOrEqual };

inline grp::AbelianInvariants gcd_formula(const std::vector<long>& d,
                                          PairRange range) {
  std::vector<long> factors;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      bool keep = range == PairRange::All ||
                  (range == PairRange::Below ? i < j : i <= j);
      if (keep) factors.push_back(std::gcd(d[i], d[j]));
    }
  grp::IntMatrix m(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i)
    m.at(i, i) = factors[i];
  return grp::cokernel(m);
}

inline grp::AbelianInvariants tensor_of_abelian(const std::vector<long>& d) {
  return gcd_formula(d, PairRange::All);
}

inline grp::AbelianInvariants exterior_of_abelian(const std::vector<long>& d) {
  return gcd_formula(d, PairRange::Below);
}

inline grp::AbelianInvariants nabla_of_abelian(const std::vector<long>& d) {
  return gcd_formula(d, PairRange::BelowOrEqual);
}

}  // namespace oracle
