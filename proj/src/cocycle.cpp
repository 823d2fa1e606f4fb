#include "grp/cocycle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grp/errors.hpp"

namespace grp {

std::optional<std::string> validate_inhomogeneous(const CocycleTable& t) {
  const int32_t n = static_cast<int32_t>(t.group.order());
  if (t.f.size() != static_cast<std::size_t>(n) * n)
    return "table size does not match the group order";
  for (int32_t g = 0; g < n; ++g)
    for (int32_t h = 0; h < n; ++h)
      if (t.value(g, h) != 0 && t.value(g, h) != 1) {
        std::ostringstream os;
        os << "f(" << g << "," << h << ") is not in {0,1}";
        return os.str();
      }
  for (int32_t g = 0; g < n; ++g) {
    if (t.value(0, g) != 0 || t.value(g, 0) != 0) {
      std::ostringstream os;
      os << "normalization fails at g = " << g;
      return os.str();
    }
  }
  for (int32_t g = 1; g < n; ++g)
    if (t.value(g, t.group.inv(g)) != 1) {
      std::ostringstream os;
      os << "f(g, g^-1) = 0 at g = " << g;
      return os.str();
    }
  for (int32_t g = 0; g < n; ++g)
    for (int32_t h = 0; h < n; ++h)
      for (int32_t k = 0; k < n; ++k) {
        int lhs = t.value(g, h) + t.value(t.group.mul(g, h), k);
        int rhs = t.value(h, k) + t.value(g, t.group.mul(h, k));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "cocycle identity fails at (" << g << "," << h << "," << k
             << ")";
          return os.str();
        }
      }
  return std::nullopt;
}

CocycleTable carry_cocycle(int32_t n) {
  if (n < 1) throw Error("carry cocycle needs n >= 1");
  CocycleTable t{cyclic_group(n), std::vector<uint8_t>(
                                      static_cast<std::size_t>(n) * n, 0)};
  for (int32_t i = 0; i < n; ++i)
    for (int32_t j = 0; j < n; ++j)
      t.f[i * n + j] = (i + j >= n) ? 1 : 0;
  return t;
}

HomogeneousOrder homogeneous_from_inhomogeneous(const CocycleTable& t) {
  if (auto bad = validate_inhomogeneous(t))
    throw Error("invalid cocycle: " + *bad);
  const FiniteGroup& g = t.group;
  const int32_t n = static_cast<int32_t>(g.order());

  // a < b iff f(a, a^-1 b) = 0, with the identity minimal.
  auto precedes = [&](int32_t a, int32_t b) {
    if (a == 0) return true;
    if (b == 0) return false;
    return t.value(a, g.mul(g.inv(a), b)) == 0;
  };
  std::vector<int32_t> rank(n, 0);
  for (int32_t a = 0; a < n; ++a)
    for (int32_t b = 0; b < n; ++b)
      if (a != b && precedes(b, a)) ++rank[a];
  std::vector<bool> taken(n, false);
  for (int32_t a = 0; a < n; ++a) {
    if (taken[rank[a]])
      throw Error("the derived relation is not a linear order");
    taken[rank[a]] = true;
  }
  for (int32_t a = 0; a < n; ++a)
    for (int32_t b = 0; b < n; ++b)
      if (a != b && (rank[a] < rank[b]) != precedes(a, b))
        throw Error("the derived relation is not a linear order");

  HomogeneousOrder h{g, std::vector<int8_t>(
                            static_cast<std::size_t>(n) * n * n, 0)};
  for (int32_t a = 0; a < n; ++a)
    for (int32_t b = 0; b < n; ++b)
      for (int32_t c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        int32_t ra = rank[a], rb = rank[b], rc = rank[c];
        bool even = (ra < rb && rb < rc) || (rb < rc && rc < ra) ||
                    (rc < ra && ra < rb);
        h.c[(a * n + b) * n + c] = even ? 1 : -1;
      }

  // Conditions (1) and (2): values and the exact zero set.
  for (int32_t a = 0; a < n; ++a)
    for (int32_t b = 0; b < n; ++b)
      for (int32_t c = 0; c < n; ++c) {
        int v = h.value(a, b, c);
        bool repeat = (a == b || b == c || a == c);
        if (v < -1 || v > 1 || (v == 0) != repeat)
          throw Error("homogeneous condition (1)/(2) fails");
      }
  // Condition (3): homogeneous cocycle identity.
  for (int32_t g1 = 0; g1 < n; ++g1)
    for (int32_t g2 = 0; g2 < n; ++g2)
      for (int32_t g3 = 0; g3 < n; ++g3)
        for (int32_t g4 = 0; g4 < n; ++g4) {
          int s = h.value(g2, g3, g4) - h.value(g1, g3, g4) +
                  h.value(g1, g2, g4) - h.value(g1, g2, g3);
          if (s != 0) {
            std::ostringstream os;
            os << "homogeneous condition (3) fails at (" << g1 << "," << g2
               << "," << g3 << "," << g4 << ")";
            throw Error(os.str());
          }
        }
  // Condition (4): left invariance.
  for (int32_t x = 0; x < n; ++x)
    for (int32_t g1 = 0; g1 < n; ++g1)
      for (int32_t g2 = 0; g2 < n; ++g2)
        for (int32_t g3 = 0; g3 < n; ++g3)
          if (h.value(g1, g2, g3) !=
              h.value(g.mul(x, g1), g.mul(x, g2), g.mul(x, g3))) {
            std::ostringstream os;
            os << "homogeneous condition (4) fails at h = " << x << ", ("
               << g1 << "," << g2 << "," << g3 << ")";
            throw Error(os.str());
          }
  return h;
}

ExtensionGroup::ExtensionGroup(CocycleTable f) : f_(std::move(f)) {
  if (auto bad = validate_inhomogeneous(f_))
    throw Error("invalid cocycle: " + *bad);
  const int32_t n = static_cast<int32_t>(f_.group.order());
  constexpr int64_t kWindow = 3;
  std::vector<Elem> window;
  for (int64_t m = -kWindow; m <= kWindow; ++m)
    for (int32_t g = 0; g < n; ++g) window.push_back({m, g});
  for (const Elem& a : window) {
    if (!(mul(a, identity()) == a) || !(mul(identity(), a) == a))
      throw Error("extension identity law fails");
    if (!(mul(a, inverse(a)) == identity()) ||
        !(mul(inverse(a), a) == identity()))
      throw Error("extension inverse law fails");
  }
  for (const Elem& a : window)
    for (const Elem& b : window)
      for (const Elem& c : window)
        if (!(mul(mul(a, b), c) == mul(a, mul(b, c))))
          throw Error("extension associativity fails on the window");
  for (int64_t k = -kWindow; k <= kWindow; ++k)
    for (const Elem& a : window)
      if (!(mul(Elem{k, 0}, a) == mul(a, Elem{k, 0})))
        throw Error("(k, id) is not central in the extension");
}

ExtensionGroup::Elem ExtensionGroup::mul(const Elem& a, const Elem& b) const {
  return {a.m + b.m + f_.value(a.g, b.g), f_.group.mul(a.g, b.g)};
}

ExtensionGroup::Elem ExtensionGroup::inverse(const Elem& a) const {
  int32_t gi = f_.group.inv(a.g);
  return {-a.m - f_.value(a.g, gi), gi};
}

ExtensionGroup::Elem ExtensionGroup::power(Elem a, long e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  Elem r = identity();
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

}  // namespace grp
