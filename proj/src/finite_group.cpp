#include "grp/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "grp/enumerator.hpp"
#include "grp/errors.hpp"

namespace grp {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int32_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Apply a, then b.
std::vector<int32_t> compose(const std::vector<int32_t>& a,
                             const std::vector<int32_t>& b) {
  std::vector<int32_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

std::vector<int32_t> closure(const FiniteGroup& g,
                             const std::vector<int32_t>& seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<int32_t> list;
  auto add = [&](int32_t e) {
    if (!in[e]) {
      in[e] = true;
      list.push_back(e);
    }
  };
  add(0);
  for (int32_t e : seed) {
    if (e < 0 || e >= static_cast<int32_t>(g.order()))
      throw Error("element index out of range");
    add(e);
  }
  for (std::size_t head = 0; head < list.size(); ++head)
    for (std::size_t j = 0; j < list.size(); ++j) {
      add(g.mul(list[head], list[j]));
      add(g.mul(list[j], list[head]));
    }
  std::sort(list.begin(), list.end());
  return list;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int32_t>> table,
                                    std::vector<int32_t> generators) {
  const std::size_t n = table.size();
  if (n == 0) throw Error("multiplication table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw Error("multiplication table is not square");
    for (int32_t e : row)
      if (e < 0 || e >= static_cast<int32_t>(n))
        throw Error("multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[0][a] != static_cast<int32_t>(a) ||
        table[a][0] != static_cast<int32_t>(a))
      throw Error("element 0 is not an identity");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_hit(n, false), col_hit(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row_hit[table[a][b]]) throw Error("table row is not a permutation");
      row_hit[table[a][b]] = true;
      if (col_hit[table[b][a]])
        throw Error("table column is not a permutation");
      col_hit[table[b][a]] = true;
    }
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  g.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a][b] == 0) {
        g.inv_[a] = static_cast<int32_t>(b);
        break;
      }
  for (int32_t e : generators)
    if (e < 0 || e >= static_cast<int32_t>(n))
      throw Error("generator index out of range");
  g.gens_ = std::move(generators);
  if (closure(g, g.gens_).size() != n)
    throw Error("generators do not generate the group");
  return g;
}

int32_t FiniteGroup::power(int32_t a, long e) const {
  if (e < 0) {
    a = inv_[a];
    e = -e;
  }
  int32_t r = 0;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int32_t FiniteGroup::element_order(int32_t a) const {
  int32_t x = a;
  int32_t k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int32_t FiniteGroup::evaluate(const Word& w) const {
  int32_t r = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w[i];
    if (l.gen < 0 || l.gen >= static_cast<int32_t>(gens_.size()))
      throw Error("word references unknown generator index");
    int32_t img = gens_[l.gen];
    r = mul(r, l.sign > 0 ? img : inv_[img]);
  }
  return r;
}

void FiniteGroup::validate_associativity() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error("multiplication table is not associative");
}

int32_t conjugate(const FiniteGroup& g, int32_t x, int32_t y) {
  return g.mul(g.mul(x, y), g.inv(x));
}

int32_t commutator(const FiniteGroup& g, int32_t x, int32_t y) {
  return g.mul(conjugate(g, x, y), g.inv(y));
}

FiniteGroup group_from_permutations(
    const std::vector<std::vector<int32_t>>& perms) {
  if (perms.empty()) return cyclic_group(1);
  const std::size_t deg = perms[0].size();
  for (const auto& p : perms) {
    if (p.size() != deg) throw Error("permutation degree mismatch");
    std::vector<bool> hit(deg, false);
    for (int32_t x : p) {
      if (x < 0 || x >= static_cast<int32_t>(deg) || hit[x])
        throw Error("not a permutation");
      hit[x] = true;
    }
  }
  constexpr std::size_t kBound = 1000000;
  std::vector<std::vector<int32_t>> elems;
  std::unordered_map<std::vector<int32_t>, int32_t, VecHash> index;
  std::vector<int32_t> parent{0}, via{0};
  std::vector<std::vector<int32_t>> right;  // right[e][i] = e * perms[i]
  std::vector<int32_t> id(deg);
  std::iota(id.begin(), id.end(), 0);
  elems.push_back(id);
  index.emplace(id, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    right.emplace_back(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) {
      std::vector<int32_t> prod = compose(elems[head], perms[i]);
      auto [it, fresh] =
          index.emplace(prod, static_cast<int32_t>(elems.size()));
      if (fresh) {
        if (elems.size() >= kBound)
          throw Error("permutation closure exceeds the safety bound");
        elems.push_back(std::move(prod));
        parent.push_back(static_cast<int32_t>(head));
        via.push_back(static_cast<int32_t>(i));
      }
      right[head][i] = it->second;
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<int32_t>> table(n, std::vector<int32_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    table[a][0] = static_cast<int32_t>(a);
    for (std::size_t b = 1; b < n; ++b)
      table[a][b] = right[table[a][parent[b]]][via[b]];
  }
  std::vector<int32_t> gens;
  for (const auto& p : perms) gens.push_back(index.at(p));
  return FiniteGroup::from_table(std::move(table), std::move(gens));
}

FiniteGroup group_from_coset_table(const CosetTable& t) {
  if (!t.subgroup().empty())
    throw Error("cosets form a group only over the trivial subgroup");
  const std::size_t n = t.coset_count();
  std::vector<Word> words = t.coset_words();
  std::vector<std::vector<int32_t>> table(n, std::vector<int32_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a][b] = t.trace(static_cast<int32_t>(a), words[b]);
  std::vector<int32_t> gens;
  for (std::size_t g = 0; g < t.presentation().generator_count(); ++g)
    gens.push_back(t.action(0, Letter{static_cast<int32_t>(g), 1}));
  return FiniteGroup::from_table(std::move(table), std::move(gens));
}

FiniteGroup cyclic_group(int32_t n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<std::vector<int32_t>> table(n, std::vector<int32_t>(n));
  for (int32_t a = 0; a < n; ++a)
    for (int32_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  std::vector<int32_t> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::from_table(std::move(table), std::move(gens));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int32_t na = static_cast<int32_t>(a.order());
  const int32_t nb = static_cast<int32_t>(b.order());
  std::vector<std::vector<int32_t>> table(na * nb,
                                          std::vector<int32_t>(na * nb));
  for (int32_t x = 0; x < na * nb; ++x)
    for (int32_t y = 0; y < na * nb; ++y)
      table[x][y] =
          a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  std::vector<int32_t> gens;
  for (int32_t g : a.generators()) gens.push_back(g * nb);
  for (int32_t g : b.generators()) gens.push_back(g);
  return FiniteGroup::from_table(std::move(table), std::move(gens));
}

bool Subgroup::contains(int32_t e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

FiniteGroup Subgroup::as_group() const {
  std::vector<int32_t> pos(parent->order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i)
    pos[elements[i]] = static_cast<int32_t>(i);
  const std::size_t n = elements.size();
  std::vector<std::vector<int32_t>> table(n, std::vector<int32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int32_t prod = pos[parent->mul(elements[i], elements[j])];
      if (prod < 0) throw Error("subgroup is not closed");
      table[i][j] = prod;
    }
  std::vector<int32_t> gens;
  for (std::size_t i = 1; i < n; ++i) gens.push_back(static_cast<int32_t>(i));
  return FiniteGroup::from_table(std::move(table), std::move(gens));
}

Subgroup subgroup_generated(const FiniteGroup& g,
                            const std::vector<int32_t>& elems) {
  return Subgroup{&g, closure(g, elems)};
}

Subgroup center(const FiniteGroup& g) {
  std::vector<int32_t> elems;
  for (int32_t e = 0; e < static_cast<int32_t>(g.order()); ++e)
    if (is_central(g, e)) elems.push_back(e);
  return Subgroup{&g, std::move(elems)};
}

bool is_central(const FiniteGroup& g, int32_t e) {
  for (int32_t h : g.generators())
    if (g.mul(e, h) != g.mul(h, e)) return false;
  return true;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a,
                             const Subgroup& b) {
  std::vector<int32_t> seed;
  for (int32_t x : a.elements)
    for (int32_t y : b.elements) seed.push_back(commutator(g, x, y));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return Subgroup{&g, closure(g, seed)};
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<int32_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  Subgroup whole{&g, all};
  return commutator_subgroup(g, whole, whole);
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (int32_t x : g.generators())
    for (int32_t e : s.elements)
      if (!s.contains(conjugate(g, x, e))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  for (int32_t a : g.generators())
    for (int32_t b : g.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

namespace {

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

}  // namespace

AbelianInvariants abelian_invariants(const FiniteGroup& g) {
  if (!is_abelian(g)) throw Error("group is not abelian");
  const int64_t n = static_cast<int64_t>(g.order());
  AbelianInvariants inv;
  if (n == 1) return inv;
  std::map<int64_t, int64_t> hist;
  for (int32_t e = 0; e < n; ++e) ++hist[g.element_order(e)];
  // Per prime, the counts c_k = #{x : x^{p^k} = e} determine the conjugate
  // partition of the p-primary exponents: #{i : e_i >= k} = log_p(c_k/c_{k-1}).
  std::vector<std::vector<int64_t>> per_prime;  // ascending prime-power lists
  for (auto [p, vmax] : factorize(n)) {
    std::vector<int64_t> c{1};
    int64_t pk = 1;
    for (int k = 1; k <= vmax; ++k) {
      pk *= p;
      int64_t count = 0;
      int64_t q = 1;
      for (int j = 0; j <= k; ++j) {
        auto it = hist.find(q);
        if (it != hist.end()) count += it->second;
        q *= p;
      }
      c.push_back(count);
    }
    std::vector<int64_t> t;  // t[k-1] = #{i : e_i >= k}
    for (std::size_t k = 1; k < c.size(); ++k) {
      int64_t ratio = c[k] / c[k - 1];
      if (c[k] % c[k - 1] != 0) throw Error("order histogram is inconsistent");
      int64_t tk = 0;
      while (ratio > 1) {
        if (ratio % p != 0) throw Error("order histogram is inconsistent");
        ratio /= p;
        ++tk;
      }
      t.push_back(tk);
    }
    std::vector<int64_t> powers;  // ascending
    for (std::size_t k = t.size(); k >= 1; --k) {
      int64_t next = (k < t.size()) ? t[k] : 0;
      for (int64_t i = 0; i < t[k - 1] - next; ++i) {
        int64_t pw = 1;
        for (std::size_t j = 0; j < k; ++j) pw *= p;
        powers.push_back(pw);
      }
    }
    std::reverse(powers.begin(), powers.end());
    per_prime.push_back(std::move(powers));
  }
  std::size_t r = 0;
  for (const auto& v : per_prime) r = std::max(r, v.size());
  for (std::size_t j = 0; j < r; ++j) {
    BigInt d = 1;
    for (const auto& v : per_prime) {
      // Right-align so the largest factors multiply together.
      std::size_t off = r - v.size();
      if (j >= off) d *= v[j - off];
    }
    if (d > 1) inv.torsion.push_back(d);
  }
  BigInt check = 1;
  for (const BigInt& d : inv.torsion) check *= d;
  if (check != n) throw Error("order histogram is inconsistent");
  return inv;
}

Hom::Hom(const FiniteGroup* source, const FiniteGroup* target,
         std::vector<int32_t> element_map)
    : source_(source), target_(target), map_(std::move(element_map)) {
  const std::size_t n = source_->order();
  if (map_.size() != n) throw Error("element map size mismatch");
  for (int32_t v : map_)
    if (v < 0 || v >= static_cast<int32_t>(target_->order()))
      throw Error("element map value out of range");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (map_[source_->mul(a, b)] != target_->mul(map_[a], map_[b]))
        throw Error("map is not a homomorphism");
}

Hom::Hom(const FiniteGroup* source, std::shared_ptr<const FiniteGroup> target,
         std::vector<int32_t> element_map)
    : Hom(source, target.get(), std::move(element_map)) {
  owned_target_ = std::move(target);
}

bool operator==(const Hom& a, const Hom& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
}

Hom hom_from_generator_images(const FiniteGroup& source,
                              const FiniteGroup& target,
                              const std::vector<int32_t>& images) {
  if (images.size() != source.generators().size())
    throw Error("one image required per generator");
  const std::size_t n = source.order();
  std::vector<int32_t> map(n, -1);
  map[0] = 0;
  std::vector<int32_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int32_t e = queue[head];
    for (std::size_t i = 0; i < images.size(); ++i) {
      int32_t ne = source.mul(e, source.generators()[i]);
      int32_t img = target.mul(map[e], images[i]);
      if (map[ne] == -1) {
        map[ne] = img;
        queue.push_back(ne);
      } else if (map[ne] != img) {
        throw Error("images do not define a homomorphism");
      }
    }
  }
  return Hom(&source, &target, std::move(map));
}

Subgroup kernel(const Hom& h) {
  std::vector<int32_t> elems;
  for (int32_t e = 0; e < static_cast<int32_t>(h.source().order()); ++e)
    if (h.apply(e) == 0) elems.push_back(e);
  return Subgroup{&h.source(), std::move(elems)};
}

Subgroup image(const Hom& h) {
  std::vector<int32_t> elems;
  for (int32_t e = 0; e < static_cast<int32_t>(h.source().order()); ++e)
    elems.push_back(h.apply(e));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subgroup{&h.target(), std::move(elems)};
}

PresentationHom::PresentationHom(Presentation source,
                                 const FiniteGroup* target,
                                 std::vector<int32_t> images)
    : source_(std::move(source)), target_(target), images_(std::move(images)) {
  if (images_.size() != source_.generator_count())
    throw Error("one image required per generator");
  for (int32_t v : images_)
    if (v < 0 || v >= static_cast<int32_t>(target_->order()))
      throw Error("image out of range");
  for (const Word& r : source_.relators)
    if (apply(r) != 0)
      throw Error("relator " + word_to_text(source_.generators, r) +
                  " does not map to the identity");
}

int32_t PresentationHom::apply(const Word& w) const {
  int32_t r = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w[i];
    if (l.gen < 0 || l.gen >= static_cast<int32_t>(images_.size()))
      throw Error("word references unknown generator index");
    int32_t img = images_[l.gen];
    r = target_->mul(r, l.sign > 0 ? img : target_->inv(img));
  }
  return r;
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (n.parent != &g) throw Error("subgroup belongs to a different group");
  if (!is_normal(g, n)) throw Error("subgroup is not normal");
  const int32_t order = static_cast<int32_t>(g.order());
  std::vector<int32_t> rep(order);
  for (int32_t e = 0; e < order; ++e) {
    int32_t r = e;
    for (int32_t x : n.elements) r = std::min(r, g.mul(e, x));
    rep[e] = r;
  }
  std::vector<int32_t> reps;
  for (int32_t e = 0; e < order; ++e)
    if (rep[e] == e) reps.push_back(e);
  std::vector<int32_t> cosidx(order, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) cosidx[reps[i]] = i;
  const std::size_t m = reps.size();
  std::vector<std::vector<int32_t>> table(m, std::vector<int32_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i][j] = cosidx[rep[g.mul(reps[i], reps[j])]];
  std::vector<int32_t> gens;
  for (int32_t x : g.generators()) {
    int32_t img = cosidx[rep[x]];
    if (std::find(gens.begin(), gens.end(), img) == gens.end())
      gens.push_back(img);
  }
  auto q = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(std::move(table), std::move(gens)));
  std::vector<int32_t> proj(order);
  for (int32_t e = 0; e < order; ++e) proj[e] = cosidx[rep[e]];
  Hom pi(&g, q, std::move(proj));
  return QuotientResult{*q, std::move(pi)};
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint fp;
  fp.order = g.order();
  Subgroup derived = derived_subgroup(g);
  fp.abelianization = abelian_invariants(quotient(g, derived).group);
  fp.derived_series_orders.push_back(g.order());
  std::vector<int32_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  Subgroup s{&g, all};
  for (;;) {
    Subgroup next = commutator_subgroup(g, s, s);
    if (next.order() == s.order()) break;
    fp.derived_series_orders.push_back(next.order());
    s = std::move(next);
  }
  fp.center_order = center(g).order();
  // Lower central series.
  Subgroup whole{&g, all};
  Subgroup gamma = whole;
  int cls = 0;
  for (;;) {
    if (gamma.order() == 1) {
      fp.nilpotency_class = cls;
      break;
    }
    Subgroup next = commutator_subgroup(g, whole, gamma);
    if (next.order() == gamma.order()) {
      fp.nilpotency_class = std::nullopt;
      break;
    }
    gamma = std::move(next);
    ++cls;
  }
  int64_t exponent = 1;
  for (int32_t e = 0; e < static_cast<int32_t>(g.order()); ++e) {
    int64_t o = g.element_order(e);
    ++fp.order_histogram[o];
    exponent = std::lcm(exponent, o);
  }
  fp.exponent = exponent;
  return fp;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream out;
  out << "|G|=" << f.order << " ab=" << to_string(f.abelianization)
      << " derived=[";
  for (std::size_t i = 0; i < f.derived_series_orders.size(); ++i)
    out << (i ? ", " : "") << f.derived_series_orders[i];
  out << "] |Z|=" << f.center_order << " class=";
  if (f.nilpotency_class)
    out << *f.nilpotency_class;
  else
    out << "-";
  out << " exp=" << f.exponent << " orders={";
  bool first = true;
  for (const auto& [o, c] : f.order_histogram) {
    out << (first ? "" : ", ") << o << ":" << c;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace grp
