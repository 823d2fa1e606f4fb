#include "grp/enumerator.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "grp/errors.hpp"

namespace grp {

namespace {

// Column encoding: letter (g, +1) -> 2g, (g, -1) -> 2g+1; inverse flips bit 0.
inline int32_t column(const Letter& l) {
  return 2 * l.gen + (l.sign < 0 ? 1 : 0);
}

std::vector<int32_t> columns(const Word& w) {
  std::vector<int32_t> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(column(w[i]));
  return out;
}

struct OverflowSignal {};

constexpr int32_t kNone = -1;

// HLT enumeration with immediate deduction stacks and periodic compaction.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& sub,
             const Limits& limits)
      : pres_(p), sub_(sub),
        width_(2 * static_cast<int32_t>(p.generator_count())),
        limit_(limits.max_cosets) {
    if (limit_ < 1) throw Error("max cosets must be positive");
    for (const Word& r : p.relators) {
      Word core = cyclic_reduce(free_reduce(r)).core;
      if (!core.empty()) rels_.push_back(columns(core));
    }
    // Cyclic conjugate start positions indexed by first column, for
    // deduction scanning.
    by_first_.resize(width_);
    for (std::size_t k = 0; k < rels_.size(); ++k)
      for (std::size_t pos = 0; pos < rels_[k].size(); ++pos)
        by_first_[rels_[k][pos]].push_back(
            {static_cast<int32_t>(k), static_cast<int32_t>(pos)});
  }

  EnumerationResult run() {
    try {
      new_coset();
      for (const Word& w : sub_) {
        Word r = free_reduce(w);
        if (r.empty()) continue;
        scan(0, columns(r), true);
        process_deductions();
      }
      for (int32_t c = 0; c < static_cast<int32_t>(tab_.size()); ++c) {
        if (p_[c] != c) continue;
        for (std::size_t k = 0; k < rels_.size(); ++k) {
          scan(c, rels_[k], true);
          process_deductions();
          if (p_[c] != c) break;
          if (should_compact()) c = compact(c);
        }
        if (p_[c] != c) continue;
        for (int32_t col = 0; col < width_ && p_[c] == c; ++col) {
          if (tab_[c][col] == kNone) {
            define(c, col);
            process_deductions();
          }
        }
        if (p_[c] == c && should_compact()) c = compact(c);
      }
    } catch (const OverflowSignal&) {
      return Overflow{limit_};
    }
    compact(0);
    standardize();
    return CosetTable(pres_, sub_, std::move(tab_));
  }

 private:
  bool should_compact() const {
    return tab_.size() - live_ >= std::max<std::size_t>(1024, live_);
  }

  int32_t new_coset() {
    if (live_ == limit_) throw OverflowSignal{};
    int32_t n = static_cast<int32_t>(tab_.size());
    tab_.emplace_back(width_, kNone);
    p_.push_back(n);
    ++live_;
    return n;
  }

  void define(int32_t c, int32_t col) {
    int32_t d = new_coset();
    tab_[c][col] = d;
    tab_[d][col ^ 1] = c;
    dstack_.push_back({c, col});
  }

  int32_t find(int32_t c) {
    while (p_[c] != c) {
      p_[c] = p_[p_[c]];
      c = p_[c];
    }
    return c;
  }

  void merge(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    --live_;
    cq_.push_back(b);
  }

  // Merge two cosets and drain the coincidence queue, transferring every
  // edge of each dead coset onto its representative.
  void coincide(int32_t a, int32_t b) {
    merge(a, b);
    while (!cq_.empty()) {
      int32_t g = cq_.front();
      cq_.pop_front();
      for (int32_t col = 0; col < width_; ++col) {
        int32_t d = tab_[g][col];
        if (d == kNone) continue;
        tab_[g][col] = kNone;
        if (tab_[d][col ^ 1] == g) tab_[d][col ^ 1] = kNone;
        int32_t mu = find(g);
        int32_t nu = find(d);
        if (tab_[mu][col] != kNone) {
          merge(nu, tab_[mu][col]);
        } else if (tab_[nu][col ^ 1] != kNone) {
          merge(mu, tab_[nu][col ^ 1]);
        } else {
          tab_[mu][col] = nu;
          tab_[nu][col ^ 1] = mu;
          dstack_.push_back({mu, col});
        }
      }
    }
  }

  // Scan relator columns w from coset c. Forward consumes positions [0, i),
  // backward consumes [j, n). Gaps of length >= 2 are filled with new cosets
  // when `fill`, otherwise left alone; a gap of length 1 forces the entry
  // (deduction); full scans compare endpoints (coincidence on mismatch).
  void scan(int32_t c, const std::vector<int32_t>& w, bool fill) {
    int32_t f = c;
    std::size_t i = 0;
    int32_t b = c;
    std::size_t j = w.size();
    for (;;) {
      while (i < j && tab_[f][w[i]] != kNone) f = tab_[f][w[i++]];
      if (i == j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j > i + 1 && tab_[b][w[j - 1] ^ 1] != kNone) {
        --j;
        b = tab_[b][w[j] ^ 1];
      }
      if (j == i + 1) {
        int32_t x = tab_[b][w[i] ^ 1];
        if (x != kNone) {
          // b's preimage already exists; the relator says it is f.
          if (f != x) coincide(f, x);
          return;
        }
        tab_[f][w[i]] = b;
        tab_[b][w[i] ^ 1] = f;
        dstack_.push_back({f, w[i]});
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void process_deductions() {
    while (!dstack_.empty()) {
      auto [c, col] = dstack_.back();
      dstack_.pop_back();
      int32_t a = find(c);
      if (tab_[a][col] == kNone) continue;  // edge superseded by a coincidence
      for (auto [k, pos] : by_first_[col]) {
        scan_conjugate(a, k, pos);
        if (p_[a] != a) break;
      }
      a = find(a);
      int32_t b = tab_[a][col];
      if (b == kNone) continue;
      b = find(b);
      for (auto [k, pos] : by_first_[col ^ 1]) {
        scan_conjugate(b, k, pos);
        if (p_[b] != b) break;
      }
    }
  }

  // Scan the cyclic conjugate of relator k starting at pos, without filling.
  void scan_conjugate(int32_t c, int32_t k, int32_t pos) {
    const std::vector<int32_t>& r = rels_[k];
    conj_.clear();
    for (std::size_t t = 0; t < r.size(); ++t)
      conj_.push_back(r[(pos + t) % r.size()]);
    scan(c, conj_, false);
  }

  // Drop dead rows, renumbering live cosets in order. Requires empty queues.
  // Returns the new index of `cursor`.
  int32_t compact(int32_t cursor) {
    std::vector<int32_t> newid(tab_.size(), kNone);
    int32_t next = 0;
    for (std::size_t c = 0; c < tab_.size(); ++c)
      if (p_[c] == static_cast<int32_t>(c)) newid[c] = next++;
    std::vector<std::vector<int32_t>> rows;
    rows.reserve(next);
    for (std::size_t c = 0; c < tab_.size(); ++c) {
      if (newid[c] == kNone) continue;
      for (int32_t col = 0; col < width_; ++col) {
        int32_t& e = tab_[c][col];
        if (e != kNone) e = newid[find(e)];
      }
      rows.push_back(std::move(tab_[c]));
    }
    tab_ = std::move(rows);
    p_.resize(tab_.size());
    for (std::size_t c = 0; c < p_.size(); ++c) p_[c] = static_cast<int32_t>(c);
    return newid[cursor];
  }

  // Renumber cosets in breadth-first order from coset 0; table must be
  // compact.
  void standardize() {
    std::vector<int32_t> newid(tab_.size(), kNone);
    std::vector<int32_t> order;
    order.reserve(tab_.size());
    newid[0] = 0;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      int32_t c = order[head];
      for (int32_t col = 0; col < width_; ++col) {
        int32_t d = tab_[c][col];
        if (d != kNone && newid[d] == kNone) {
          newid[d] = static_cast<int32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    if (order.size() != tab_.size())
      throw Error("coset table is not connected");
    std::vector<std::vector<int32_t>> rows(tab_.size());
    for (std::size_t c = 0; c < tab_.size(); ++c) {
      std::vector<int32_t>& row = tab_[c];
      for (int32_t col = 0; col < width_; ++col)
        if (row[col] != kNone) row[col] = newid[row[col]];
      rows[newid[c]] = std::move(row);
    }
    tab_ = std::move(rows);
  }

  const Presentation& pres_;
  const std::vector<Word>& sub_;
  int32_t width_;
  std::size_t limit_;
  std::vector<std::vector<int32_t>> rels_;
  std::vector<std::vector<std::pair<int32_t, int32_t>>> by_first_;
  std::vector<std::vector<int32_t>> tab_;
  std::vector<int32_t> p_;
  std::deque<int32_t> cq_;
  std::vector<std::pair<int32_t, int32_t>> dstack_;
  std::vector<int32_t> conj_;
  std::size_t live_ = 0;
};

}  // namespace

CosetTable::CosetTable(Presentation p, std::vector<Word> sub,
                       std::vector<std::vector<int32_t>> rows)
    : pres_(std::move(p)), sub_(std::move(sub)), rows_(std::move(rows)) {}

int32_t CosetTable::action(int32_t coset, Letter l) const {
  return rows_[coset][column(l)];
}

int32_t CosetTable::trace(int32_t coset, const Word& w) const {
  int32_t c = coset;
  for (std::size_t i = 0; i < w.size(); ++i) c = rows_[c][column(w[i])];
  return c;
}

std::vector<Word> CosetTable::coset_words() const {
  std::vector<Word> words(rows_.size());
  std::vector<bool> seen(rows_.size(), false);
  seen[0] = true;
  std::deque<int32_t> queue{0};
  const int32_t width = 2 * static_cast<int32_t>(pres_.generator_count());
  while (!queue.empty()) {
    int32_t c = queue.front();
    queue.pop_front();
    for (int32_t col = 0; col < width; ++col) {
      int32_t d = rows_[c][col];
      if (d == kNone || seen[d]) continue;
      seen[d] = true;
      Letter l{col / 2, (col % 2) ? -1 : 1};
      words[d] = words[c] * Word({l});
      queue.push_back(d);
    }
  }
  return words;
}

void CosetTable::validate() const {
  const int32_t n = static_cast<int32_t>(rows_.size());
  const int32_t width = 2 * static_cast<int32_t>(pres_.generator_count());
  if (n == 0) throw Error("coset table is empty");
  for (int32_t c = 0; c < n; ++c) {
    if (static_cast<int32_t>(rows_[c].size()) != width)
      throw Error("coset table row width mismatch");
    for (int32_t col = 0; col < width; ++col) {
      int32_t d = rows_[c][col];
      if (d < 0 || d >= n) throw Error("coset table is not complete");
      if (rows_[d][col ^ 1] != c)
        throw Error("coset table columns are not inverse permutations");
    }
  }
  for (int32_t col = 0; col < width; ++col) {
    std::vector<bool> hit(n, false);
    for (int32_t c = 0; c < n; ++c) {
      int32_t d = rows_[c][col];
      if (hit[d]) throw Error("generator action is not a permutation");
      hit[d] = true;
    }
  }
  for (const Word& r : pres_.relators)
    for (int32_t c = 0; c < n; ++c)
      if (trace(c, r) != c)
        throw Error("relator does not close at coset " + std::to_string(c));
  for (const Word& w : sub_)
    if (trace(0, w) != 0)
      throw Error("subgroup generator does not fix coset 0");
}

EnumerationResult todd_coxeter(const Presentation& p,
                               const std::vector<Word>& sub,
                               const Limits& limits) {
  for (const Word& w : sub)
    if (w.max_generator() >= static_cast<int>(p.generator_count()))
      throw Error("subgroup word references unknown generator index");
  Enumerator e(p, sub, limits);
  return e.run();
}

const CosetTable& require_table(const EnumerationResult& r) {
  if (const auto* o = std::get_if<Overflow>(&r)) throw OverflowError(o->limit);
  return std::get<CosetTable>(r);
}

std::vector<std::vector<int32_t>> permutation_images(const CosetTable& t) {
  std::vector<std::vector<int32_t>> perms;
  const std::size_t n = t.coset_count();
  for (std::size_t g = 0; g < t.presentation().generator_count(); ++g) {
    std::vector<int32_t> perm(n);
    for (std::size_t c = 0; c < n; ++c)
      perm[c] = t.action(static_cast<int32_t>(c),
                         Letter{static_cast<int32_t>(g), 1});
    perms.push_back(std::move(perm));
  }
  return perms;
}

}  // namespace grp
