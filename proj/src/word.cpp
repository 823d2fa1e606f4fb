#include "grp/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "grp/errors.hpp"

namespace grp {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(grp::inverse(*it));
  return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::pow(int k) const {
  Word base = k >= 0 ? *this : inverse();
  int reps = std::abs(k);
  std::vector<Letter> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(out));
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().gen == l.gen &&
        stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].gen == w[i + 1].gen && w[i].sign == -w[i + 1].sign) return false;
  return true;
}

long exponent_sum(const Word& w, int gen) {
  long s = 0;
  for (const Letter& l : w.letters())
    if (l.gen == gen) s += l.sign;
  return s;
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen &&
         ls[lo].sign == -ls[hi - 1].sign) {
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.core = Word(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
  out.conjugator = Word(std::vector<Letter>(ls.begin(), ls.begin() + lo));
  return out;
}

std::optional<PowerRoot> proper_power_root(const Word& w) {
  if (w.empty()) throw Error("proper_power_root: empty word");
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i)
      periodic = (w[i] == w[i % p]);
    if (periodic) {
      PowerRoot pr;
      pr.root = Word(std::vector<Letter>(w.letters().begin(),
                                         w.letters().begin() + p));
      pr.exponent = static_cast<int>(n / p);
      return pr;
    }
  }
  return std::nullopt;
}

}  // namespace grp
