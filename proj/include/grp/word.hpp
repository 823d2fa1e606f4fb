#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace grp {

// A single letter x_i^{±1} of a free-group word.
struct Letter {
  std::int32_t gen = 0;   // generator index into the ambient presentation
  std::int32_t sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

// A word in a free group, stored letter by letter (no power compression).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(int gen, int sign = 1) {
    return Word({Letter{gen, sign}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word operator*(const Word& rhs) const;  // concatenation, no reduction
  Word pow(int k) const;                  // k may be negative

  // Largest generator index appearing in the word, or -1 when empty.
  int max_generator() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// The unique freely reduced word equal to `w`.
Word free_reduce(const Word& w);

bool is_reduced(const Word& w);

// Signed number of occurrences of generator `gen` in `w`.
long exponent_sum(const Word& w, int gen);

// w = conjugator * core * conjugator^{-1} with `core` cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};

// Requires `w` reduced.
CyclicReduction cyclic_reduce(const Word& w);

struct PowerRoot {
  Word root;     // primitive root
  int exponent;  // >= 2
};

// For a cyclically reduced nonempty `w`, the primitive root r and k >= 2 with
// w = r^k, found as the minimal period dividing the length; nullopt when `w`
// is not a proper power.
std::optional<PowerRoot> proper_power_root(const Word& w);

}  // namespace grp
