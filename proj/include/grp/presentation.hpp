#pragma once

#include <string>
#include <vector>

#include "grp/word.hpp"

namespace grp {

class IntMatrix;

// A finitely presented group <generators | relators>.
//
// Relators are always stored freely reduced; a relation `w1 = w2` in the
// textual grammar is stored as the relator w1 * w2^{-1}.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  Presentation() = default;
  Presentation(std::vector<std::string> gens, std::vector<Word> rels);

  std::size_t generator_count() const { return generators.size(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Grammar (whitespace-insensitive, `*` optional between factors):
//
//   presentation := "<" ident ("," ident)* "|" [relation ("," relation)*] ">"
//   relation     := word | word "=" word
//   word         := "1" | factor+
//   factor       := ident ["^" sint] | "(" word ")" ["^" sint]
//   ident        := [A-Za-z][A-Za-z0-9_]*    sint := ["-"] digit+
//
// `1` denotes the empty word.
Presentation parse_presentation(const std::string& text);

// A single word over the given generator names, same grammar as above.
Word parse_word(const std::vector<std::string>& generators,
                const std::string& text);

// Serialization; powers are re-compressed (x x x -> x^3). parse(to_text(p))
// reproduces p exactly.
std::string to_text(const Presentation& p);
std::string word_to_text(const std::vector<std::string>& generators,
                         const Word& w);

int deficiency(const Presentation& p);

// True iff every relator, up to cyclic permutation and inversion, has the
// form x_i^{-1} w x_j w^{-1}. Relators that freely reduce to the empty word
// qualify (they are x^{-1} w x w^{-1} with w empty and i = j).
bool is_wirtinger(const Presentation& p);

// Relator-by-generator matrix of signed exponent sums; row k, column i holds
// the exponent sum of generator i in relator k.
IntMatrix exponent_matrix(const Presentation& p);

// Presentation of the quotient by the normal closure of `extra`.
Presentation add_relators(const Presentation& p, const std::vector<Word>& extra);

}  // namespace grp
