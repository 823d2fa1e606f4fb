#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "grp/presentation.hpp"
#include "grp/word.hpp"

namespace grp {

struct Limits {
  std::size_t max_cosets = 500000;
};

// Closed coset table for G/<sub>. Cosets are numbered 0..n-1 with coset 0
// the subgroup itself; numbering is breadth-first from coset 0 (columns in
// generator order, positive letter before negative), so tables are canonical.
class CosetTable {
 public:
  CosetTable(Presentation p, std::vector<Word> sub,
             std::vector<std::vector<int32_t>> rows);

  std::size_t coset_count() const { return rows_.size(); }
  const Presentation& presentation() const { return pres_; }
  const std::vector<Word>& subgroup() const { return sub_; }

  int32_t action(int32_t coset, Letter l) const;
  int32_t trace(int32_t coset, const Word& w) const;

  // Representative word for each coset: coset i = coset 0 acted on by the
  // i-th word. Word 0 is empty; words follow the breadth-first numbering.
  std::vector<Word> coset_words() const;

  // Checks completeness, per-column bijectivity, relator closure from every
  // coset and subgroup-generator closure from coset 0; throws Error.
  void validate() const;

 private:
  Presentation pres_;
  std::vector<Word> sub_;
  std::vector<std::vector<int32_t>> rows_;  // width 2 * generator_count
};

// Live-coset budget exhausted; says nothing about finiteness.
struct Overflow {
  std::size_t limit;
};

using EnumerationResult = std::variant<CosetTable, Overflow>;

EnumerationResult todd_coxeter(const Presentation& p,
                               const std::vector<Word>& sub,
                               const Limits& limits = Limits{});

// The table, or throws Error mentioning the exhausted budget.
const CosetTable& require_table(const EnumerationResult& r);

// One permutation of {0..n-1} per generator, acting by right multiplication.
std::vector<std::vector<int32_t>> permutation_images(const CosetTable& t);

}  // namespace grp
