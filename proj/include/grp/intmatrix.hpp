#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grp {

using BigInt = boost::multiprecision::cpp_int;

struct Presentation;

// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix operator*(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[a] += k * row[b]; col[a] += k * col[b]
  void add_row(std::size_t a, std::size_t b, const BigInt& k);
  void add_col(std::size_t a, std::size_t b, const BigInt& k);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// U * M * V = D with U, V unimodular and D diagonal, each diagonal entry
// nonnegative and dividing the next.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Invariant-factor decomposition of a finitely generated abelian group:
// Z^free_rank + sum Z/torsion[i], torsion entries > 1 and each dividing the
// next.
struct AbelianInvariants {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  BigInt order() const;  // 0 when infinite

  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

// Cokernel Z^cols / rowspace(M).
AbelianInvariants cokernel(const IntMatrix& m);

AbelianInvariants abelianization(const Presentation& p);

// "0" for the trivial group, otherwise e.g. "Z + Z + Z/2 + Z/6".
std::string to_string(const AbelianInvariants& a);

}  // namespace grp
