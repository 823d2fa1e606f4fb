#include "grp/intmatrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "grp/errors.hpp"
#include "grp/presentation.hpp"

namespace grp {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix size mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const BigInt& k) {
  for (std::size_t c = 0; c < cols_; ++c) at(a, c) += k * at(b, c);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const BigInt& k) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, a) += k * at(r, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t c = 0; c < cols_; ++c) at(a, c) = -at(a, c);
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, a) = -at(r, a);
}

namespace {

BigInt absval(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Nonzero entry of least absolute value in the submatrix with r, c >= t;
// ties broken by smallest row, then smallest column.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr,
                std::size_t& pc) {
  bool found = false;
  BigInt best = 0;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      const BigInt& x = a.at(r, c);
      if (x == 0) continue;
      BigInt ax = absval(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t k = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < k; ++t) {
    std::size_t pr = t, pc = t;
    if (!find_pivot(a, t, pr, pc)) break;
    for (;;) {
      a.swap_rows(t, pr);
      u.swap_rows(t, pr);
      a.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool partial = false;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a.at(r, t) == 0) continue;
        BigInt q = a.at(r, t) / a.at(t, t);
        if (q != 0) {
          a.add_row(r, t, -q);
          u.add_row(r, t, -q);
        }
        if (a.at(r, t) != 0) partial = true;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a.at(t, c) == 0) continue;
        BigInt q = a.at(t, c) / a.at(t, t);
        if (q != 0) {
          a.add_col(c, t, -q);
          v.add_col(c, t, -q);
        }
        if (a.at(t, c) != 0) partial = true;
      }
      if (partial) {
        find_pivot(a, t, pr, pc);
        continue;
      }

      // Pivot must divide every remaining entry to keep the chain d1 | d2 | ...
      bool fixed = true;
      for (std::size_t r = t + 1; r < a.rows() && fixed; ++r)
        for (std::size_t c = t + 1; c < a.cols() && fixed; ++c)
          if (a.at(r, c) % a.at(t, t) != 0) {
            a.add_row(t, r, 1);
            u.add_row(t, r, 1);
            fixed = false;
          }
      if (fixed) break;
      find_pivot(a, t, pr, pc);
    }
    if (a.at(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithForm{std::move(u), std::move(a), std::move(v)};
}

BigInt AbelianInvariants::order() const {
  if (free_rank > 0) return 0;
  BigInt n = 1;
  for (const BigInt& d : torsion) n *= d;
  return n;
}

AbelianInvariants cokernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  AbelianInvariants inv;
  const std::size_t k = std::min(m.rows(), m.cols());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const BigInt& d = s.d.at(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.free_rank = m.cols() - nonzero;
  return inv;
}

AbelianInvariants abelianization(const Presentation& p) {
  return cokernel(exponent_matrix(p));
}

std::string to_string(const AbelianInvariants& a) {
  if (a.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const BigInt& d : a.torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

}  // namespace grp
