#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace dk {

// Exact arbitrary-precision integer.  All linear algebra in this library is
// over Z with no rounding anywhere; entry growth during elimination makes a
// fixed-width type unsound.
using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major storage.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  // Build from nested lists: {{1,2},{3,4}}.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols);
  // Single column from a vector.
  static IntMatrix column(const std::vector<Int>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Int& c) const;
  IntMatrix transposed() const;

  // Columns of o appended on the right / rows appended below.
  IntMatrix hstack(const IntMatrix& o) const;
  IntMatrix vstack(const IntMatrix& o) const;
  // Rectangular sub-block rows [r0,r1), cols [c0,c1).
  IntMatrix block(int r0, int r1, int c0, int c1) const;
  std::vector<Int> col(int j) const;
  std::vector<Int> row(int i) const;
  IntMatrix with_column_appended(const std::vector<Int>& v) const;

  std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// Result of the Smith normal form computation: s = u * input * v with u, v
// unimodular, s diagonal with nonnegative entries d0 | d1 | ... .
// u_inv / v_inv are the exact inverses (also unimodular), accumulated during
// elimination, present only when requested.
struct SnfResult {
  IntMatrix s, u, v, u_inv, v_inv;
  int rank = 0;  // number of nonzero diagonal entries
  Int diag(int i) const { return s.at(i, i); }
};

struct SnfOptions {
  bool want_u = true;
  bool want_v = true;
  bool want_u_inv = false;
  bool want_v_inv = false;
};

// Pivot choice: smallest nonzero absolute value in the remaining submatrix,
// ties broken by row-major position.  Fully deterministic.
SnfResult smith_normal_form(const IntMatrix& m, const SnfOptions& opts = {});

// Fraction-free (Bareiss) determinant; independent of the SNF code path so
// the two can cross-check each other.
Int determinant(const IntMatrix& m);

// Basis of the full (saturated) kernel lattice {x : a x = 0}, returned as the
// columns of the result.  May have zero columns.
IntMatrix kernel_basis(const IntMatrix& a);

// One solution of a x = b over Z, if any (free coordinates set to zero).
std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b);

// Factor once, solve many right-hand sides.
class SnfSolver {
 public:
  explicit SnfSolver(const IntMatrix& a);
  const IntMatrix& matrix() const { return a_; }
  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
  // Columnwise solve: returns x with a*x = rhs, or nullopt if some column fails.
  std::optional<IntMatrix> solve_matrix(const IntMatrix& rhs) const;

 private:
  IntMatrix a_;
  SnfResult f_;
};

}  // namespace dk
