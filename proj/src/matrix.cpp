#include "dk/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace dk {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  e_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged initializer");
    for (long long x : r) e_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::zero(int rows, int cols) { return IntMatrix(rows, cols); }

IntMatrix IntMatrix::column(const std::vector<Int>& v) {
  IntMatrix m(static_cast<int>(v.size()), 1);
  for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = v[i];
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Int& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack col mismatch");
  IntMatrix r(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

IntMatrix IntMatrix::block(int r0, int r1, int c0, int c1) const {
  if (r0 < 0 || r1 > rows_ || c0 < 0 || c1 > cols_ || r0 > r1 || c0 > c1)
    throw std::invalid_argument("bad block range");
  IntMatrix r(r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) r.at(i - r0, j - c0) = at(i, j);
  return r;
}

std::vector<Int> IntMatrix::col(int j) const {
  std::vector<Int> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Int> IntMatrix::row(int i) const {
  std::vector<Int> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

IntMatrix IntMatrix::with_column_appended(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("append column length mismatch");
  return hstack(IntMatrix::column(v));
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply length mismatch");
  std::vector<Int> r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && x[j] != 0) acc += at(i, j) * x[j];
    r[i] = acc;
  }
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

namespace {

// Elimination state: s plus whichever transforms were requested.
struct Elim {
  IntMatrix s, u, v, ui, vi;
  SnfOptions o;

  void row_swap(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
    if (o.want_u)
      for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    if (o.want_u_inv)
      for (int i = 0; i < ui.rows(); ++i) std::swap(ui.at(i, a), ui.at(i, b));
  }
  void col_swap(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
    if (o.want_v)
      for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    if (o.want_v_inv)
      for (int j = 0; j < vi.cols(); ++j) std::swap(vi.at(a, j), vi.at(b, j));
  }
  // row a += c * row b
  void row_add(int a, int b, const Int& c) {
    for (int j = 0; j < s.cols(); ++j)
      if (s.at(b, j) != 0) s.at(a, j) += c * s.at(b, j);
    if (o.want_u)
      for (int j = 0; j < u.cols(); ++j)
        if (u.at(b, j) != 0) u.at(a, j) += c * u.at(b, j);
    if (o.want_u_inv)  // inverse op: col b -= c * col a
      for (int i = 0; i < ui.rows(); ++i)
        if (ui.at(i, a) != 0) ui.at(i, b) -= c * ui.at(i, a);
  }
  // col a += c * col b
  void col_add(int a, int b, const Int& c) {
    for (int i = 0; i < s.rows(); ++i)
      if (s.at(i, b) != 0) s.at(i, a) += c * s.at(i, b);
    if (o.want_v)
      for (int i = 0; i < v.rows(); ++i)
        if (v.at(i, b) != 0) v.at(i, a) += c * v.at(i, b);
    if (o.want_v_inv)  // inverse op: row b -= c * row a
      for (int j = 0; j < vi.cols(); ++j)
        if (vi.at(a, j) != 0) vi.at(b, j) -= c * vi.at(a, j);
  }
  void row_negate(int a) {
    for (int j = 0; j < s.cols(); ++j) s.at(a, j) = -s.at(a, j);
    if (o.want_u)
      for (int j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    if (o.want_u_inv)
      for (int i = 0; i < ui.rows(); ++i) ui.at(i, a) = -ui.at(i, a);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, const SnfOptions& opts) {
  const int rows = m.rows(), cols = m.cols();
  Elim e;
  e.s = m;
  e.o = opts;
  if (opts.want_u) e.u = IntMatrix::identity(rows);
  if (opts.want_v) e.v = IntMatrix::identity(cols);
  if (opts.want_u_inv) e.ui = IntMatrix::identity(rows);
  if (opts.want_v_inv) e.vi = IntMatrix::identity(cols);

  const int steps = std::min(rows, cols);
  int t = 0;
  for (; t < steps; ++t) {
    // Deterministic pivot: smallest nonzero |entry|, row-major tie break.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const Int& x = e.s.at(i, j);
        if (x == 0) continue;
        if (pi < 0 || abs(x) < abs(e.s.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // remaining block is zero
    e.row_swap(t, pi);
    e.col_swap(t, pj);

    for (;;) {
      // Clear column t below the pivot.
      bool moved = true;
      while (moved) {
        moved = false;
        for (int i = t + 1; i < rows; ++i) {
          while (e.s.at(i, t) != 0) {
            Int q = e.s.at(i, t) / e.s.at(t, t);
            if (q != 0) e.row_add(i, t, -q);
            if (e.s.at(i, t) != 0) {
              e.row_swap(t, i);  // strictly smaller pivot
              moved = true;
            }
          }
        }
        for (int j = t + 1; j < cols; ++j) {
          while (e.s.at(t, j) != 0) {
            Int q = e.s.at(t, j) / e.s.at(t, t);
            if (q != 0) e.col_add(j, t, -q);
            if (e.s.at(t, j) != 0) {
              e.col_swap(t, j);
              moved = true;
            }
          }
        }
      }
      // Enforce divisibility of the trailing block by the pivot.
      int bi = -1, bj = -1;
      for (int i = t + 1; i < rows && bi < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (e.s.at(i, j) % e.s.at(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      (void)bj;
      e.row_add(t, bi, 1);  // drag a bad row into the pivot row, re-reduce
    }
    if (e.s.at(t, t) < 0) e.row_negate(t);
  }

  SnfResult r;
  r.s = std::move(e.s);
  r.u = std::move(e.u);
  r.v = std::move(e.v);
  r.u_inv = std::move(e.ui);
  r.v_inv = std::move(e.vi);
  r.rank = t;
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SnfOptions o;
  o.want_u = false;
  o.want_v = true;
  SnfResult f = smith_normal_form(a, o);
  // Kernel of s is the span of the trailing standard basis vectors; push
  // through v.  Unimodularity of v makes the result a basis of the full
  // saturated kernel lattice.
  return f.v.block(0, a.cols(), f.rank, a.cols());
}

std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
  return SnfSolver(a).solve(b);
}

SnfSolver::SnfSolver(const IntMatrix& a) : a_(a) {
  SnfOptions o;
  o.want_u = true;
  o.want_v = true;
  f_ = smith_normal_form(a, o);
}

std::optional<std::vector<Int>> SnfSolver::solve(const std::vector<Int>& b) const {
  if (static_cast<int>(b.size()) != a_.rows()) throw std::invalid_argument("solve rhs length mismatch");
  std::vector<Int> c = f_.u.apply(b);
  std::vector<Int> y(a_.cols(), Int(0));
  for (int i = 0; i < a_.rows(); ++i) {
    if (i < f_.rank) {
      const Int& d = f_.s.at(i, i);
      if (c[i] % d != 0) return std::nullopt;
      if (i < a_.cols()) y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return f_.v.apply(y);
}

std::optional<IntMatrix> SnfSolver::solve_matrix(const IntMatrix& rhs) const {
  if (rhs.rows() != a_.rows()) throw std::invalid_argument("solve_matrix shape mismatch");
  IntMatrix x(a_.cols(), rhs.cols());
  for (int j = 0; j < rhs.cols(); ++j) {
    auto xs = solve(rhs.col(j));
    if (!xs) return std::nullopt;
    for (int i = 0; i < a_.cols(); ++i) x.at(i, j) = (*xs)[i];
  }
  return x;
}

}  // namespace dk
