#include "fpforge/intmatrix.hpp"

#include <algorithm>

#include "fpforge/error.hpp"

namespace fpforge {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix dimension mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += factor * at(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += factor * at(k, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw ValidationError("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = *this;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Locates the entry of minimal non-zero absolute value in the submatrix
// starting at (s, s); ties break to the lowest row, then column index.
bool find_pivot(const IntMatrix& a, std::size_t s, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = s; i < a.rows(); ++i)
    for (std::size_t j = s; j < a.cols(); ++j) {
      const Int& v = a.at(i, j);
      if (v == 0) continue;
      Int av = abs_int(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& m) {
  SmithDecomposition out;
  std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  std::size_t limit = std::min(rows, cols);
  std::size_t s = 0;
  for (; s < limit; ++s) {
    std::size_t pi = s, pj = s;
    if (!find_pivot(a, s, pi, pj)) break;
    a.swap_rows(s, pi);
    u.swap_rows(s, pi);
    a.swap_cols(s, pj);
    v.swap_cols(s, pj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (a.at(i, s) == 0) continue;
        Int q = a.at(i, s) / a.at(s, s);
        a.add_row_multiple(i, s, -q);
        u.add_row_multiple(i, s, -q);
        if (a.at(i, s) != 0) {
          // Remainder is smaller than the pivot; promote it.
          a.swap_rows(s, i);
          u.swap_rows(s, i);
          dirty = true;
        }
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (a.at(s, j) == 0) continue;
        Int q = a.at(s, j) / a.at(s, s);
        a.add_col_multiple(j, s, -q);
        v.add_col_multiple(j, s, -q);
        if (a.at(s, j) != 0) {
          a.swap_cols(s, j);
          v.swap_cols(s, j);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility of the rest.
      bool fixed = true;
      for (std::size_t i = s + 1; i < rows && fixed; ++i)
        for (std::size_t j = s + 1; j < cols && fixed; ++j)
          if (a.at(i, j) % a.at(s, s) != 0) {
            a.add_col_multiple(s, j, 1);
            v.add_col_multiple(s, j, 1);
            fixed = false;
          }
      if (fixed) break;
    }

    if (a.at(s, s) < 0) {
      a.negate_row(s);
      u.negate_row(s);
    }
  }

  out.rank = s;
  out.D = a;
  out.U = u;
  out.V = v;
  for (std::size_t i = 0; i < s; ++i) out.invariant_factors.push_back(a.at(i, i));
  return out;
}

std::optional<std::vector<Int>> solve_left(const IntMatrix& m, const std::vector<Int>& b) {
  if (b.size() != m.cols()) throw ValidationError("solve_left: dimension mismatch");
  SmithDecomposition s = snf(m);

  // n*M = b  <=>  y*D = b*V with n = y*U.
  std::vector<Int> c(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int acc = 0;
    for (std::size_t k = 0; k < m.cols(); ++k) acc += b[k] * s.V.at(k, j);
    c[j] = acc;
  }
  std::vector<Int> y(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j < s.rank) {
      const Int& d = s.D.at(j, j);
      if (c[j] % d != 0) return std::nullopt;
      y[j] = c[j] / d;
    } else if (c[j] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> n(m.rows());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    Int acc = 0;
    for (std::size_t k = 0; k < m.rows(); ++k) acc += y[k] * s.U.at(k, j);
    n[j] = acc;
  }
  return n;
}

}  // namespace fpforge
