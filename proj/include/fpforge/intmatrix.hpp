#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

namespace fpforge {

using Int = boost::multiprecision::cpp_int;

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);

  // Exact determinant (square matrices; cofactor/Bareiss hybrid).
  Int determinant() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// U * M * V = D with U, V unimodular, D diagonal with d1 | d2 | ... | dr > 0
// followed by zeros.
struct SmithDecomposition {
  IntMatrix D, U, V;
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;  // the positive diagonal entries, in order
};

SmithDecomposition snf(const IntMatrix& m);

// Solves n * M = b over the integers; returns std::nullopt when b is not in
// the row lattice of M. Any valid solution may be returned.
std::optional<std::vector<Int>> solve_left(const IntMatrix& m, const std::vector<Int>& b);

}  // namespace fpforge
