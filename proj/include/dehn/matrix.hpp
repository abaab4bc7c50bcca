#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dehn/ratfunc.hpp"

namespace dehn {

// Dense row-major matrix over Q(t).
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  // Throws Error(DimensionMismatch) unless entries.size() == rows * cols.
  FieldMatrix(std::size_t rows, std::size_t cols, std::vector<RatFunc> entries);

  static FieldMatrix identity(std::size_t n);
  static FieldMatrix scalar(const RatFunc& x) { return FieldMatrix(1, 1, {x}); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  RatFunc& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const RatFunc& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const RatFunc> entries() const { return entries_; }

  FieldMatrix transpose() const;
  // Copy of the block with top-left corner (r0, c0).
  FieldMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const FieldMatrix& b);
  FieldMatrix select_columns(std::span<const std::size_t> cols) const;
  // [a | b]
  static FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b);

  FieldMatrix& operator+=(const FieldMatrix& o);
  FieldMatrix& operator-=(const FieldMatrix& o);
  friend FieldMatrix operator+(FieldMatrix a, const FieldMatrix& b) { return a += b; }
  friend FieldMatrix operator-(FieldMatrix a, const FieldMatrix& b) { return a -= b; }
  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator*(const RatFunc& s, FieldMatrix m);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> entries_;
};

struct RrefResult {
  FieldMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

// Reduced row echelon form. Pivots are chosen as the first nonzero entry
// scanning each column top to bottom, so the result is deterministic.
RrefResult matrix_rref(const FieldMatrix& m);
std::size_t matrix_rank(const FieldMatrix& m);
// Throws Error(DimensionMismatch) for non-square input.
RatFunc matrix_det(const FieldMatrix& m);
// Throws Error(DimensionMismatch) for non-square input and
// Error(DivisionByZero) for singular input.
FieldMatrix matrix_inverse(const FieldMatrix& m);

}  // namespace dehn
