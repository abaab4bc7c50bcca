#include "dehn/matrix.hpp"

#include <utility>

#include "dehn/error.hpp"

namespace dehn {

namespace {

void require_same_shape(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
}

void require_square(const FieldMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " of a non-square matrix");
}

void swap_rows(FieldMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::vector<RatFunc> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows x cols");
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FieldMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FieldMatrix FieldMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  FieldMatrix b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void FieldMatrix::set_block(std::size_t r0, std::size_t c0, const FieldMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> cols) const {
  FieldMatrix s(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) s(r, j) = (*this)(r, cols[j]);
  return s;
}

FieldMatrix FieldMatrix::hconcat(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hconcat row counts differ");
  FieldMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

FieldMatrix& FieldMatrix::operator+=(const FieldMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

FieldMatrix& FieldMatrix::operator-=(const FieldMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes incompatible");
  FieldMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const RatFunc& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

FieldMatrix operator*(const RatFunc& s, FieldMatrix m) {
  for (auto& e : m.entries_) e *= s;
  return m;
}

RrefResult matrix_rref(const FieldMatrix& m) {
  RrefResult out{m, {}, 0};
  FieldMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    swap_rows(a, row, pivot);
    RatFunc inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      RatFunc f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = out.pivot_columns.size();
  return out;
}

std::size_t matrix_rank(const FieldMatrix& m) { return matrix_rref(m).rank; }

RatFunc matrix_det(const FieldMatrix& m) {
  require_square(m, "determinant");
  FieldMatrix a = m;
  const std::size_t n = a.rows();
  RatFunc det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != col) {
      swap_rows(a, col, pivot);
      det = -det;
    }
    det *= a(col, col);
    RatFunc inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      RatFunc f = a(r, col) * inv;
      for (std::size_t c = col + 1; c < n; ++c)
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

FieldMatrix matrix_inverse(const FieldMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  RrefResult r = matrix_rref(FieldMatrix::hconcat(m, FieldMatrix::identity(n)));
  if (r.rank < n || r.pivot_columns[n - 1] != n - 1)
    throw Error(ErrorKind::DivisionByZero, "matrix is singular");
  return r.reduced.block(0, n, n, n);
}

}  // namespace dehn
