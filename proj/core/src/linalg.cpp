#include "cliffq/linalg.hpp"

#include <sstream>
#include <utility>

#include "cliffq/errors.hpp"

namespace cliffq {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

ScalarMatrix::ScalarMatrix(Field field, std::initializer_list<std::initializer_list<long>> rows)
    : ScalarMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size(), field) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw IndexOutOfRange("ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = Scalar(field, v);
    ++r;
  }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n, Field field) {
  ScalarMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

bool ScalarMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix out(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

ScalarMatrix ScalarMatrix::operator-() const {
  ScalarMatrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

ScalarMatrix operator*(const ScalarMatrix& lhs, const ScalarMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw IndexOutOfRange("matrix product dimension mismatch");
  ScalarMatrix out(lhs.rows_, rhs.cols_, lhs.field_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      Scalar acc = Scalar::zero(lhs.field_);
      for (std::size_t k = 0; k < lhs.cols_; ++k) acc += lhs(i, k) * rhs(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

ScalarMatrix operator*(const Scalar& lhs, ScalarMatrix rhs) {
  for (auto& v : rhs.data_) v *= lhs;
  return rhs;
}

bool operator==(const ScalarMatrix& lhs, const ScalarMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

std::string ScalarMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(ScalarMatrix m) { return row_reduce(m).size(); }

Scalar determinant(ScalarMatrix m) {
  if (m.rows() != m.cols()) throw IndexOutOfRange("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(m.field());
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(pivot, c));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

ScalarMatrix adjugate3(const ScalarMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw IndexOutOfRange("adjugate3 needs a 3x3 matrix");
  ScalarMatrix out(3, 3, m.field());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      const std::size_t r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
      const std::size_t c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
      Scalar minor = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      out(i, j) = (i + j) % 2 == 0 ? minor : -minor;
    }
  }
  return out;
}

std::vector<ScalarVector> nullspace(ScalarMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ScalarVector v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ScalarVector> solve(ScalarMatrix m, ScalarVector b) {
  if (b.size() != m.rows()) throw IndexOutOfRange("right-hand side has wrong length");
  ScalarMatrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  ScalarVector x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

}  // namespace cliffq
