#include "cliffq/poly_matrix.hpp"

#include <bit>
#include <unordered_map>

#include "cliffq/errors.hpp"

namespace cliffq {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, Ring ring, Field field)
    : rows_(rows), cols_(cols), ring_(ring), field_(field),
      entries_(rows * cols, Poly(ring, field)) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols),
      ring_(entries.empty() ? Ring::uvw() : entries.front().ring()),
      field_(entries.empty() ? Field::rationals() : entries.front().field()),
      entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw IndexOutOfRange("entry count does not match shape");
  for (const auto& e : entries_) {
    if (e.field() != field_ || !(e.ring() == ring_)) {
      throw DomainMismatch("matrix entries over different rings or fields");
    }
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n, Ring ring, Field field) {
  PolyMatrix m(n, n, ring, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(ring, field, 1);
  return m;
}

PolyMatrix PolyMatrix::diagonal(std::vector<Poly> diagonal) {
  if (diagonal.empty()) throw IndexOutOfRange("empty diagonal");
  const std::size_t n = diagonal.size();
  PolyMatrix m(n, n, diagonal.front().ring(), diagonal.front().field());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = std::move(diagonal[i]);
  return m;
}

PolyMatrix PolyMatrix::symmetric3(std::span<const Poly> upper) {
  if (upper.size() != 6) throw IndexOutOfRange("symmetric3 needs 6 upper-triangle entries");
  return PolyMatrix(3, 3,
                    {upper[0], upper[1], upper[2],
                     upper[1], upper[3], upper[4],
                     upper[2], upper[4], upper[5]});
}

bool PolyMatrix::matches_pattern(std::span<const int> pattern) const {
  if (pattern.size() != entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto deg = entries_[i].degree();
    if (!deg) continue;
    if (pattern[i] < 0 || !entries_[i].is_homogeneous() || static_cast<int>(*deg) != pattern[i]) {
      return false;
    }
  }
  return true;
}

void PolyMatrix::set_degree_pattern(std::vector<int> pattern) {
  if (!matches_pattern(pattern)) throw DegreeMismatch("entries do not match the degree pattern");
  pattern_ = std::move(pattern);
}

bool PolyMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(cols_, rows_, ring_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw IndexOutOfRange("matrix product dimension mismatch");
  PolyMatrix out(lhs.rows_, rhs.cols_, lhs.ring_, lhs.field_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      Poly acc(lhs.ring_, lhs.field_);
      for (std::size_t k = 0; k < lhs.cols_; ++k) acc += lhs(i, k) * rhs(k, j);
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix operator*(const Poly& lhs, PolyMatrix rhs) {
  for (auto& e : rhs.entries_) e = lhs * e;
  rhs.pattern_.reset();
  return rhs;
}

bool operator==(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
}

ScalarMatrix PolyMatrix::evaluate(std::span<const Scalar> point) const {
  ScalarMatrix out(rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).evaluate(point);
  }
  return out;
}

PolyMatrix PolyMatrix::change_field(Field target) const {
  PolyMatrix out(rows_, cols_, ring_, target);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].change_field(target);
  out.pattern_ = pattern_;
  return out;
}

namespace {

// Determinant of the rows [row, n) restricted to the columns in `mask`.
class LaplaceExpansion {
 public:
  explicit LaplaceExpansion(const PolyMatrix& m) : m_(m) {}

  Poly run() {
    const std::size_t n = m_.rows();
    if (n == 0) return Poly::constant(m_.ring(), m_.field(), 1);
    return expand(0, (std::uint32_t{1} << n) - 1);
  }

 private:
  Poly expand(std::size_t row, std::uint32_t mask) {
    if (mask == 0) return Poly::constant(m_.ring(), m_.field(), 1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Poly total(m_.ring(), m_.field());
    int sign = 1;
    for (std::size_t col = 0; col < m_.cols(); ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if ((mask & bit) == 0) continue;
      const Poly& entry = m_(row, col);
      if (!entry.is_zero()) {
        Poly term = entry * expand(row + 1, mask & ~bit);
        if (sign > 0) {
          total += term;
        } else {
          total -= term;
        }
      }
      sign = -sign;
    }
    memo_.emplace(mask, total);
    return total;
  }

  const PolyMatrix& m_;
  std::unordered_map<std::uint32_t, Poly> memo_;
};

PolyMatrix drop(const PolyMatrix& m, std::size_t drop_row, std::size_t drop_col) {
  PolyMatrix out(m.rows() - 1, m.cols() - 1, m.ring(), m.field());
  for (std::size_t i = 0, r = 0; i < m.rows(); ++i) {
    if (i == drop_row) continue;
    for (std::size_t j = 0, c = 0; j < m.cols(); ++j) {
      if (j == drop_col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

void require_homogeneous(const Poly& p, const char* what) {
  if (!p.is_homogeneous()) {
    throw DegreeMismatch(std::string(what) + " is not homogeneous: " + p.to_string());
  }
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw IndexOutOfRange("determinant of a non-square matrix");
  if (m.rows() > 20) throw IndexOutOfRange("determinant limited to 20x20");
  return LaplaceExpansion(m).run();
}

Poly det3(const PolyMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw IndexOutOfRange("det3 needs a 3x3 matrix");
  Poly det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  require_homogeneous(det, "determinant");
  return det;
}

PolyMatrix adjugate3(const PolyMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw IndexOutOfRange("adjugate3 needs a 3x3 matrix");
  PolyMatrix out(3, 3, m.ring(), m.field());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
      const std::size_t c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
      Poly cofactor = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      require_homogeneous(cofactor, "cofactor");
      out(i, j) = (i + j) % 2 == 0 ? cofactor : -cofactor;
    }
  }
  return out;
}

Poly minor(const PolyMatrix& m, std::size_t drop_row, std::size_t drop_col) {
  if (m.rows() < 2 || m.cols() < 2 || !m.is_square()) {
    throw IndexOutOfRange("minor needs a square matrix of size at least 2");
  }
  if (drop_row >= m.rows() || drop_col >= m.cols()) {
    throw IndexOutOfRange("minor index (" + std::to_string(drop_row) + ", " +
                          std::to_string(drop_col) + ") out of range");
  }
  return determinant(drop(m, drop_row, drop_col));
}

}  // namespace cliffq
