#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cliffq/linalg.hpp"
#include "cliffq/poly.hpp"

namespace cliffq {

/// Dense row-major matrix of polynomials sharing one ring and field.
/// An optional degree pattern pins the degree of every nonzero entry.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, Ring ring, Field field);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  static PolyMatrix identity(std::size_t n, Ring ring, Field field);
  static PolyMatrix diagonal(std::vector<Poly> diagonal);
  /// Symmetric 3x3 from the upper triangle (11, 12, 13, 22, 23, 33).
  static PolyMatrix symmetric3(std::span<const Poly> upper);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }
  Field field() const { return field_; }

  Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Every nonzero entry (r, c) must have degree pattern[r * cols + c];
  /// throws DegreeMismatch otherwise.
  void set_degree_pattern(std::vector<int> pattern);
  const std::optional<std::vector<int>>& degree_pattern() const { return pattern_; }
  bool matches_pattern(std::span<const int> pattern) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  PolyMatrix transpose() const;
  PolyMatrix operator-() const;
  friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);
  friend PolyMatrix operator*(const Poly& lhs, PolyMatrix rhs);
  friend bool operator==(const PolyMatrix& lhs, const PolyMatrix& rhs);

  ScalarMatrix evaluate(std::span<const Scalar> point) const;
  PolyMatrix change_field(Field target) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Ring ring_;
  Field field_;
  std::vector<Poly> entries_;
  std::optional<std::vector<int>> pattern_;
};

/// Determinant by Laplace expansion over column subsets; any square size.
Poly determinant(const PolyMatrix& m);

/// Cofactor expansion of a 3x3; DegreeMismatch if the result is not
/// homogeneous.
Poly det3(const PolyMatrix& m);

/// Transpose of the cofactor matrix; m * adjugate3(m) = det3(m) * I.
/// DegreeMismatch if some cofactor is inhomogeneous.
PolyMatrix adjugate3(const PolyMatrix& m);

/// Determinant of m with one row and one column removed (0-based).
/// IndexOutOfRange for bad indices or matrices smaller than 2x2.
Poly minor(const PolyMatrix& m, std::size_t drop_row, std::size_t drop_col);

}  // namespace cliffq
