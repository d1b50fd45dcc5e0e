#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cliffq/scalar.hpp"

namespace cliffq {

using ScalarVector = std::vector<Scalar>;

/// Dense row-major matrix over a Field.
class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t rows, std::size_t cols, Field field);
  ScalarMatrix(Field field, std::initializer_list<std::initializer_list<long>> rows);

  static ScalarMatrix identity(std::size_t n, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_symmetric() const;
  bool is_zero() const;
  ScalarMatrix transpose() const;
  ScalarMatrix operator-() const;
  friend ScalarMatrix operator*(const ScalarMatrix& lhs, const ScalarMatrix& rhs);
  friend ScalarMatrix operator*(const Scalar& lhs, ScalarMatrix rhs);
  friend bool operator==(const ScalarMatrix& lhs, const ScalarMatrix& rhs);

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Scalar> data_;
};

std::size_t rank(ScalarMatrix m);
Scalar determinant(ScalarMatrix m);
/// Classical adjugate of a 3x3 scalar matrix.
ScalarMatrix adjugate3(const ScalarMatrix& m);

/// Basis of {x : m x = 0} from the reduced row echelon form: one vector per
/// free column, in increasing column order, with a 1 in that column.
std::vector<ScalarVector> nullspace(ScalarMatrix m);

/// Some x with m x = b, or nullopt when inconsistent.
std::optional<ScalarVector> solve(ScalarMatrix m, ScalarVector b);

}  // namespace cliffq
