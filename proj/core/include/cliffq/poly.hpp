#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffq/scalar.hpp"

namespace cliffq {

inline constexpr std::size_t kMaxVariables = 12;

/// Exponent vector. Ordered graded-lexicographically with variable 0 the
/// largest, so for the ring (u, v, w) we get u > v > w.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t index) const { return exponents_[index]; }
  unsigned degree() const { return degree_; }

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& rhs) const;
  /// rhs / *this; caller checks divides() first.
  Monomial quotient_of(const Monomial& rhs) const;
  /// Exponent in variable `index` lowered by one; caller checks it is positive.
  Monomial lowered(std::size_t index) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs);

 private:
  std::array<std::uint16_t, kMaxVariables> exponents_{};
  unsigned degree_ = 0;
};

/// Ordered list of variable names. Copies share storage.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  static Ring uvw();

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t index) const { return (*names_)[index]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& lhs, const Ring& rhs) {
    return lhs.names_ == rhs.names_ || *lhs.names_ == *rhs.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse multivariate polynomial over a Field. Terms are kept sorted in
/// strictly decreasing graded-lex order with no zero coefficients, so
/// structural equality is polynomial equality. Immutable apart from the
/// compound-assignment operators.
class Poly {
 public:
  struct Term {
    Monomial monomial;
    Scalar coefficient;
  };

  /// Zero polynomial in k[u, v, w] over Q; a placeholder for containers.
  Poly() : Poly(Ring::uvw(), Field::rationals()) {}
  Poly(Ring ring, Field field);

  static Poly constant(Ring ring, const Scalar& value);
  static Poly constant(Ring ring, Field field, long value);
  static Poly variable(Ring ring, Field field, std::size_t index);
  static Poly term(Ring ring, const Monomial& monomial, const Scalar& coefficient);

  const Ring& ring() const { return ring_; }
  Field field() const { return field_; }

  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  /// Total degree of the leading term; nullopt for the zero polynomial,
  /// which fits any degree slot.
  std::optional<unsigned> degree() const;
  bool is_homogeneous() const;
  const Term& leading_term() const;
  Scalar coefficient(const Monomial& monomial) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Scalar& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Scalar& lhs, Poly rhs) { return rhs *= lhs; }

  friend bool operator==(const Poly& lhs, const Poly& rhs);

  Poly pow(unsigned exponent) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  Poly partial_derivative(std::size_t index) const;
  /// Rename into `target`: variable i of this ring becomes variable
  /// index_map[i] of the target.
  Poly embed(const Ring& target, std::span<const std::size_t> index_map) const;
  /// Same monomials, coefficients mapped into another field (Q -> F_p).
  Poly change_field(Field target) const;

  /// Grammar-compatible rendering: "u^2 + 2*u*v - 1/3*w^2", "0".
  std::string to_string() const;

 private:
  friend class PolyBuilder;
  void require_compatible(const Poly& rhs) const;

  Ring ring_;
  Field field_;
  std::vector<Term> terms_;
};

/// Accumulates terms in any order and produces a canonical Poly.
class PolyBuilder {
 public:
  PolyBuilder(Ring ring, Field field) : ring_(std::move(ring)), field_(field) {}
  void add(const Monomial& monomial, const Scalar& coefficient);
  Poly build() &&;

 private:
  Ring ring_;
  Field field_;
  std::vector<Poly::Term> pending_;
};

/// Parses `poly := term (('+'|'-') term)*` with an optional leading sign.
/// Throws SyntaxError, UnknownVariable, InhomogeneousError.
Poly parse_poly(std::string_view text, const Ring& ring, Field field);

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

/// Multivariate division by a single divisor under graded-lex order.
DivisionResult divide_with_remainder(const Poly& f, const Poly& g);

/// h with f = g*h; throws NotDivisible (message carries the remainder).
Poly divide_exact(const Poly& f, const Poly& g);

/// g with g*g = f and sign(leading coefficient of g) = +1; throws
/// NotAPerfectSquare.
Poly poly_sqrt(const Poly& f);

}  // namespace cliffq
