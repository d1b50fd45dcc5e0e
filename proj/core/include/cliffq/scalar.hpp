#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace cliffq {

/// The base field: either the rationals or F_p for an odd prime p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws InvalidField unless p is an odd prime below 2^31.
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr bool is_prime() const { return p_ != 0; }
  /// 0 for the rationals.
  constexpr std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (gmpxx canonicalizes); residues live in [0, p).
/// Combining elements of different fields throws DomainMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpz_class& value);

  /// num/den mapped into `field`; DivisionByZero if den vanishes there.
  static Scalar fraction(Field field, const mpz_class& num, const mpz_class& den);
  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only valid over the rationals.
  const mpq_class& rational() const;
  /// Only valid over F_p.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  bool is_square() const;
  /// Canonical square root when one exists in the field: the positive root
  /// over Q, the root with the smaller residue over F_p.
  std::optional<Scalar> sqrt() const;
  /// Sign normalization used for canonical forms: over Q the sign of the
  /// value; over F_p, +1 for residues in [1, (p-1)/2], -1 above.
  int sign() const;

  /// "-1/3", "7"; residues print as their canonical representative.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  Field field_{};
  std::variant<mpq_class, std::uint64_t> value_{mpq_class(0)};
};

bool is_prime(std::uint64_t n);

}  // namespace cliffq
