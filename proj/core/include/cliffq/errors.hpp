#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cliffq {

/// Coarse failure classes. The numeric values are the CLI exit codes.
enum class ErrorCategory {
  InvalidInput = 1,
  MathematicalFailure = 2,
  InternalInvariant = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string_view kind, const std::string& message)
      : std::runtime_error(message), category_(category), kind_(kind) {}

  ErrorCategory category() const noexcept { return category_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  ErrorCategory category_;
  std::string kind_;
};

template <std::size_t N>
struct ErrorName {
  constexpr ErrorName(const char (&text)[N]) { std::copy_n(text, N, value); }
  constexpr std::string_view view() const { return {value, N - 1}; }
  char value[N];
};

template <ErrorName Name, ErrorCategory Category>
class TaggedError : public Error {
 public:
  explicit TaggedError(const std::string& message)
      : Error(Category, Name.view(), message) {}
};

// exactpoly
using SyntaxError = TaggedError<"SyntaxError", ErrorCategory::InvalidInput>;
using InhomogeneousError = TaggedError<"InhomogeneousError", ErrorCategory::InvalidInput>;
using UnknownVariable = TaggedError<"UnknownVariable", ErrorCategory::InvalidInput>;
using InvalidField = TaggedError<"InvalidField", ErrorCategory::InvalidInput>;
using DivisionByZero = TaggedError<"DivisionByZero", ErrorCategory::MathematicalFailure>;
using DegreeMismatch = TaggedError<"DegreeMismatch", ErrorCategory::InvalidInput>;
using IndexOutOfRange = TaggedError<"IndexOutOfRange", ErrorCategory::InvalidInput>;
using NotDivisible = TaggedError<"NotDivisible", ErrorCategory::MathematicalFailure>;
using NotAPerfectSquare = TaggedError<"NotAPerfectSquare", ErrorCategory::MathematicalFailure>;
using NonExpandable = TaggedError<"NonExpandable", ErrorCategory::MathematicalFailure>;
using DomainMismatch = TaggedError<"DomainMismatch", ErrorCategory::InternalInvariant>;

// qform
using AsymmetricEntries = TaggedError<"AsymmetricEntries", ErrorCategory::InvalidInput>;
using DegreePatternViolation = TaggedError<"DegreePatternViolation", ErrorCategory::InvalidInput>;
using InvalidPoint = TaggedError<"InvalidPoint", ErrorCategory::InvalidInput>;
using ZeroPolynomial = TaggedError<"ZeroPolynomial", ErrorCategory::InvalidInput>;

// clifford
using InvalidAlgebra = TaggedError<"InvalidAlgebra", ErrorCategory::MathematicalFailure>;
using NotRecoverable = TaggedError<"NotRecoverable", ErrorCategory::MathematicalFailure>;
using OddDegree = TaggedError<"OddDegree", ErrorCategory::InvalidInput>;

// brauer_severi
using MinorNotDivisible = TaggedError<"MinorNotDivisible", ErrorCategory::InternalInvariant>;

// invariants / catalog
using InconsistentInvariants = TaggedError<"InconsistentInvariants", ErrorCategory::MathematicalFailure>;
using UnknownTag = TaggedError<"UnknownTag", ErrorCategory::InvalidInput>;
using DegenerateAfterRetries = TaggedError<"DegenerateAfterRetries", ErrorCategory::MathematicalFailure>;
using BasePointSingular = TaggedError<"BasePointSingular", ErrorCategory::MathematicalFailure>;
using InvalidNet = TaggedError<"InvalidNet", ErrorCategory::InvalidInput>;

// cli
using InvalidDocument = TaggedError<"InvalidDocument", ErrorCategory::InvalidInput>;
using InternalError = TaggedError<"InternalError", ErrorCategory::InternalInvariant>;

}  // namespace cliffq
