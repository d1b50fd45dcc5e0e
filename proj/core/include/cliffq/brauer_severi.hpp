#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cliffq/poly_matrix.hpp"
#include "cliffq/qform.hpp"

namespace cliffq {

/// A symmetric 3x3 polynomial matrix over an arbitrary base ring, together
/// with the fiber-coordinate weights. For a QForm the base ring is
/// k[u, v, w] and alpha_i has weight -a_i; the universal form uses six
/// symmetric symbols q11..q33 of weight 0.
struct ConicFamily {
  PolyMatrix entries;
  std::array<int, 3> alpha_weights{};
  std::vector<int> base_weights;

  static ConicFamily from_form(const QForm& q);
  /// Entries q11, q12, q13, q22, q23, q33 as independent variables over `field`.
  static ConicFamily universal(Field field);
};

/// Polynomial in alpha1..alpha3 followed by the base-ring variables. Each
/// variable carries a weight (alpha_i: -a_i, u/v/w: 1, universal symbols: 0).
struct BiPoly {
  Poly poly;
  std::vector<int> weights;

  /// Common alpha-degree of all terms; nullopt for zero or mixed degrees.
  std::optional<unsigned> alpha_degree() const;
  /// Common weighted degree of all terms; nullopt for zero or when terms
  /// disagree.
  std::optional<int> weighted_degree() const;
};

/// Ring (alpha1, alpha2, alpha3, base variables...).
Ring fiber_ring(const Ring& base);
Poly alpha(const Ring& fiber, Field field, std::size_t i);

/// q(alpha) = sum_ij Q_ij alpha_i alpha_j.
BiPoly conic_equation(const ConicFamily& family);
inline BiPoly conic_equation(const QForm& q) { return conic_equation(ConicFamily::from_form(q)); }

/// The 4x4 matrix whose rows are the functionals alpha, alpha X, alpha Y,
/// alpha Z on the even Clifford algebra with basis (1, yz, zx, xy).
PolyMatrix bs_matrix(const ConicFamily& family);
inline PolyMatrix bs_matrix(const QForm& q) { return bs_matrix(ConicFamily::from_form(q)); }

struct MinorEntry {
  std::size_t row = 0;  // 1-based, dropped row
  std::size_t col = 0;  // 1-based, dropped column
  Poly minor;
  Poly quotient;  // minor / q(alpha)
};

struct NamedMinor {
  std::size_t row = 0;
  std::size_t col = 0;
  Poly expected;
  Poly actual;
  bool holds = false;
  std::string label;  // "alpha1*q" etc.
};

struct MinorReport {
  BiPoly conic;
  PolyMatrix matrix;
  std::vector<MinorEntry> minors;  // all sixteen, row-major
  std::vector<NamedMinor> named;   // (4,3) = a1 q, (3,2) = a3 q, (2,4) = -a2 q
  bool all_divisible = false;
  bool named_hold = false;
};

/// Computes all sixteen 3x3 minors, divides each by q(alpha) and checks the
/// three exact identities (4,3) = alpha1 q, (3,2) = alpha3 q,
/// (2,4) = -alpha2 q. Throws MinorNotDivisible if a minor has a remainder.
MinorReport verify_minors(const ConicFamily& family, unsigned workers = 1);
inline MinorReport verify_minors(const QForm& q, unsigned workers = 1) {
  return verify_minors(ConicFamily::from_form(q), workers);
}

/// The identities in the other labelling, (3,2) = -alpha2 q and
/// (2,4) = alpha3 q, checked literally against the same matrix.
std::vector<NamedMinor> swapped_label_claims(const MinorReport& report);

/// q(alpha) = 0 at (base, alpha), cross-checked against
/// rank(bs_matrix at (base, alpha)) <= 2; InternalError if they disagree.
bool bs_membership(const QForm& q, const FiberPoint& base, const FiberPoint& alpha);

/// Number of alpha in P^2(F_p) with alpha^T fiber alpha = 0.
std::size_t conic_point_count(const ScalarMatrix& fiber);
/// The count predicted from the rank: p+1 (rank 3), 2p+1 or 1 (rank 2,
/// split or not), p+1 (rank 1), p^2+p+1 (rank 0).
std::size_t expected_conic_point_count(const ScalarMatrix& fiber);

}  // namespace cliffq
