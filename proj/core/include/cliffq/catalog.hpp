#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "cliffq/invariants.hpp"
#include "cliffq/linalg.hpp"
#include "cliffq/poly_matrix.hpp"
#include "cliffq/qform.hpp"

namespace cliffq {

struct Resolution {
  BundleDescriptor source;
  BundleDescriptor target;
};

struct DelPezzoType {
  DelPezzoTag tag = DelPezzoTag::F23;
  /// nullopt for F25plus, which comes from a net of quadrics.
  std::optional<DegreePattern> pattern;
  int discriminant_degree = 0;
  BundleDescriptor vstar;
  std::string bs_description;
  int h12 = 0;
  Resolution resolution;
};

const DelPezzoType& delpezzo_type(DelPezzoTag tag);
Resolution resolution_metadata(DelPezzoTag tag);

/// V* = O(a1') + O(a2') + O(a3') for the normalized pattern a'.
BundleDescriptor vstar_of_pattern(const DegreePattern& pattern);

/// Throws UnknownTag for F25plus (no degree pattern).
DegreePattern pattern_of(DelPezzoTag tag);

/// Homogeneous polynomial in u, v, w with every monomial of the given
/// degree. Coefficients are uniform in F_p, or uniform integers in
/// [-9, 9] over Q. Negative degree gives zero.
Poly random_homogeneous(int degree, Field field, std::mt19937_64& rng);

/// Form with the tag's pattern from given upper-triangle entries.
QForm make_type(DelPezzoTag tag, const std::array<Poly, 6>& upper);
/// Seeded pseudorandom form; retries up to 100 times until the
/// discriminant is nonzero, then throws DegenerateAfterRetries.
QForm make_type(DelPezzoTag tag, std::uint64_t seed, Field field);

inline constexpr int kMaxRetries = 100;

/// 5x5 symmetric matrix of linear forms in u, v, w with A55 = 0 and fifth
/// row (u, v, w, 0, 0), so the base point p = e5 lies on every quadric.
class QuadricNet {
 public:
  /// Throws InvalidNet.
  explicit QuadricNet(PolyMatrix a);
  /// From the 15 upper-triangle entries, row-major.
  static QuadricNet from_upper(const std::array<Poly, 15>& upper);

  const PolyMatrix& matrix() const { return a_; }
  Field field() const { return a_.field(); }
  std::array<Poly, 15> upper() const;

 private:
  PolyMatrix a_;
};

/// Seeded net with random linear entries in the free 4x4 block; retries
/// until det5 is nonzero.
QuadricNet random_net(std::uint64_t seed, Field field);

/// Fiberwise conic forms of the projected net.
class F25PlusProvider {
 public:
  explicit F25PlusProvider(QuadricNet net);

  const QuadricNet& net() const { return net_; }
  /// det of the 5x5 matrix, a quintic unless degenerate.
  const Poly& det5() const { return det5_; }

  /// Gram matrix of A(q) on ker(p^T A(q)) / <p>, basis from the reduced
  /// echelon kernel with the e5 vector dropped. Throws BasePointSingular.
  ScalarMatrix form_at(const FiberPoint& q) const;
  bool det5_vanishes_at(const FiberPoint& q) const;

 private:
  QuadricNet net_;
  Poly det5_;
};

F25PlusProvider make_f25plus(QuadricNet net);

}  // namespace cliffq
