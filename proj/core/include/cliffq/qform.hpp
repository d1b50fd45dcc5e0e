#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cliffq/linalg.hpp"
#include "cliffq/poly_matrix.hpp"

namespace cliffq {

/// V = O(-a1) + O(-a2) + O(-a3), L = O(d); entry (i, j) of the symmetric
/// matrix has degree a_i + a_j + d.
struct DegreePattern {
  std::array<int, 3> a{};
  int d = 0;

  int entry_degree(std::size_t i, std::size_t j) const { return a[i] + a[j] + d; }
  int discriminant_degree() const { return 2 * (a[0] + a[1] + a[2]) + 3 * d; }
  std::vector<int> matrix_pattern() const;

  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};

/// Line-bundle-valued quadratic form on P^2: a symmetric 3x3 matrix over
/// k[u, v, w] whose nonzero entries follow a DegreePattern.
class QForm {
 public:
  /// Throws AsymmetricEntries or DegreePatternViolation.
  QForm(DegreePattern pattern, PolyMatrix entries);

  const DegreePattern& pattern() const { return pattern_; }
  const PolyMatrix& entries() const { return entries_; }
  Field field() const { return entries_.field(); }

  QForm change_field(Field target) const;

  friend bool operator==(const QForm&, const QForm&) = default;

 private:
  DegreePattern pattern_;
  PolyMatrix entries_;
};

/// Convenience: QForm from the upper triangle (Q11, Q12, Q13, Q22, Q23, Q33).
QForm new_qform(DegreePattern pattern, const std::array<Poly, 6>& upper);

/// a_i -> a_i + m, d -> d - 2m; entries unchanged.
QForm twist(const QForm& q, int m);
/// The m with twist(q, m) satisfying d = -(a1 + a2 + a3).
int normalizing_twist(const DegreePattern& pattern);
QForm normalize(const QForm& q);

/// det of the entries; zero means rank < 3 everywhere.
Poly discriminant(const QForm& q);

/// Point of P^2 stored with its last nonzero coordinate equal to 1.
class FiberPoint {
 public:
  /// Throws InvalidPoint when all coordinates vanish or fields differ.
  FiberPoint(Scalar x, Scalar y, Scalar z);

  const std::array<Scalar, 3>& coordinates() const { return coords_; }
  Field field() const { return coords_[0].field(); }
  /// Index of the coordinate normalized to 1.
  std::size_t chart() const;
  std::string to_string() const;

  friend bool operator==(const FiberPoint&, const FiberPoint&) = default;

 private:
  std::array<Scalar, 3> coords_;
};

/// All p^2 + p + 1 points of P^2(F_p), in a fixed order.
std::vector<FiberPoint> projective_plane(Field field);

ScalarMatrix evaluate_at(const QForm& q, const FiberPoint& p);
int rank_at(const QForm& q, const FiberPoint& p);

enum class ConicType { SmoothConic, LinePair, DoubleLine, WholePlane };
const char* to_string(ConicType type);
ConicType conic_type_of_rank(std::size_t rank);
ConicType fiber_conic_type(const QForm& q, const FiberPoint& p);
ConicType fiber_conic_type(const ScalarMatrix& fiber);

enum class Verdict { Holds, Fails, Inconclusive };

struct NowhereZeroResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<FiberPoint> witness;
  std::size_t points_checked = 0;
};

/// Exhaustive over P^2(F_p) when q is over F_p. Over Q only a sampled
/// search is possible: it reports Fails with a witness or Inconclusive.
NowhereZeroResult is_nowhere_zero(const QForm& q, unsigned workers = 1);
NowhereZeroResult sample_nowhere_zero(const QForm& q, std::size_t samples, std::uint64_t seed);

enum class SingularityType { SmoothPoint, Node, WorseSingularity, NotOnCurve };
const char* to_string(SingularityType type);

/// Local type of the plane curve f = 0 at p, using the affine chart in
/// which p's last nonzero coordinate is 1. Throws ZeroPolynomial.
SingularityType singularity_type_at(const Poly& f, const FiberPoint& p);

}  // namespace cliffq
