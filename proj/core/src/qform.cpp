#include "cliffq/qform.hpp"

#include <random>

#include "cliffq/errors.hpp"
#include "cliffq/parallel.hpp"

namespace cliffq {

std::vector<int> DegreePattern::matrix_pattern() const {
  std::vector<int> out;
  out.reserve(9);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out.push_back(entry_degree(i, j));
  }
  return out;
}

QForm::QForm(DegreePattern pattern, PolyMatrix entries)
    : pattern_(pattern), entries_(std::move(entries)) {
  if (entries_.rows() != 3 || entries_.cols() != 3) {
    throw DegreePatternViolation("a quadratic form needs a 3x3 matrix");
  }
  if (!(entries_.ring() == Ring::uvw())) {
    throw DegreePatternViolation("quadratic form entries must live in k[u, v, w]");
  }
  if (!entries_.is_symmetric()) throw AsymmetricEntries("entries are not symmetric");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Poly& e = entries_(i, j);
      const auto deg = e.degree();
      if (!deg) continue;
      const int expected = pattern_.entry_degree(i, j);
      if (!e.is_homogeneous() || static_cast<int>(*deg) != expected) {
        throw DegreePatternViolation("entry Q" + std::to_string(i + 1) + std::to_string(j + 1) +
                                     " = " + e.to_string() + " should be homogeneous of degree " +
                                     std::to_string(expected));
      }
    }
  }
  entries_.set_degree_pattern(pattern_.matrix_pattern());
}

QForm QForm::change_field(Field target) const {
  return QForm(pattern_, entries_.change_field(target));
}

QForm new_qform(DegreePattern pattern, const std::array<Poly, 6>& upper) {
  return QForm(pattern, PolyMatrix::symmetric3(upper));
}

QForm twist(const QForm& q, int m) {
  DegreePattern p = q.pattern();
  for (auto& a : p.a) a += m;
  p.d -= 2 * m;
  return QForm(p, q.entries());
}

int normalizing_twist(const DegreePattern& pattern) {
  return -(pattern.d + pattern.a[0] + pattern.a[1] + pattern.a[2]);
}

QForm normalize(const QForm& q) { return twist(q, normalizing_twist(q.pattern())); }

Poly discriminant(const QForm& q) { return det3(q.entries()); }

// ------------------------------------------------------------- FiberPoint

FiberPoint::FiberPoint(Scalar x, Scalar y, Scalar z) : coords_{std::move(x), std::move(y), std::move(z)} {
  const Field f = coords_[0].field();
  if (coords_[1].field() != f || coords_[2].field() != f) {
    throw InvalidPoint("point coordinates in different fields");
  }
  std::size_t last = 3;
  for (std::size_t i = 3; i-- > 0;) {
    if (!coords_[i].is_zero()) {
      last = i;
      break;
    }
  }
  if (last == 3) throw InvalidPoint("(0:0:0) is not a point of P^2");
  const Scalar inv = coords_[last].inverse();
  for (auto& c : coords_) c *= inv;
}

std::size_t FiberPoint::chart() const {
  for (std::size_t i = 3; i-- > 0;) {
    if (!coords_[i].is_zero()) return i;
  }
  return 2;
}

std::string FiberPoint::to_string() const {
  return coords_[0].to_string() + ":" + coords_[1].to_string() + ":" + coords_[2].to_string();
}

std::vector<FiberPoint> projective_plane(Field field) {
  if (!field.is_prime()) throw InvalidField("projective_plane enumerates P^2(F_p) only");
  const auto p = static_cast<long>(field.characteristic());
  std::vector<FiberPoint> points;
  points.reserve(static_cast<std::size_t>(p * p + p + 1));
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) points.emplace_back(Scalar(field, x), Scalar(field, y), Scalar::one(field));
  }
  for (long x = 0; x < p; ++x) points.emplace_back(Scalar(field, x), Scalar::one(field), Scalar::zero(field));
  points.emplace_back(Scalar::one(field), Scalar::zero(field), Scalar::zero(field));
  return points;
}

ScalarMatrix evaluate_at(const QForm& q, const FiberPoint& p) {
  if (p.field() != q.field()) throw DomainMismatch("point and form over different fields");
  return q.entries().evaluate(p.coordinates());
}

int rank_at(const QForm& q, const FiberPoint& p) {
  return static_cast<int>(rank(evaluate_at(q, p)));
}

const char* to_string(ConicType type) {
  switch (type) {
    case ConicType::SmoothConic: return "SmoothConic";
    case ConicType::LinePair: return "LinePair";
    case ConicType::DoubleLine: return "DoubleLine";
    case ConicType::WholePlane: return "WholePlane";
  }
  return "?";
}

ConicType conic_type_of_rank(std::size_t r) {
  switch (r) {
    case 3: return ConicType::SmoothConic;
    case 2: return ConicType::LinePair;
    case 1: return ConicType::DoubleLine;
    case 0: return ConicType::WholePlane;
    default: throw InternalError("rank " + std::to_string(r) + " of a 3x3 matrix");
  }
}

ConicType fiber_conic_type(const ScalarMatrix& fiber) { return conic_type_of_rank(rank(fiber)); }

ConicType fiber_conic_type(const QForm& q, const FiberPoint& p) {
  return fiber_conic_type(evaluate_at(q, p));
}

NowhereZeroResult is_nowhere_zero(const QForm& q, unsigned workers) {
  if (!q.field().is_prime()) {
    throw InvalidField("exhaustive nowhere-zero check needs a form over F_p");
  }
  const auto points = projective_plane(q.field());
  auto chunks = parallel_chunks(points.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (evaluate_at(q, points[i]).is_zero()) return std::optional<std::size_t>(i);
    }
    return std::optional<std::size_t>();
  });
  NowhereZeroResult result;
  result.points_checked = points.size();
  result.verdict = Verdict::Holds;
  for (const auto& hit : chunks) {
    if (hit) {
      result.verdict = Verdict::Fails;
      result.witness = points[*hit];
      break;
    }
  }
  return result;
}

NowhereZeroResult sample_nowhere_zero(const QForm& q, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-50, 50);
  const Field f = q.field();
  NowhereZeroResult result;
  for (std::size_t i = 0; i < samples; ++i) {
    Scalar x(f, coord(rng)), y(f, coord(rng)), z(f, coord(rng));
    if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
    FiberPoint p(x, y, z);
    ++result.points_checked;
    if (evaluate_at(q, p).is_zero()) {
      result.verdict = Verdict::Fails;
      result.witness = p;
      return result;
    }
  }
  result.verdict = Verdict::Inconclusive;
  return result;
}

const char* to_string(SingularityType type) {
  switch (type) {
    case SingularityType::SmoothPoint: return "SmoothPoint";
    case SingularityType::Node: return "Node";
    case SingularityType::WorseSingularity: return "WorseSingularity";
    case SingularityType::NotOnCurve: return "NotOnCurve";
  }
  return "?";
}

SingularityType singularity_type_at(const Poly& f, const FiberPoint& p) {
  if (f.is_zero()) throw ZeroPolynomial("singularity type of the zero polynomial");
  if (f.ring().size() != 3) throw IndexOutOfRange("plane curves live in a 3-variable ring");
  const auto& x = p.coordinates();
  if (!f.evaluate(x).is_zero()) return SingularityType::NotOnCurve;
  bool smooth = false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!f.partial_derivative(i).evaluate(x).is_zero()) smooth = true;
  }
  if (smooth) return SingularityType::SmoothPoint;
  // Dehomogenizing at the chart variable commutes with differentiating in
  // the other two, so the affine Hessian is a 2x2 block of the full one.
  const std::size_t chart = p.chart();
  std::array<std::size_t, 2> local{};
  for (std::size_t i = 0, k = 0; i < 3; ++i) {
    if (i != chart) local[k++] = i;
  }
  ScalarMatrix hessian(2, 2, f.field());
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      hessian(a, b) = f.partial_derivative(local[a]).partial_derivative(local[b]).evaluate(x);
    }
  }
  return determinant(hessian).is_zero() ? SingularityType::WorseSingularity : SingularityType::Node;
}

}  // namespace cliffq
