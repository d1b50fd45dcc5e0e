#include "cliffq/brauer_severi.hpp"

#include <numeric>

#include "cliffq/clifford.hpp"
#include "cliffq/errors.hpp"
#include "cliffq/parallel.hpp"

namespace cliffq {

ConicFamily ConicFamily::from_form(const QForm& q) {
  const auto& a = q.pattern().a;
  return {q.entries(), {-a[0], -a[1], -a[2]}, {1, 1, 1}};
}

ConicFamily ConicFamily::universal(Field field) {
  const Ring ring(std::vector<std::string>{"q11", "q12", "q13", "q22", "q23", "q33"});
  std::array<Poly, 6> upper{Poly::variable(ring, field, 0), Poly::variable(ring, field, 1),
                            Poly::variable(ring, field, 2), Poly::variable(ring, field, 3),
                            Poly::variable(ring, field, 4), Poly::variable(ring, field, 5)};
  return {PolyMatrix::symmetric3(upper), {0, 0, 0}, std::vector<int>(6, 0)};
}

std::optional<unsigned> BiPoly::alpha_degree() const {
  if (poly.is_zero()) return std::nullopt;
  std::optional<unsigned> common;
  for (const auto& t : poly.terms()) {
    const unsigned deg = t.monomial[0] + t.monomial[1] + t.monomial[2];
    if (common && *common != deg) return std::nullopt;
    common = deg;
  }
  return common;
}

std::optional<int> BiPoly::weighted_degree() const {
  if (poly.is_zero()) return std::nullopt;
  std::optional<int> common;
  for (const auto& t : poly.terms()) {
    int deg = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) deg += weights[i] * static_cast<int>(t.monomial[i]);
    if (common && *common != deg) return std::nullopt;
    common = deg;
  }
  return common;
}

Ring fiber_ring(const Ring& base) {
  std::vector<std::string> names{"alpha1", "alpha2", "alpha3"};
  names.insert(names.end(), base.names().begin(), base.names().end());
  return Ring(std::move(names));
}

Poly alpha(const Ring& fiber, Field field, std::size_t i) { return Poly::variable(fiber, field, i); }

namespace {

struct Lifted {
  Ring ring;
  PolyMatrix entries;
  std::vector<int> weights;
};

Lifted lift(const ConicFamily& family) {
  const Ring& base = family.entries.ring();
  Ring ring = fiber_ring(base);
  std::vector<std::size_t> map(base.size());
  std::iota(map.begin(), map.end(), std::size_t{3});
  PolyMatrix lifted(3, 3, ring, family.entries.field());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) lifted(i, j) = family.entries(i, j).embed(ring, map);
  }
  std::vector<int> weights(family.alpha_weights.begin(), family.alpha_weights.end());
  if (family.base_weights.size() != base.size()) {
    throw IndexOutOfRange("base weights do not match the base ring");
  }
  weights.insert(weights.end(), family.base_weights.begin(), family.base_weights.end());
  return {std::move(ring), std::move(lifted), std::move(weights)};
}

constexpr unsigned kXY = 0b011;
constexpr unsigned kXZ = 0b101;
constexpr unsigned kYZ = 0b110;

}  // namespace

BiPoly conic_equation(const ConicFamily& family) {
  if (!family.entries.is_symmetric() || family.entries.rows() != 3) {
    throw AsymmetricEntries("conic family needs a symmetric 3x3 matrix");
  }
  const auto lifted = lift(family);
  const Field f = family.entries.field();
  Poly q(lifted.ring, f);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      q += lifted.entries(i, j) * alpha(lifted.ring, f, i) * alpha(lifted.ring, f, j);
    }
  }
  return {std::move(q), lifted.weights};
}

PolyMatrix bs_matrix(const ConicFamily& family) {
  if (!family.entries.is_symmetric() || family.entries.rows() != 3) {
    throw AsymmetricEntries("conic family needs a symmetric 3x3 matrix");
  }
  const auto lifted = lift(family);
  const Ring& ring = lifted.ring;
  const Field f = family.entries.field();
  std::array<std::array<Poly, 3>, 3> gram{
      std::array<Poly, 3>{lifted.entries(0, 0), lifted.entries(0, 1), lifted.entries(0, 2)},
      std::array<Poly, 3>{lifted.entries(1, 0), lifted.entries(1, 1), lifted.entries(1, 2)},
      std::array<Poly, 3>{lifted.entries(2, 0), lifted.entries(2, 1), lifted.entries(2, 2)}};
  const Poly zero(ring, f);
  const Poly one = Poly::constant(ring, f, 1);
  const CliffordRewriter<Poly> rw(gram, zero);

  // Basis (1, X = yz, Y = zx, Z = xy), with zx = 2 q13 - xz.
  std::array<CliffordNormalForm<Poly>, 4> basis;
  for (auto& b : basis) b.fill(zero);
  basis[0][0] = one;
  basis[1][kYZ] = one;
  basis[2][kXZ] = zero - one;
  basis[2][0] = gram[0][2] + gram[0][2];
  basis[3][kXY] = one;

  auto coordinates = [&](const CliffordNormalForm<Poly>& e) {
    return std::array<Poly, 4>{e[0] + (gram[0][2] + gram[0][2]) * e[kXZ], e[kYZ], zero - e[kXZ], e[kXY]};
  };
  // alpha as a row vector on the dual basis: (0, alpha1, alpha2, alpha3).
  const std::array<Poly, 4> functional{zero, alpha(ring, f, 0), alpha(ring, f, 1), alpha(ring, f, 2)};

  PolyMatrix m(4, 4, ring, f);
  for (std::size_t k = 0; k < 4; ++k) m(0, k) = functional[k];
  for (std::size_t r = 1; r < 4; ++r) {
    for (std::size_t k = 0; k < 4; ++k) {
      const auto c = coordinates(rw.multiply(basis[r], basis[k]));
      Poly value = zero;
      for (std::size_t i = 0; i < 4; ++i) value += functional[i] * c[i];
      m(r, k) = std::move(value);
    }
  }
  return m;
}

MinorReport verify_minors(const ConicFamily& family, unsigned workers) {
  MinorReport report{conic_equation(family), bs_matrix(family), {}, {}, false, false};
  const Poly& q = report.conic.poly;
  const Ring& ring = q.ring();
  const Field f = q.field();

  auto chunks = parallel_chunks(16, workers, [&](std::size_t begin, std::size_t end) {
    std::vector<MinorEntry> out;
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t r = idx / 4, c = idx % 4;
      Poly mn = minor(report.matrix, r, c);
      Poly quotient(ring, f);
      if (!q.is_zero()) {
        auto [quo, rem] = divide_with_remainder(mn, q);
        if (!rem.is_zero()) {
          throw MinorNotDivisible("minor (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                  ") leaves remainder " + rem.to_string());
        }
        quotient = std::move(quo);
      } else if (!mn.is_zero()) {
        throw MinorNotDivisible("q vanishes but minor (" + std::to_string(r + 1) + "," +
                                std::to_string(c + 1) + ") does not");
      }
      out.push_back({r + 1, c + 1, std::move(mn), std::move(quotient)});
    }
    return out;
  });
  for (auto& chunk : chunks) {
    for (auto& e : chunk) report.minors.push_back(std::move(e));
  }
  report.all_divisible = true;

  auto named = [&](std::size_t row, std::size_t col, const Poly& expected, std::string label) {
    const Poly& actual = report.minors[(row - 1) * 4 + (col - 1)].minor;
    return NamedMinor{row, col, expected, actual, actual == expected, std::move(label)};
  };
  report.named.push_back(named(4, 3, alpha(ring, f, 0) * q, "alpha1*q"));
  report.named.push_back(named(3, 2, alpha(ring, f, 2) * q, "alpha3*q"));
  report.named.push_back(named(2, 4, -(alpha(ring, f, 1) * q), "-alpha2*q"));
  report.named_hold = std::all_of(report.named.begin(), report.named.end(),
                                  [](const NamedMinor& n) { return n.holds; });
  return report;
}

std::vector<NamedMinor> swapped_label_claims(const MinorReport& report) {
  const Poly& q = report.conic.poly;
  const Ring& ring = q.ring();
  const Field f = q.field();
  auto claim = [&](std::size_t row, std::size_t col, const Poly& expected, std::string label) {
    const Poly& actual = report.minors.at((row - 1) * 4 + (col - 1)).minor;
    return NamedMinor{row, col, expected, actual, actual == expected, std::move(label)};
  };
  return {claim(4, 3, alpha(ring, f, 0) * q, "alpha1*q"),
          claim(3, 2, -(alpha(ring, f, 1) * q), "-alpha2*q"),
          claim(2, 4, alpha(ring, f, 2) * q, "alpha3*q")};
}

bool bs_membership(const QForm& q, const FiberPoint& base, const FiberPoint& alpha_point) {
  if (base.field() != q.field() || alpha_point.field() != q.field()) {
    throw DomainMismatch("points and form over different fields");
  }
  const ConicFamily family = ConicFamily::from_form(q);
  std::vector<Scalar> point(alpha_point.coordinates().begin(), alpha_point.coordinates().end());
  point.insert(point.end(), base.coordinates().begin(), base.coordinates().end());
  const bool on_conic = conic_equation(family).poly.evaluate(point).is_zero();
  const bool rank_drops = rank(bs_matrix(family).evaluate(point)) <= 2;
  if (on_conic != rank_drops) {
    throw InternalError("q(alpha) test and rank test disagree at base " + base.to_string() +
                        ", alpha " + alpha_point.to_string());
  }
  return on_conic;
}

std::size_t conic_point_count(const ScalarMatrix& fiber) {
  std::size_t count = 0;
  for (const auto& a : projective_plane(fiber.field())) {
    const auto& x = a.coordinates();
    Scalar value = Scalar::zero(fiber.field());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) value += x[i] * fiber(i, j) * x[j];
    }
    if (value.is_zero()) ++count;
  }
  return count;
}

std::size_t expected_conic_point_count(const ScalarMatrix& fiber) {
  if (!fiber.field().is_prime()) throw InvalidField("point counts need a finite field");
  const std::size_t p = fiber.field().characteristic();
  switch (rank(fiber)) {
    case 3:
    case 1:
      return p + 1;
    case 0:
      return p * p + p + 1;
    default:
      break;
  }
  // Rank 2: some principal 2x2 minor is nonzero (adjugate = c k k^T); the
  // line pair is defined over F_p iff minus that minor is a square.
  const ScalarMatrix adj = adjugate3(fiber);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!adj(i, i).is_zero()) return (-adj(i, i)).is_square() ? 2 * p + 1 : 1;
  }
  throw InternalError("rank-2 symmetric matrix with vanishing principal minors");
}

}  // namespace cliffq
