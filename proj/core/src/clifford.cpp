#include "cliffq/clifford.hpp"

#include "cliffq/errors.hpp"

namespace cliffq {

namespace {

constexpr unsigned kEmpty = 0;
constexpr unsigned kXY = 0b011;
constexpr unsigned kXZ = 0b101;
constexpr unsigned kYZ = 0b110;

template <class Coeff>
CliffordRewriter<Coeff> rewriter_for(const std::array<std::array<Coeff, 3>, 3>& gram, Coeff zero) {
  return CliffordRewriter<Coeff>(gram, std::move(zero));
}

CliffordRewriter<Scalar> scalar_rewriter(const ScalarMatrix& q) {
  if (q.rows() != 3 || q.cols() != 3 || !q.is_symmetric()) {
    throw AsymmetricEntries("Clifford relations need a symmetric 3x3 matrix");
  }
  if (!q.field().is_rational() && q.field().characteristic() == 2) {
    throw InvalidField("characteristic 2 is not supported");
  }
  std::array<std::array<Scalar, 3>, 3> gram;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) gram[i][j] = q(i, j);
  }
  return rewriter_for(gram, Scalar::zero(q.field()));
}

// Basis (1, yz - q23, zx - q13, xy - q12) as normal forms; zx = 2 q13 - xz.
template <class Coeff>
std::array<CliffordNormalForm<Coeff>, 4> even_basis(const CliffordRewriter<Coeff>& rw, const Coeff& one) {
  std::array<CliffordNormalForm<Coeff>, 4> basis;
  for (auto& b : basis) b.fill(rw.zero());
  basis[0][kEmpty] = one;
  basis[1][kYZ] = one;
  basis[1][kEmpty] = rw.zero() - rw.gram(1, 2);
  basis[2][kXZ] = rw.zero() - one;
  basis[2][kEmpty] = rw.gram(0, 2);
  basis[3][kXY] = one;
  basis[3][kEmpty] = rw.zero() - rw.gram(0, 1);
  return basis;
}

// Half the trace: the unit coordinate after rewriting yz, xz, xy back into
// the shifted basis.
template <class Coeff>
Coeff half_trace(const CliffordRewriter<Coeff>& rw, const CliffordNormalForm<Coeff>& e) {
  return e[kEmpty] + e[kYZ] * rw.gram(1, 2) + e[kXZ] * rw.gram(0, 2) + e[kXY] * rw.gram(0, 1);
}

AlgebraElement to_basis(const CliffordRewriter<Scalar>& rw, const CliffordNormalForm<Scalar>& e) {
  for (unsigned odd : {1U, 2U, 4U, 7U}) {
    if (!e[odd].is_zero()) throw InternalError("odd component in an even product");
  }
  return {half_trace(rw, e), e[kYZ], -e[kXZ], e[kXY]};
}

}  // namespace

CliffordNormalForm<Scalar> reduce_word(std::span<const ScalarWord> words, const ScalarMatrix& q,
                                       RewriteStrategy strategy) {
  for (const auto& w : words) {
    for (auto l : w.letters) {
      if (l > 2) throw SyntaxError("Clifford letters are x, y, z");
    }
  }
  return scalar_rewriter(q).reduce(words, strategy);
}

std::string to_string(const CliffordNormalForm<Scalar>& element) {
  static const char* names[8] = {"1", "x", "y", "x*y", "z", "x*z", "y*z", "x*y*z"};
  std::string out;
  for (unsigned mask : {0U, 1U, 2U, 4U, 3U, 5U, 6U, 7U}) {
    const Scalar& c = element[mask];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Scalar magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mask == 0) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += names[mask];
    } else {
      out += magnitude.to_string() + "*" + names[mask];
    }
  }
  return out.empty() ? "0" : out;
}

// ----------------------------------------------------------- FiberAlgebra

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

AlgebraElement scale(const Scalar& c, const AlgebraElement& a) {
  return {c * a[0], c * a[1], c * a[2], c * a[3]};
}

bool is_zero(const AlgebraElement& a) {
  return a[0].is_zero() && a[1].is_zero() && a[2].is_zero() && a[3].is_zero();
}

FiberAlgebra::FiberAlgebra(Field field, Table products, AlgebraElement trace)
    : field_(field), products_(std::move(products)), trace_(std::move(trace)) {}

AlgebraElement FiberAlgebra::basis(std::size_t i) const {
  AlgebraElement e{Scalar::zero(field_), Scalar::zero(field_), Scalar::zero(field_), Scalar::zero(field_)};
  e[i] = Scalar::one(field_);
  return e;
}

AlgebraElement FiberAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out{Scalar::zero(field_), Scalar::zero(field_), Scalar::zero(field_), Scalar::zero(field_)};
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      for (std::size_t k = 0; k < 4; ++k) out[k] += c * products_[i][j][k];
    }
  }
  return out;
}

Scalar FiberAlgebra::trace(const AlgebraElement& a) const {
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < 4; ++i) t += trace_[i] * a[i];
  return t;
}

std::optional<std::string> FiberAlgebra::violated_invariant() const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(products_[0][i] == basis(i)) || !(products_[i][0] == basis(i))) {
      return "basis element 0 is not a two-sided unit";
    }
  }
  if (!(trace_[0] == Scalar(field_, 2L))) return "tr(1) != 2";
  for (std::size_t i = 1; i < 4; ++i) {
    if (!trace_[i].is_zero()) return "trace does not vanish on e" + std::to_string(i);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < 4; ++k) {
        if (!(multiply(products_[i][j], basis(k)) == multiply(basis(i), products_[j][k]))) {
          return "not associative on (e" + std::to_string(i) + ", e" + std::to_string(j) + ", e" +
                 std::to_string(k) + ")";
        }
      }
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (!cayley_hamilton_check(*this, basis(i))) {
      return "Cayley-Hamilton fails on e" + std::to_string(i);
    }
  }
  return std::nullopt;
}

FiberAlgebra fiber_algebra(const ScalarMatrix& q) {
  const auto rw = scalar_rewriter(q);
  const Field f = q.field();
  const auto basis = even_basis(rw, Scalar::one(f));
  FiberAlgebra::Table table;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) table[i][j] = to_basis(rw, rw.multiply(basis[i], basis[j]));
  }
  const Scalar zero = Scalar::zero(f);
  return FiberAlgebra(f, std::move(table), {Scalar(f, 2L), zero, zero, zero});
}

FiberAlgebra kronecker_quiver_algebra(Field field) {
  // e1, e2 orthogonal idempotents, arrows v in e1 A e2, x = e1 - e2:
  // x^2 = 1, x v = v, v x = -v, v v' = 0.
  const Scalar o = Scalar::zero(field);
  const Scalar l = Scalar::one(field);
  const Scalar m = -l;
  const AlgebraElement zero{o, o, o, o};
  const AlgebraElement one{l, o, o, o};
  const AlgebraElement x{o, l, o, o};
  const AlgebraElement v1{o, o, l, o};
  const AlgebraElement v2{o, o, o, l};
  FiberAlgebra::Table t;
  t[0] = {one, x, v1, v2};
  t[1] = {x, one, v1, v2};
  t[2] = {v1, AlgebraElement{o, o, m, o}, zero, zero};
  t[3] = {v2, AlgebraElement{o, o, o, m}, zero, zero};
  return FiberAlgebra(field, t, {Scalar(field, 2L), o, o, o});
}

ScalarMatrix trace_pairing_fiber(const FiberAlgebra& alg) {
  const Scalar half = Scalar::one(alg.field()) / Scalar(alg.field(), 2L);
  ScalarMatrix p(3, 3, alg.field());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) p(i, j) = half * alg.trace(alg.product(i + 1, j + 1));
  }
  return p;
}

PolyMatrix trace_pairing_global(const QForm& q) {
  const PolyMatrix& e = q.entries();
  std::array<std::array<Poly, 3>, 3> gram{
      std::array<Poly, 3>{e(0, 0), e(0, 1), e(0, 2)},
      std::array<Poly, 3>{e(1, 0), e(1, 1), e(1, 2)},
      std::array<Poly, 3>{e(2, 0), e(2, 1), e(2, 2)}};
  const CliffordRewriter<Poly> rw(gram, Poly(e.ring(), e.field()));
  const auto basis = even_basis(rw, Poly::constant(e.ring(), e.field(), 1));
  PolyMatrix p(3, 3, e.ring(), e.field());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      p(i, j) = half_trace(rw, rw.multiply(basis[i + 1], basis[j + 1]));
    }
  }
  return p;
}

PolyMatrix recover_form(const PolyMatrix& pairing) {
  if (pairing.rows() != 3 || pairing.cols() != 3 || !pairing.is_symmetric()) {
    throw NotRecoverable("pairing must be a symmetric 3x3 matrix");
  }
  try {
    const Poly minus_det = -det3(pairing);
    if (minus_det.is_zero()) throw NotRecoverable("det P vanishes identically");
    const Poly root = poly_sqrt(minus_det);
    const PolyMatrix adj = adjugate3(pairing);
    PolyMatrix out(3, 3, pairing.ring(), pairing.field());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) out(i, j) = divide_exact(adj(i, j), root);
    }
    return out;
  } catch (const NotAPerfectSquare& e) {
    throw NotRecoverable(std::string("-det P is not a perfect square: ") + e.what());
  } catch (const NotDivisible& e) {
    throw NotRecoverable(std::string("Adj P is not divisible by sqrt(-det P): ") + e.what());
  } catch (const DegreeMismatch& e) {
    throw NotRecoverable(std::string("pairing entries are not homogeneous: ") + e.what());
  }
}

const char* to_string(AlgebraType type) {
  switch (type) {
    case AlgebraType::CentralSimple: return "CentralSimple";
    case AlgebraType::DegenerateClifford: return "DegenerateClifford";
    case AlgebraType::DoubleLineClifford: return "DoubleLineClifford";
    case AlgebraType::LocalCommutative: return "LocalCommutative";
    case AlgebraType::KroneckerQuiver: return "KroneckerQuiver";
  }
  return "?";
}

AlgebraType algebra_type_of_rank(std::size_t form_rank) {
  switch (form_rank) {
    case 3: return AlgebraType::CentralSimple;
    case 2: return AlgebraType::DegenerateClifford;
    case 1: return AlgebraType::DoubleLineClifford;
    case 0: return AlgebraType::LocalCommutative;
    default: throw InternalError("form rank " + std::to_string(form_rank));
  }
}

namespace {

AlgebraElement traceless(const Field f, const ScalarVector& coords) {
  return {Scalar::zero(f), coords[0], coords[1], coords[2]};
}

Scalar pairing_value(const ScalarMatrix& p, const ScalarVector& a, const ScalarVector& b) {
  Scalar acc = Scalar::zero(p.field());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) acc += a[i] * p(i, j) * b[j];
  }
  return acc;
}

// Rank-one pairing: distinguish the degenerate Clifford algebra from the
// Kronecker quiver algebra by the action of x on its orthogonal complement.
AlgebraType classify_rank_one(const FiberAlgebra& alg, const ScalarMatrix& p) {
  const Field f = alg.field();
  const Scalar o = Scalar::zero(f);
  ScalarVector x_coords{o, o, o};
  for (std::size_t i = 0; i < 3 && x_coords == ScalarVector{o, o, o}; ++i) {
    if (!p(i, i).is_zero()) x_coords[i] = Scalar::one(f);
  }
  for (std::size_t i = 0; i < 3 && x_coords == ScalarVector{o, o, o}; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!p(i, j).is_zero()) {
        x_coords[i] = Scalar::one(f);
        x_coords[j] = Scalar::one(f);
        break;
      }
    }
  }
  const Scalar a = pairing_value(p, x_coords, x_coords);
  if (a.is_zero()) throw InvalidAlgebra("rank-one pairing without an anisotropic vector");
  if (!a.is_square()) return AlgebraType::DegenerateClifford;

  ScalarMatrix row(1, 3, f);
  for (std::size_t j = 0; j < 3; ++j) {
    Scalar acc = o;
    for (std::size_t i = 0; i < 3; ++i) acc += x_coords[i] * p(i, j);
    row(0, j) = acc;
  }
  const auto complement = nullspace(row);
  if (complement.size() != 2) throw InvalidAlgebra("orthogonal complement is not 2-dimensional");

  const AlgebraElement x = traceless(f, x_coords);
  ScalarMatrix basis(3, 2, f);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < 3; ++i) basis(i, k) = complement[k][i];
  }
  ScalarMatrix action(2, 2, f);
  for (std::size_t k = 0; k < 2; ++k) {
    const AlgebraElement image = alg.multiply(x, traceless(f, complement[k]));
    if (!image[0].is_zero()) throw InvalidAlgebra("x * V leaves the traceless part");
    auto coords = solve(basis, {image[1], image[2], image[3]});
    if (!coords) throw InvalidAlgebra("x * V is not contained in V");
    action(0, k) = (*coords)[0];
    action(1, k) = (*coords)[1];
  }
  const bool scalar_action = action(0, 1).is_zero() && action(1, 0).is_zero() && action(0, 0) == action(1, 1);
  return scalar_action ? AlgebraType::KroneckerQuiver : AlgebraType::DegenerateClifford;
}

}  // namespace

AlgebraType classify(const FiberAlgebra& alg) {
  if (auto why = alg.violated_invariant()) throw InvalidAlgebra(*why);
  const ScalarMatrix p = trace_pairing_fiber(alg);
  const std::size_t r = rank(p);
  if (r >= 2) return AlgebraType::CentralSimple;
  if (r == 1) return classify_rank_one(alg, p);
  for (std::size_t i = 1; i < 4; ++i) {
    for (std::size_t j = 1; j < 4; ++j) {
      if (!is_zero(alg.product(i, j))) return AlgebraType::DoubleLineClifford;
    }
  }
  return AlgebraType::LocalCommutative;
}

bool cayley_hamilton_check(const FiberAlgebra& alg, const AlgebraElement& a) {
  const Field f = alg.field();
  const Scalar t = alg.trace(a);
  const AlgebraElement square = alg.multiply(a, a);
  const Scalar g = (t * t - alg.trace(square)) / Scalar(f, 2L);
  AlgebraElement lhs = add(square, scale(-t, a));
  lhs = add(lhs, scale(g, alg.one()));
  return is_zero(lhs);
}

bool azumaya_at(const QForm& q, const FiberPoint& p) {
  if (p.field() != q.field()) throw DomainMismatch("point and form over different fields");
  const bool nondegenerate = !discriminant(q).evaluate(p.coordinates()).is_zero();
  const bool central_simple = classify(fiber_algebra(evaluate_at(q, p))) == AlgebraType::CentralSimple;
  if (nondegenerate != central_simple) {
    throw InternalError("Azumaya test disagrees with classification at " + p.to_string());
  }
  return nondegenerate;
}

namespace {

std::array<int, 4> generator_degrees(const DegreePattern& pattern) {
  const auto& a = pattern.a;
  return {0, 2 * (a[0] + a[1] + pattern.d), 2 * (a[1] + a[2] + pattern.d), 2 * (a[2] + a[0] + pattern.d)};
}

}  // namespace

RationalSeries gamma_hilbert_series(const DegreePattern& pattern) {
  RationalSeries s;
  for (int deg : generator_degrees(pattern)) {
    if (deg < 0) {
      throw NonExpandable("module generator of negative degree " + std::to_string(deg));
    }
    if (s.numerator.size() <= static_cast<std::size_t>(deg)) s.numerator.resize(deg + 1, 0);
    s.numerator[deg] += 1;
  }
  s.denominator = one_minus_t_power(2, 3);
  return s;
}

mpz_class gamma_dimension_bruteforce(const DegreePattern& pattern, int n) {
  if (n < 0) throw OddDegree("degree must be non-negative");
  if (n % 2 != 0) throw OddDegree("the graded algebra lives in even degrees, got " + std::to_string(n));
  mpz_class count = 0;
  for (int g : generator_degrees(pattern)) {
    const int budget = n - g;
    if (budget < 0) continue;
    for (int i = 0; 2 * i <= budget; ++i) {
      for (int j = 0; 2 * (i + j) <= budget; ++j) {
        for (int k = 0; 2 * (i + j + k) <= budget; ++k) {
          if (2 * (i + j + k) == budget) ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace cliffq
