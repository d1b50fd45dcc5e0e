#include "cliffq/catalog.hpp"

#include <map>

#include "cliffq/errors.hpp"

namespace cliffq {

namespace {

BundleDescriptor lines(std::initializer_list<int> twists) {
  BundleDescriptor b;
  for (int n : twists) b.summands.push_back(BundleItem::line(n));
  return b;
}

std::map<DelPezzoTag, DelPezzoType> build_types() {
  std::map<DelPezzoTag, DelPezzoType> t;
  t[DelPezzoTag::F23] = {DelPezzoTag::F23,
                         DegreePattern{{0, 0, 0}, 1},
                         3,
                         lines({-1, -1, -1}),
                         "X_{1,2} in P^2 x P^2",
                         0,
                         {lines({-2, -2, -2}), lines({-1, -1, -1})}};
  t[DelPezzoTag::F24] = {DelPezzoTag::F24,
                         DegreePattern{{0, 1, 1}, 0},
                         4,
                         lines({-2, -1, -1}),
                         "double cover of P^1 x P^2 ramified on V_{2,2}",
                         2,
                         {lines({-2, -3, -3}), lines({-2, -1, -1})}};
  BundleDescriptor omega_plus{{BundleItem::cotangent(0), BundleItem::line(-2)}};
  BundleDescriptor omega_source{{BundleItem::cotangent(-2), BundleItem::line(-3)}};
  t[DelPezzoTag::F25plus] = {DelPezzoTag::F25plus,
                             std::nullopt,
                             5,
                             omega_plus,
                             "Bl_C P^3, deg C = 7, g(C) = 5",
                             5,
                             {omega_source, omega_plus}};
  t[DelPezzoTag::F25minus] = {DelPezzoTag::F25minus,
                              DegreePattern{{0, 0, 1}, 1},
                              5,
                              lines({-2, -2, -1}),
                              "Bl_line V_3, cubic threefold V_3",
                              5,
                              {lines({-4, -3, -3}), lines({-2, -2, -1})}};
  return t;
}

}  // namespace

const DelPezzoType& delpezzo_type(DelPezzoTag tag) {
  static const auto types = build_types();
  return types.at(tag);
}

Resolution resolution_metadata(DelPezzoTag tag) { return delpezzo_type(tag).resolution; }

BundleDescriptor vstar_of_pattern(const DegreePattern& pattern) {
  const int m = normalizing_twist(pattern);
  return lines({pattern.a[0] + m, pattern.a[1] + m, pattern.a[2] + m});
}

DegreePattern pattern_of(DelPezzoTag tag) {
  const auto& type = delpezzo_type(tag);
  if (!type.pattern) {
    throw UnknownTag(std::string(to_string(tag)) +
                     " has no line-bundle degree pattern; it is built from a net of quadrics");
  }
  return *type.pattern;
}

Poly random_homogeneous(int degree, Field field, std::mt19937_64& rng) {
  const Ring ring = Ring::uvw();
  PolyBuilder b(ring, field);
  if (degree < 0) return std::move(b).build();
  const auto k = static_cast<unsigned>(degree);
  for (unsigned i = 0; i <= k; ++i) {
    for (unsigned j = 0; i + j <= k; ++j) {
      const std::array<unsigned, 3> e{i, j, k - i - j};
      long c = 0;
      if (field.is_prime()) {
        c = std::uniform_int_distribution<long>(0, static_cast<long>(field.characteristic()) - 1)(rng);
      } else {
        c = std::uniform_int_distribution<long>(-9, 9)(rng);
      }
      b.add(Monomial(e), Scalar(field, c));
    }
  }
  return std::move(b).build();
}

QForm make_type(DelPezzoTag tag, const std::array<Poly, 6>& upper) {
  return new_qform(pattern_of(tag), upper);
}

QForm make_type(DelPezzoTag tag, std::uint64_t seed, Field field) {
  const DegreePattern pattern = pattern_of(tag);
  std::mt19937_64 rng(seed);
  constexpr std::array<std::pair<std::size_t, std::size_t>, 6> slots{
      {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::array<Poly, 6> upper{Poly(Ring::uvw(), field), Poly(Ring::uvw(), field), Poly(Ring::uvw(), field),
                              Poly(Ring::uvw(), field), Poly(Ring::uvw(), field), Poly(Ring::uvw(), field)};
    for (std::size_t s = 0; s < 6; ++s) {
      upper[s] = random_homogeneous(pattern.entry_degree(slots[s].first, slots[s].second), field, rng);
    }
    QForm q = new_qform(pattern, upper);
    if (!discriminant(q).is_zero()) return q;
  }
  throw DegenerateAfterRetries(std::string(to_string(tag)) + ": no nondegenerate form after " +
                               std::to_string(kMaxRetries) + " attempts over " + field.name());
}

// ----------------------------------------------------------------- nets

QuadricNet::QuadricNet(PolyMatrix a) : a_(std::move(a)) {
  if (a_.rows() != 5 || a_.cols() != 5) throw InvalidNet("a net of quadrics needs a 5x5 matrix");
  if (!(a_.ring() == Ring::uvw())) throw InvalidNet("net entries must live in k[u, v, w]");
  if (!a_.is_symmetric()) throw InvalidNet("net matrix is not symmetric");
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const Poly& e = a_(i, j);
      if (!e.is_zero() && (!e.is_homogeneous() || *e.degree() != 1)) {
        throw InvalidNet("entry A" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + e.to_string() +
                         " is not a linear form");
      }
    }
  }
  const Field f = a_.field();
  const Ring ring = Ring::uvw();
  const std::array<Poly, 5> row5{Poly::variable(ring, f, 0), Poly::variable(ring, f, 1),
                                 Poly::variable(ring, f, 2), Poly(ring, f), Poly(ring, f)};
  for (std::size_t j = 0; j < 5; ++j) {
    if (!(a_(4, j) == row5[j])) {
      throw InvalidNet("fifth row must be (u, v, w, 0, 0); entry " + std::to_string(j + 1) + " is " +
                       a_(4, j).to_string());
    }
  }
}

QuadricNet QuadricNet::from_upper(const std::array<Poly, 15>& upper) {
  const Field f = upper[0].field();
  PolyMatrix a(5, 5, Ring::uvw(), f);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i; j < 5; ++j, ++k) {
      a(i, j) = upper[k];
      a(j, i) = upper[k];
    }
  }
  return QuadricNet(std::move(a));
}

std::array<Poly, 15> QuadricNet::upper() const {
  std::array<Poly, 15> out{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i; j < 5; ++j) out[k++] = a_(i, j);
  }
  return out;
}

QuadricNet random_net(std::uint64_t seed, Field field) {
  std::mt19937_64 rng(seed);
  const Ring ring = Ring::uvw();
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    PolyMatrix a(5, 5, ring, field);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) {
        a(i, j) = random_homogeneous(1, field, rng);
        a(j, i) = a(i, j);
      }
    }
    for (std::size_t j = 0; j < 3; ++j) {
      a(4, j) = Poly::variable(ring, field, j);
      a(j, 4) = a(4, j);
    }
    QuadricNet net(std::move(a));
    if (!determinant(net.matrix()).is_zero()) return net;
  }
  throw DegenerateAfterRetries("no net with nonzero determinant after " + std::to_string(kMaxRetries) +
                               " attempts over " + field.name());
}

F25PlusProvider::F25PlusProvider(QuadricNet net) : net_(std::move(net)), det5_(determinant(net_.matrix())) {}

ScalarMatrix F25PlusProvider::form_at(const FiberPoint& q) const {
  if (q.field() != net_.field()) throw DomainMismatch("point and net over different fields");
  const ScalarMatrix a = net_.matrix().evaluate(q.coordinates());
  const Field f = a.field();
  ScalarMatrix row(1, 5, f);
  for (std::size_t j = 0; j < 5; ++j) row(0, j) = a(4, j);
  if (row.is_zero()) {
    throw BasePointSingular("p^T A vanishes at " + q.to_string() + "; p is singular on that quadric");
  }
  auto kernel = nullspace(row);
  // e5 is free (A55 = 0) and comes last; the other three span W / <p>.
  kernel.pop_back();
  ScalarMatrix basis(5, 3, f);
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t r = 0; r < 5; ++r) basis(r, c) = kernel[c][r];
  }
  return basis.transpose() * a * basis;
}

bool F25PlusProvider::det5_vanishes_at(const FiberPoint& q) const {
  return det5_.evaluate(q.coordinates()).is_zero();
}

F25PlusProvider make_f25plus(QuadricNet net) { return F25PlusProvider(std::move(net)); }

}  // namespace cliffq
