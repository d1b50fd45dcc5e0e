#include <doctest.h>

#include <random>

#include "cliffq/errors.hpp"
#include "cliffq/linalg.hpp"
#include "cliffq/poly.hpp"
#include "cliffq/poly_matrix.hpp"
#include "cliffq/series.hpp"
#include "support.hpp"

using namespace cliffq;
using namespace cliffq::test;

namespace {

Poly random_poly(unsigned degree, Field f, std::mt19937_64& rng) {
  PolyBuilder b(Ring::uvw(), f);
  std::uniform_int_distribution<long> c(0, static_cast<long>(f.characteristic()) - 1);
  for (unsigned i = 0; i <= degree; ++i) {
    for (unsigned j = 0; i + j <= degree; ++j) {
      const std::array<unsigned, 3> e{i, j, degree - i - j};
      b.add(Monomial(e), Scalar(f, c(rng)));
    }
  }
  return std::move(b).build();
}

PolyMatrix random_matrix(std::size_t n, unsigned degree, Field f, std::mt19937_64& rng) {
  PolyMatrix m(n, n, Ring::uvw(), f);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(degree, f, rng);
  }
  return m;
}

}  // namespace

TEST_SUITE("exactpoly") {
  TEST_CASE("scalars: rationals in lowest terms, residues in [0, p)") {
    const Scalar a = Scalar::fraction(Q(), 6, -4);
    CHECK(a.rational().get_num() == -3);
    CHECK(a.rational().get_den() == 2);
    const Scalar r(F(7), -1);
    CHECK(r.residue() == 6);
    CHECK((Scalar(F(7), 3) * Scalar(F(7), 5)).residue() == 1);
    CHECK(Scalar(F(7), 3).inverse().residue() == 5);
    CHECK_THROWS_AS(Scalar(Q(), 1) + Scalar(F(5), 1), DomainMismatch);
    CHECK_THROWS_AS(Scalar(F(5), 0).inverse(), DivisionByZero);
  }

  TEST_CASE("fields: odd primes only") {
    CHECK_THROWS_AS(Field::prime(2), InvalidField);
    CHECK_THROWS_AS(Field::prime(9), InvalidField);
    CHECK_THROWS_AS(Field::prime(std::uint64_t{1} << 31U), InvalidField);
    CHECK(Field::prime(2147483647).characteristic() == 2147483647);
  }

  TEST_CASE("square roots and squareness") {
    CHECK(Scalar::fraction(Q(), 9, 4).is_square());
    CHECK(Scalar::fraction(Q(), 9, 4).sqrt() == Scalar::fraction(Q(), 3, 2));
    CHECK_FALSE(Scalar(Q(), 2).is_square());
    CHECK_FALSE(Scalar(Q(), -1).is_square());
    const Field f = F(13);
    for (long x = 0; x < 13; ++x) {
      const Scalar s = Scalar(f, x) * Scalar(f, x);
      REQUIRE(s.is_square());
      CHECK(*s.sqrt() * *s.sqrt() == s);
    }
    CHECK_FALSE(Scalar(F(5), 2).is_square());
    // p = 1 mod 8 exercises the Tonelli-Shanks loop
    const Field g = F(17);
    for (long x = 1; x < 17; ++x) {
      const Scalar s = Scalar(g, x * x);
      CHECK(*s.sqrt() * *s.sqrt() == s);
    }
  }

  TEST_CASE("parse_poly examples") {
    const Poly p = P("u + 2*v");
    CHECK(p.degree() == 1u);
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(Monomial::variable(0)) == S(1));
    CHECK(p.coefficient(Monomial::variable(1)) == S(2));

    const Poly zero = P("0");
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());

    const Poly q = P("u^2 + v*w - 1/3*w^2");
    CHECK(q.degree() == 2u);
    CHECK(q.coefficient(Monomial::variable(2, 2)) == Scalar::fraction(Q(), -1, 3));
    CHECK(q.to_string() == "u^2 + v*w - 1/3*w^2");
  }

  TEST_CASE("parse_poly errors") {
    CHECK_THROWS_AS(P("u + v^2"), InhomogeneousError);
    CHECK_THROWS_AS(P("u + x"), UnknownVariable);
    CHECK_THROWS_AS(P("u +"), SyntaxError);
    CHECK_THROWS_AS(P("u ** v"), SyntaxError);
    CHECK_THROWS_AS(P("2/0*u"), SyntaxError);
    CHECK_THROWS_AS(P(""), SyntaxError);
    CHECK_THROWS_AS(P("u^0"), SyntaxError);
  }

  TEST_CASE("parse and print round trip, leading sign, F_p rendering") {
    for (const char* text : {"-u^2 + 3*u*v", "u*v*w", "2", "-1/2*v^3 + w^3"}) {
      const Poly p = P(text);
      CHECK(P(p.to_string()) == p);
    }
    CHECK(P("4*u", F(5)).to_string() == "-u");
    CHECK(P("1/2*u", F(5)) == P("3*u", F(5)));
    CHECK(P("u*u") == P("u^2"));
    CHECK(P("u - u").is_zero());
  }

  TEST_CASE("grlex ordering with u > v > w") {
    const Poly p = P("w^2 + u*w + v^2 + u^2 + u*v + v*w");
    CHECK(p.to_string() == "u^2 + u*v + u*w + v^2 + v*w + w^2");
    CHECK(p.leading_term().monomial == Monomial::variable(0, 2));
  }

  TEST_CASE("det3 examples") {
    CHECK(det3(sym3({"u", "0", "0", "v", "0", "w"})) == P("u*v*w"));
    PolyMatrix m(3, 3, std::vector<Poly>{P("u"), P("v"), P("w"), P("u"), P("v"), P("w"), P("v"), P("w"), P("u")});
    CHECK(det3(m).is_zero());
    PolyMatrix bad(3, 3, std::vector<Poly>{P("u"), P("0"), P("0"), P("0"), P("v^2"), P("0"), P("0"), P("0"), P("1")});
    CHECK(det3(bad) == P("u*v^2"));  // homogeneous anyway
    PolyMatrix mixed(3, 3, std::vector<Poly>{P("u"), P("1"), P("0"), P("1"), P("v"), P("0"), P("0"), P("0"), P("1")});
    CHECK_THROWS_AS(det3(mixed), DegreeMismatch);
  }

  TEST_CASE("det commutes with evaluation over F_5") {
    std::mt19937_64 rng(5);
    const Field f = F(5);
    const PolyMatrix m = random_matrix(3, 1, f, rng);
    const Poly d = det3(m);
    for (int i = 0; i < 10; ++i) {
      const auto x = coords(random_point(rng, f));
      CHECK(determinant(m.evaluate(x)) == d.evaluate(x));
    }
  }

  TEST_CASE("adjugate3 examples and identities") {
    const PolyMatrix d = sym3({"u", "0", "0", "v", "0", "w"});
    CHECK(adjugate3(d) == sym3({"v*w", "0", "0", "u*w", "0", "u*v"}));
    const PolyMatrix id = PolyMatrix::identity(3, Ring::uvw(), Q());
    CHECK(adjugate3(id) == id);
    // scalar symmetric [[a,d,e],[d,b,f],[e,f,c]]: (3,3) entry is ab - d^2
    const PolyMatrix s = sym3({"2", "5", "7", "3", "11", "13"});
    CHECK(adjugate3(s)(2, 2) == P(std::to_string(2 * 3 - 25)));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      const Field f = F(101);
      const PolyMatrix m = random_matrix(3, 1, f, rng);
      const Poly det = det3(m);
      const PolyMatrix adj = adjugate3(m);
      CHECK(m * adj == det * PolyMatrix::identity(3, Ring::uvw(), f));
      CHECK(adjugate3(adj) == det * m);
    }
  }

  TEST_CASE("minor examples") {
    const PolyMatrix id4 = PolyMatrix::identity(4, Ring::uvw(), Q());
    CHECK(minor(id4, 0, 0) == P("1"));
    CHECK(minor(sym3({"u", "0", "0", "v", "0", "w"}), 2, 2) == P("u*v"));
    CHECK_THROWS_AS(minor(id4, 4, 0), IndexOutOfRange);
    CHECK_THROWS_AS(minor(PolyMatrix(1, 1, Ring::uvw(), Q()), 0, 0), IndexOutOfRange);
  }

  TEST_CASE("evaluation homomorphism for det3, adjugate3, minor") {
    std::mt19937_64 rng(20);
    const Field f = F(101);
    const PolyMatrix m3 = random_matrix(3, 2, f, rng);
    const PolyMatrix m4 = random_matrix(4, 1, f, rng);
    const PolyMatrix adj = adjugate3(m3);
    const Poly det = det3(m3);
    const Poly mn = minor(m4, 1, 2);
    for (int i = 0; i < 20; ++i) {
      const auto x = coords(random_point(rng, f));
      CHECK(determinant(m3.evaluate(x)) == det.evaluate(x));
      CHECK(adjugate3(m3.evaluate(x)) == adj.evaluate(x));
      ScalarMatrix sub(3, 3, f);
      const ScalarMatrix e4 = m4.evaluate(x);
      for (std::size_t r = 0, rr = 0; r < 4; ++r) {
        if (r == 1) continue;
        for (std::size_t c = 0, cc = 0; c < 4; ++c) {
          if (c == 2) continue;
          sub(rr, cc++) = e4(r, c);
        }
        ++rr;
      }
      CHECK(determinant(sub) == mn.evaluate(x));
    }
  }

  TEST_CASE("divide_exact examples") {
    CHECK(divide_exact(P("u^2*v"), P("u")) == P("u*v"));
    CHECK(divide_exact(P("u*v*w + u^3"), P("u")) == P("v*w + u^2"));
    CHECK_THROWS_AS(divide_exact(P("u^2 + v^2"), P("u")), NotDivisible);
    CHECK_THROWS_AS(divide_exact(P("u"), P("0")), DivisionByZero);
    const auto r = divide_with_remainder(P("u^2 + v^2"), P("u"));
    CHECK(r.remainder == P("v^2"));
  }

  TEST_CASE("divide_exact(f*g, g) = f, 100 random cases over F_p") {
    std::mt19937_64 rng(100);
    const Field f = F(101);
    for (int i = 0; i < 100; ++i) {
      const Poly a = random_poly(static_cast<unsigned>(i % 3), f, rng);
      Poly g = random_poly(1 + static_cast<unsigned>(i % 2), f, rng);
      if (g.is_zero()) continue;
      CHECK(divide_exact(a * g, g) == a);
    }
  }

  TEST_CASE("poly_sqrt examples") {
    CHECK(poly_sqrt(P("u^2 + 2*u*v + v^2")) == P("u + v"));
    CHECK(poly_sqrt(P("u^2*v^2*w^2")) == P("u*v*w"));
    CHECK_THROWS_AS(poly_sqrt(P("u^2 + v^2")), NotAPerfectSquare);
    CHECK_THROWS_AS(poly_sqrt(P("u^3")), NotAPerfectSquare);
    CHECK(poly_sqrt(P("0")).is_zero());
  }

  TEST_CASE("poly_sqrt(g^2) is +-g; leading coefficient normalized") {
    std::mt19937_64 rng(7);
    for (const Field f : {F(101), Q()}) {
      for (int i = 0; i < 30; ++i) {
        Poly g = f.is_prime() ? random_poly(1 + static_cast<unsigned>(i % 3), f, rng) : P("3*u - 2*v + 1/2*w");
        if (g.is_zero()) continue;
        const Poly r = poly_sqrt(g * g);
        CHECK((r == g || r == -g));
        CHECK(r * r == g * g);
      }
    }
    CHECK(poly_sqrt(P("4*u^2")) == P("2*u"));
    CHECK(poly_sqrt(P("u^2", F(7))) == P("u", F(7)));
  }

  TEST_CASE("series_expand examples") {
    const RationalSeries s{{1}, one_minus_t_power(1, 2)};
    const auto c = series_expand(s, 3);
    CHECK(c == std::vector<mpz_class>{1, 2, 3, 4});
    const RationalSeries f23{{1, 0, 3}, one_minus_t_power(2, 3)};
    CHECK(series_expand(f23, 2)[2] == 6);
    const RationalSeries zero{{0}, one_minus_t_power(2, 3)};
    for (const auto& x : series_expand(zero, 5)) CHECK(x == 0);
    CHECK_THROWS_AS(series_expand(RationalSeries{{1}, {2, 1}}, 3), NonExpandable);
    CHECK_THROWS_AS(series_expand(RationalSeries{{1}, {0, 1}}, 3), NonExpandable);
  }

  TEST_CASE("linear algebra helpers") {
    const Field f = F(7);
    const ScalarMatrix m(f, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(rank(m) == 2);
    const auto ker = nullspace(m);
    REQUIRE(ker.size() == 1);
    ScalarMatrix v(3, 1, f);
    for (std::size_t i = 0; i < 3; ++i) v(i, 0) = ker[0][i];
    CHECK((m * v).is_zero());
    CHECK(determinant(ScalarMatrix(Q(), {{2, 1}, {1, 1}})) == S(1));
  }
}
