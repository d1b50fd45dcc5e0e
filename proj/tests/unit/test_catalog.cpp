#include <doctest.h>

#include <random>

#include "cliffq/catalog.hpp"
#include "cliffq/clifford.hpp"
#include "cliffq/errors.hpp"
#include "support.hpp"

using namespace cliffq;
using namespace cliffq::test;

namespace {

QuadricNet simple_net(Field f) {
  // A55 = 0, row 5 = (u, v, w, 0, 0), the 4x4 block generic enough
  const std::array<std::string, 15> upper{"u", "v", "w", "u + v", "u",
                                          "w", "v", "0", "v",
                                          "u + w", "0", "w",
                                          "u - v", "0",
                                          "0"};
  std::array<Poly, 15> p{};
  for (std::size_t i = 0; i < 15; ++i) p[i] = P(upper[i], f);
  return QuadricNet::from_upper(p);
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("degree patterns follow the table") {
    CHECK(pattern_of(DelPezzoTag::F23) == DegreePattern{{0, 0, 0}, 1});
    CHECK(pattern_of(DelPezzoTag::F24) == DegreePattern{{0, 1, 1}, 0});
    CHECK(pattern_of(DelPezzoTag::F25minus) == DegreePattern{{0, 0, 1}, 1});
    CHECK_THROWS_AS(pattern_of(DelPezzoTag::F25plus), UnknownTag);
  }

  TEST_CASE("make_type examples") {
    const QForm q = make_type(DelPezzoTag::F23, std::array<Poly, 6>{P("u"), P("0"), P("0"), P("v"), P("0"), P("w")});
    CHECK(discriminant(q).degree() == 3u);

    const QForm r = make_type(DelPezzoTag::F25minus, 42, F(101));
    const std::array<std::array<unsigned, 3>, 3> expected{{{1, 1, 2}, {1, 1, 2}, {2, 2, 3}}};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        REQUIRE_FALSE(r.entries()(i, j).is_zero());
        CHECK(*r.entries()(i, j).degree() == expected[i][j]);
      }
    }

    CHECK_THROWS_AS(make_type(DelPezzoTag::F24, std::array<Poly, 6>{P("1"), P("u"), P("v"), P("u^2"), P("v*w"),
                                                                     P("w^3")}),
                    DegreePatternViolation);
  }

  TEST_CASE("make_type is reproducible and nondegenerate") {
    for (auto tag : {DelPezzoTag::F23, DelPezzoTag::F24, DelPezzoTag::F25minus}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const QForm a = make_type(tag, seed, F(101));
        CHECK(a == make_type(tag, seed, F(101)));
        const Poly d = discriminant(a);
        CHECK(static_cast<int>(*d.degree()) == delpezzo_type(tag).discriminant_degree);
      }
      CHECK_NOTHROW(make_type(tag, 1, Q()));
    }
  }

  TEST_CASE("resolution metadata") {
    CHECK(resolution_metadata(DelPezzoTag::F23).source.to_string() == "O(-2)^3");
    CHECK(resolution_metadata(DelPezzoTag::F23).target.to_string() == "O(-1)^3");
    CHECK(resolution_metadata(DelPezzoTag::F24).source.to_string() == "O(-2) + O(-3)^2");
    CHECK(resolution_metadata(DelPezzoTag::F24).target.to_string() == "O(-2) + O(-1)^2");
    CHECK(resolution_metadata(DelPezzoTag::F25plus).source.to_string() == "Omega^1(-2) + O(-3)");
    CHECK(resolution_metadata(DelPezzoTag::F25plus).target.to_string() == "Omega^1 + O(-2)");
    for (auto tag : all_tags()) {
      CHECK(resolution_metadata(tag).target == delpezzo_type(tag).vstar);
      CHECK(resolution_metadata(tag).target.rank() == 3);
      CHECK(resolution_metadata(tag).source.rank() == 3);
    }
  }

  TEST_CASE("V* of the line-bundle types comes from the normalized pattern") {
    for (auto tag : {DelPezzoTag::F23, DelPezzoTag::F24, DelPezzoTag::F25minus}) {
      CHECK(vstar_of_pattern(pattern_of(tag)) == delpezzo_type(tag).vstar);
    }
  }

  TEST_CASE("chi of V*: 0, 0, -1, 0") {
    CHECK(chi_bundle(delpezzo_type(DelPezzoTag::F23).vstar) == 0);
    CHECK(chi_bundle(delpezzo_type(DelPezzoTag::F24).vstar) == 0);
    CHECK(chi_bundle(delpezzo_type(DelPezzoTag::F25plus).vstar) == -1);
    CHECK(chi_bundle(delpezzo_type(DelPezzoTag::F25minus).vstar) == 0);
  }

  TEST_CASE("QuadricNet validation") {
    CHECK_NOTHROW(simple_net(F(101)));
    auto upper = simple_net(F(101)).upper();
    auto bad = upper;
    bad[14] = P("u", F(101));  // A55 != 0
    CHECK_THROWS_AS(QuadricNet::from_upper(bad), InvalidNet);
    bad = upper;
    bad[4] = P("v", F(101));  // A15 != u
    CHECK_THROWS_AS(QuadricNet::from_upper(bad), InvalidNet);
    bad = upper;
    bad[0] = P("u^2", F(101));
    CHECK_THROWS_AS(QuadricNet::from_upper(bad), InvalidNet);
    CHECK_THROWS_AS(QuadricNet(PolyMatrix(3, 3, Ring::uvw(), F(101))), InvalidNet);
  }

  TEST_CASE("F25plus provider: det5 is a quintic and degeneracy matches") {
    const F25PlusProvider prov = make_f25plus(random_net(7, F(101)));
    CHECK(prov.det5().degree() == 5u);
    CHECK(prov.det5().is_homogeneous());
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
      const FiberPoint q = random_point(rng, F(101));
      const ScalarMatrix b = prov.form_at(q);
      CHECK(b.is_symmetric());
      CHECK((determinant(b).is_zero() == prov.det5_vanishes_at(q)));
      if (!prov.det5_vanishes_at(q)) CHECK(rank(b) == 3);
    }
  }

  TEST_CASE("F25plus projection is exact over P^2(F_5)") {
    const F25PlusProvider prov = make_f25plus(random_net(3, F(5)));
    for (const auto& q : projective_plane(F(5))) {
      const ScalarMatrix b = prov.form_at(q);
      CHECK((determinant(b).is_zero() == prov.det5_vanishes_at(q)));
      CHECK(classify(fiber_algebra(b)) == algebra_type_of_rank(rank(b)));
    }
  }

  TEST_CASE("projected form: det A = -(pivot)^2 det B on a hand-made net") {
    const QuadricNet net = simple_net(F(101));
    const F25PlusProvider prov(net);
    const FiberPoint q = pt(3, 5, 7, F(101));
    const ScalarMatrix a = net.matrix().evaluate(q.coordinates());
    const ScalarMatrix b = prov.form_at(q);
    // kernel basis (n1, n2, n3) plus e5 and e1: only A(e1, e5) = u survives
    const Scalar r = q.coordinates()[0];
    CHECK(determinant(a) == -(r * r) * determinant(b));
  }
}
