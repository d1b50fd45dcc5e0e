#include <doctest.h>

#include "cliffq/catalog.hpp"
#include "cliffq/errors.hpp"
#include "cliffq/qform.hpp"
#include "support.hpp"

using namespace cliffq;
using namespace cliffq::test;

TEST_SUITE("qform") {
  TEST_CASE("new_qform examples") {
    CHECK_NOTHROW(diag_uvw());
    CHECK_NOTHROW(QForm(DegreePattern{{0, 1, 1}, 0}, sym3({"1", "u", "v", "u^2", "v*w", "w^2"})));
    CHECK_THROWS_AS(QForm(DegreePattern{{0, 0, 0}, 1}, sym3({"u^2", "0", "0", "v", "0", "w"})),
                    DegreePatternViolation);
    PolyMatrix asym(3, 3, std::vector<Poly>{P("u"), P("v"), P("0"), P("w"), P("v"), P("0"), P("0"), P("0"), P("w")});
    CHECK_THROWS_AS(QForm(DegreePattern{{0, 0, 0}, 1}, asym), AsymmetricEntries);
  }

  TEST_CASE("twist examples") {
    const QForm q = diag_uvw();
    const QForm t = twist(q, 1);
    CHECK(t.pattern() == DegreePattern{{1, 1, 1}, -1});
    CHECK(t.entries() == q.entries());
    CHECK(twist(twist(q, 3), -3) == q);
    const QForm f24 = make_type(DelPezzoTag::F24, 3, F(101));
    for (int m : {-2, -1, 1, 4}) {
      const QForm tw = twist(f24, m);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) CHECK(tw.pattern().entry_degree(i, j) == f24.pattern().entry_degree(i, j));
      }
      CHECK(discriminant(tw) == discriminant(f24));
    }
  }

  TEST_CASE("normalize examples") {
    const QForm n = normalize(diag_uvw());
    CHECK(n.pattern() == DegreePattern{{-1, -1, -1}, 3});
    CHECK(normalize(n) == n);
    CHECK(n.pattern().discriminant_degree() == 3);
    CHECK(diag_uvw().pattern().discriminant_degree() == 3);
    CHECK(n.pattern().d == -(n.pattern().a[0] + n.pattern().a[1] + n.pattern().a[2]));
  }

  TEST_CASE("discriminant examples and degree formula") {
    CHECK(discriminant(diag_uvw()) == P("u*v*w"));
    CHECK(discriminant(QForm(DegreePattern{{0, 0, 0}, 1}, sym3({"u", "0", "0", "v", "0", "0"}))).is_zero());
    for (auto tag : {DelPezzoTag::F23, DelPezzoTag::F24, DelPezzoTag::F25minus}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const QForm q = make_type(tag, seed, F(101));
        const Poly d = discriminant(q);
        REQUIRE_FALSE(d.is_zero());
        CHECK(static_cast<int>(*d.degree()) == q.pattern().discriminant_degree());
        CHECK(static_cast<int>(*d.degree()) == delpezzo_type(tag).discriminant_degree);
      }
    }
  }

  TEST_CASE("rank_at examples") {
    const QForm q = diag_uvw();
    CHECK(rank_at(q, pt(1, 1, 1, Q())) == 3);
    CHECK(rank_at(q, pt(0, 1, 1, Q())) == 2);
    CHECK(rank_at(q, pt(0, 0, 1, Q())) == 1);
    CHECK(rank_at(twist(q, 2), pt(0, 1, 1, Q())) == 2);
  }

  TEST_CASE("fiber_conic_type examples") {
    const QForm q = diag_uvw();
    CHECK(fiber_conic_type(q, pt(1, 1, 1, Q())) == ConicType::SmoothConic);
    CHECK(fiber_conic_type(q, pt(0, 0, 1, Q())) == ConicType::DoubleLine);
    const QForm z(DegreePattern{{0, 0, 0}, 1}, sym3({"u", "0", "0", "u", "0", "u"}));
    CHECK(fiber_conic_type(z, pt(0, 1, 1, Q())) == ConicType::WholePlane);
  }

  TEST_CASE("is_nowhere_zero examples") {
    const auto r = is_nowhere_zero(diag_uvw(F(5)));
    CHECK(r.verdict == Verdict::Holds);
    CHECK(r.points_checked == 31);
    const QForm u_only(DegreePattern{{0, 0, 0}, 1}, sym3({"u", "u", "0", "u", "2*u", "u"}, F(5)));
    const auto w = is_nowhere_zero(u_only, 3);
    REQUIRE(w.verdict == Verdict::Fails);
    CHECK(w.witness->coordinates()[0].is_zero());
    const QForm zero(DegreePattern{{0, 0, 0}, 1}, sym3({"0", "0", "0", "0", "0", "0"}, F(5)));
    CHECK(is_nowhere_zero(zero).verdict == Verdict::Fails);
    CHECK_THROWS_AS(is_nowhere_zero(diag_uvw()), InvalidField);
    CHECK(sample_nowhere_zero(diag_uvw(), 50, 1).verdict == Verdict::Inconclusive);
  }

  TEST_CASE("worker count does not change the nowhere-zero verdict or witness") {
    const QForm q(DegreePattern{{0, 0, 0}, 1}, sym3({"u + v", "0", "w", "u + v", "0", "u + v"}, F(7)));
    const auto a = is_nowhere_zero(q, 1);
    const auto b = is_nowhere_zero(q, 4);
    CHECK(a.verdict == b.verdict);
    CHECK(a.witness == b.witness);
  }

  TEST_CASE("singularity_type_at examples") {
    CHECK(singularity_type_at(P("u*v"), pt(0, 0, 1, Q())) == SingularityType::Node);
    CHECK(singularity_type_at(P("u^2"), pt(0, 1, 1, Q())) == SingularityType::WorseSingularity);
    CHECK(singularity_type_at(P("u"), pt(0, 1, 1, Q())) == SingularityType::SmoothPoint);
    CHECK(singularity_type_at(P("u"), pt(1, 1, 1, Q())) == SingularityType::NotOnCurve);
    CHECK(singularity_type_at(P("u*v*w"), pt(1, 0, 0, Q())) == SingularityType::Node);
    CHECK(singularity_type_at(P("v^2*w - u^3"), pt(0, 0, 1, Q())) == SingularityType::WorseSingularity);
    CHECK(singularity_type_at(P("v^2*w - u^3 - u^2*w"), pt(0, 0, 1, Q())) == SingularityType::Node);
    CHECK_THROWS_AS(singularity_type_at(P("0"), pt(0, 0, 1, Q())), ZeroPolynomial);
  }

  TEST_CASE("FiberPoint normalization") {
    const FiberPoint p = pt(2, 4, 2, Q());
    CHECK(p.to_string() == "1:2:1");
    CHECK(pt(3, 0, 0, Q()).to_string() == "1:0:0");
    CHECK(pt(0, 1, 2, F(5)).to_string() == "0:3:1");
    CHECK_THROWS_AS(pt(0, 0, 0, Q()), InvalidPoint);
    CHECK(projective_plane(F(5)).size() == 31);
    CHECK(projective_plane(F(7)).size() == 57);
  }

  TEST_CASE("discriminant vanishing locus equals rank-drop locus over F_p") {
    for (auto tag : {DelPezzoTag::F23, DelPezzoTag::F24, DelPezzoTag::F25minus}) {
      const QForm q = make_type(tag, 9, F(7));
      const Poly d = discriminant(q);
      std::size_t low_rank = 0, on_disc = 0;
      for (const auto& p : projective_plane(F(7))) {
        if (rank_at(q, p) < 3) ++low_rank;
        if (d.evaluate(p.coordinates()).is_zero()) ++on_disc;
        CHECK(fiber_conic_type(q, p) == conic_type_of_rank(static_cast<std::size_t>(rank_at(q, p))));
      }
      CHECK(low_rank == on_disc);
    }
  }
}
