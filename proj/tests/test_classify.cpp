#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "sumprod/classify.hpp"
#include "support/generators.hpp"

using namespace sumprod;

namespace {
bool contains_arrangement(const std::vector<Triple>& list, const Triple& t) {
  return std::find(list.begin(), list.end(), t) != list.end();
}
}  // namespace

TEST_CASE("first-inequality violations") {
  CHECK(condition_first_violations(Triple(Rat(1), Rat(2), Rat(3))).empty());

  auto v = condition_first_violations(Triple(Rat(3), Rat(10), Rat(24)));
  REQUIRE_FALSE(v.empty());
  CHECK(contains_arrangement(v, Triple(Rat(3), Rat(24), Rat(10))));
  // 3*14^3 = 8232 = 24*7^3
  CHECK(Rat(3) * Rat(14).pow(3) == Rat(8232));
  CHECK(Rat(24) * Rat(7).pow(3) == Rat(8232));

  auto w = condition_first_violations(Triple(Rat(2), Rat(15), Rat(54)));
  REQUIRE_FALSE(w.empty());
  CHECK(contains_arrangement(w, Triple(Rat(2), Rat(54), Rat(15))));
  CHECK(Rat(2) * Rat(39).pow(3) == Rat(118638));

  CHECK_THROWS_AS(condition_first_violations(Triple(Rat(1), Rat(1), Rat(2))),
                  RepeatedEntriesError);
}

TEST_CASE("second-inequality violations") {
  CHECK(condition_second_violations(Triple(Rat(1), Rat(2), Rat(3))).empty());

  auto v = condition_second_violations(Triple(Rat(1), Rat(-2), Rat(4)));
  REQUIRE_FALSE(v.empty());
  CHECK(contains_arrangement(v, Triple(Rat(1), Rat(-2), Rat(4))));
  // 4 - 32 + 4 = -24 = 3*1*(-2)*4

  auto w = condition_second_violations(Triple(Rat(-3), Rat(4), Rat(18)));
  REQUIRE_FALSE(w.empty());
  CHECK(contains_arrangement(w, Triple(Rat(-3), Rat(18), Rat(4))));
}

TEST_CASE("coprime guarantee") {
  CHECK(coprime_guarantee(Triple(Rat(3), Rat(4), Rat(5))));
  CHECK_FALSE(coprime_guarantee(Triple(Rat(3), Rat(10), Rat(24))));  // gcd(10,24) = 2
  CHECK(coprime_guarantee(Triple(Rat(2), Rat(3), Rat(25))));
  CHECK_FALSE(coprime_guarantee(Triple(Rat(3), Rat(3), Rat(5))));  // repeated
  CHECK_THROWS_AS(coprime_guarantee(Triple(Rat(1, 2), Rat(3), Rat(5))), PreconditionError);
  CHECK_THROWS_AS(coprime_guarantee(Triple(Rat(0), Rat(3), Rat(5))), PreconditionError);
}

TEST_CASE("torsion family for (1,2,3)") {
  Triple t(Rat(1), Rat(2), Rat(3));
  TorsionFamily fam = torsion_family(t);
  CHECK(fam.point_for(Triple(Rat(1), Rat(2), Rat(3))) == CurvePoint(Rat(0), Rat(3)));
  CHECK(fam.q == CurvePoint(Rat(3), Rat(3)));
  CHECK(fam.point_for(Triple(Rat(3), Rat(2), Rat(1))) == CurvePoint(Rat(0), Rat(-3)));
  CHECK(fam.point_for(Triple(Rat(2), Rat(3), Rat(1))) == CurvePoint(Rat(1), Rat(-1)));
  for (const CurvePoint& p : fam.points) CHECK(on_curve(p, fam.curve));
  CHECK(on_curve(fam.q, fam.curve));
}

TEST_CASE("torsion family preconditions") {
  CHECK_THROWS_AS(torsion_family(Triple(Rat(1), Rat(1), Rat(2))), RepeatedEntriesError);
  CHECK_THROWS_AS(torsion_family(Triple(Rat(0), Rat(1), Rat(2))), PreconditionError);
  CHECK_THROWS_AS(torsion_family(Triple(Rat(8), Rat(-27), Rat(1))), PreconditionError);
}

TEST_CASE("bounded point order") {
  Triple t(Rat(1), Rat(2), Rat(3));
  TorsionFamily fam = torsion_family(t);
  CHECK(point_order_bounded(fam.q, fam.curve) == 3);
  CHECK_FALSE(point_order_bounded(fam.points[0], fam.curve).has_value());
  CHECK(point_order_bounded(CurvePoint::infinity(), fam.curve) == 1);

  Triple z12(Rat(3), Rat(24), Rat(10));
  TorsionFamily fam12 = torsion_family(z12);
  CHECK(point_order_bounded(fam12.point_for(z12), fam12.curve) == 12);

  CHECK_THROWS_AS(point_order_bounded(CurvePoint(Rat(0), Rat(0)), fam.curve), NotOnCurveError);
}

TEST_CASE("classification verdicts") {
  auto c1 = classify_triple(Triple(Rat(1), Rat(2), Rat(3)));
  CHECK(c1.verdict == Classification::Verdict::Elliptic);
  CHECK(c1.torsion == TorsionType::ZxZ3);
  CHECK(c1.solutions_infinite == Infinitude::Yes);
  CHECK(c1.first_violations.empty());
  CHECK(c1.second_violations.empty());

  auto c2 = classify_triple(Triple(Rat(3), Rat(10), Rat(24)));
  CHECK(c2.torsion == TorsionType::Z12);
  CHECK(c2.solutions_infinite == Infinitude::Unknown);

  auto c3 = classify_triple(Triple(Rat(1), Rat(-2), Rat(4)));
  CHECK(c3.torsion == TorsionType::Z9);
  CHECK(c3.solutions_infinite == Infinitude::Unknown);

  auto c4 = classify_triple(Triple(Rat(8), Rat(-27), Rat(1)));
  CHECK(c4.verdict == Classification::Verdict::GenusZero);
  CHECK(c4.solutions_infinite == Infinitude::Yes);
  REQUIRE(c4.genus_zero_params.has_value());
  CHECK(c4.genus_zero_params->scale == Rat(1));
  CHECK(c4.genus_zero_params->t == Rat(3));

  auto c5 = classify_triple(Triple(Rat(1), Rat(0), Rat(5)));
  CHECK(c5.verdict == Classification::Verdict::ProductZero);
  CHECK(c5.solutions_infinite == Infinitude::Yes);

  auto c6 = classify_triple(Triple(Rat(1), Rat(1), Rat(1)));
  CHECK(c6.verdict == Classification::Verdict::NotPairwiseDistinct);
  CHECK(c6.solutions_infinite == Infinitude::Unknown);
}

TEST_CASE("closed forms match the group law on the examples") {
  CHECK(double_formula(Rat(1), Rat(2), Rat(3)) == CurvePoint(Rat(9, 4), Rat(3, 8)));
  CHECK(minus_p_plus_q_formula(Rat(1), Rat(2), Rat(3)) == CurvePoint(Rat(1), Rat(1)));
  CurvePoint dbl = double_formula(Rat(5, 2), Rat(2), Rat(3, 2));
  CHECK(dbl == CurvePoint(Rat(33, 16), Rat(-15, 64)));
  CHECK(on_curve(dbl, build_curve(Rat(6), Rat(15, 2))));
  CHECK_THROWS_AS(double_formula(Rat(1), Rat(2), Rat(1)), RepeatedEntriesError);
}

TEST_CASE("torsion family relations on sampled triples", "[property]") {
  auto rng = testgen::make_rng(401);
  for (int i = 0; i < 200; ++i) {
    Triple t = testgen::rand_elliptic_triple(rng);
    TorsionFamily fam = torsion_family(t);

    CHECK(point_order_bounded(fam.q, fam.curve) == 3);

    std::set<CurvePoint> distinct(fam.points.begin(), fam.points.end());
    CHECK(distinct.size() == 6);

    for (int j = 0; j < 6; ++j) {
      const Triple& a = fam.arrangements[j];
      const CurvePoint& p = fam.points[j];
      CHECK(fam.point_for(Triple(a.z, a.y, a.x)) == neg(p));
      CHECK(fam.point_for(Triple(a.z, a.x, a.y)) == add(p, fam.q, fam.curve));
      CHECK(double_formula(a.x, a.y, a.z) == scalar_mul(2, p, fam.curve));
      CHECK(minus_p_plus_q_formula(a.x, a.y, a.z) == add(neg(p), fam.q, fam.curve));
      // <q> is disjoint from the family
      CHECK(p.u() != fam.q.u());
    }
  }
}

TEST_CASE("coprime distinct integers classify as Z x Z/3", "[property]") {
  auto rng = testgen::make_rng(402);
  for (int i = 0; i < 200; ++i) {
    Triple t = testgen::rand_coprime_triple(rng);
    CHECK(coprime_guarantee(t));
    auto cls = classify_triple(t);
    CHECK(cls.verdict == Classification::Verdict::Elliptic);
    CHECK(cls.torsion == TorsionType::ZxZ3);
    CHECK(cls.first_violations.empty());
    CHECK(cls.second_violations.empty());
  }
}

TEST_CASE("the two degenerate cases exclude each other on family samples", "[property]") {
  auto rng = testgen::make_rng(403);
  for (int i = 0; i < 50; ++i) {
    Triple a = testgen::rand_family_first_triple(rng);
    CHECK_FALSE(condition_first_violations(a).empty());
    CHECK(condition_second_violations(a).empty());

    Triple b = testgen::rand_family_second_triple(rng);
    CHECK_FALSE(condition_second_violations(b).empty());
    CHECK(condition_first_violations(b).empty());
  }
}

TEST_CASE("torsion type matches bounded point orders", "[property]") {
  auto rng = testgen::make_rng(404);
  for (int i = 0; i < 12; ++i) {
    Triple t = testgen::rand_family_first_triple(rng);
    TorsionFamily fam = torsion_family(t);
    bool some12 = false;
    for (const CurvePoint& p : fam.points) {
      auto n = point_order_bounded(p, fam.curve);
      REQUIRE(n.has_value());
      if (*n == 12) some12 = true;
    }
    CHECK(some12);
  }
  for (int i = 0; i < 12; ++i) {
    Triple t = testgen::rand_family_second_triple(rng);
    TorsionFamily fam = torsion_family(t);
    for (const CurvePoint& p : fam.points) {
      CHECK(point_order_bounded(p, fam.curve) == 9);
    }
  }
}
