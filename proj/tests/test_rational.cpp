#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "sumprod/enumerate.hpp"
#include "sumprod/rational.hpp"
#include "sumprod/triple.hpp"
#include "support/generators.hpp"

using namespace sumprod;

TEST_CASE("parsing reduces and normalizes signs") {
  CHECK(rat_parse("3/6") == Rat(1, 2));
  CHECK(rat_parse("-4/-8") == Rat(1, 2));
  CHECK(rat_parse("7") == Rat(7));
  CHECK(rat_parse("-0") == Rat(0));
  CHECK(rat_parse("4/-6") == Rat(-2, 3));
  CHECK(rat_parse("+5/10") == Rat(1, 2));
}

TEST_CASE("parsing rejects malformed text") {
  CHECK_THROWS_AS(rat_parse(""), ParseError);
  CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
  CHECK_THROWS_AS(rat_parse("x"), ParseError);
  CHECK_THROWS_AS(rat_parse("1/"), ParseError);
  CHECK_THROWS_AS(rat_parse("/2"), ParseError);
  CHECK_THROWS_AS(rat_parse("1//2"), ParseError);
  CHECK_THROWS_AS(rat_parse("1/2/3"), ParseError);
  CHECK_THROWS_AS(rat_parse("1.5"), ParseError);
  CHECK_THROWS_AS(rat_parse(" 1"), ParseError);
}

TEST_CASE("canonical form invariants") {
  Rat r(-6, -4);
  CHECK(r.num() == 3);
  CHECK(r.den() == 2);
  CHECK(Rat(4, -6).to_string() == "-2/3");
  CHECK(Rat(14, 7).to_string() == "2");
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), ParseError);
}

TEST_CASE("format/parse and field axioms roundtrip", "[property]") {
  auto rng = testgen::make_rng(101);
  for (int i = 0; i < 300; ++i) {
    Rat x = testgen::rand_rat(rng, 1000, 60);
    Rat y = testgen::rand_rat(rng, 1000, 60);
    CHECK(rat_parse(x.to_string()) == x);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x * y) / y == x);
  }
}

TEST_CASE("height is max of |numerator| and denominator") {
  CHECK(Rat(49, 15).height() == 49);
  CHECK(Rat(-3, 7).height() == 7);
  CHECK(Rat(0).height() == 1);
  CHECK(Rat(25, 21).height() == 25);
}

TEST_CASE("pow and division guards") {
  CHECK(Rat(-2, 3).pow(3) == Rat(-8, 27));
  CHECK(Rat(2).pow(0) == Rat(1));
  CHECK(Rat(1, 2).pow(-2) == Rat(4));
  CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
  CHECK_THROWS_AS(Rat(0).pow(-1), Error);
}

TEST_CASE("triple invariants and verification examples") {
  CHECK(elementary_invariants(Triple(Rat(0), Rat(0), Rat(0))).s == Rat(0));
  CHECK(elementary_invariants(Triple(Rat(0), Rat(0), Rat(0))).p == Rat(0));
  auto [s, p] = elementary_invariants(Triple(Rat(1), Rat(2), Rat(3)));
  CHECK(s == Rat(6));
  CHECK(p == Rat(6));
  auto [s2, p2] = elementary_invariants(Triple(Rat(8), Rat(-27), Rat(1)));
  CHECK(s2 == Rat(-18));
  CHECK(p2 == Rat(-216));

  Triple ref(Rat(1), Rat(2), Rat(3));
  CHECK(verify_sum_product(ref, Triple(Rat(2), Rat(3), Rat(1))));
  CHECK(verify_sum_product(ref, Triple(Rat(-3, 2), Rat(8), Rat(-1, 2))));
  CHECK_FALSE(verify_sum_product(ref, Triple(Rat(1), Rat(2), Rat(4))));

  CHECK(verify_sum_cubes(ref, Triple(Rat(3), Rat(1), Rat(2))));
  CHECK(verify_sum_cubes(ref, Triple(Rat(15, 2), Rat(-10), Rat(17, 2))));
  CHECK_FALSE(verify_sum_cubes(ref, Triple(Rat(1), Rat(2), Rat(2))));
}

TEST_CASE("invariants are symmetric and reflexive", "[property]") {
  auto rng = testgen::make_rng(102);
  for (int i = 0; i < 200; ++i) {
    Triple t = testgen::rand_triple(rng);
    auto [s, p] = elementary_invariants(t);
    for (const Triple& perm : permutations_of(t)) {
      auto [s2, p2] = elementary_invariants(perm);
      CHECK(s2 == s);
      CHECK(p2 == p);
    }
    CHECK(verify_sum_product(t, t));
    CHECK(verify_sum_cubes(t, t));
  }
}

TEST_CASE("triple helpers") {
  Triple t(Rat(3), Rat(1), Rat(2));
  CHECK(t.sorted() == Triple(Rat(1), Rat(2), Rat(3)));
  CHECK(is_permutation_of(t, Triple(Rat(2), Rat(3), Rat(1))));
  CHECK_FALSE(is_permutation_of(t, Triple(Rat(1), Rat(2), Rat(4))));
  CHECK(t.height() == 3);
  CHECK(Triple(Rat(49, 15), Rat(54, 35), Rat(25, 21)).min_height() == 25);
  CHECK(t.pairwise_distinct());
  CHECK_FALSE(Triple(Rat(1), Rat(1), Rat(2)).pairwise_distinct());
  CHECK(Triple(Rat(1), Rat(2), Rat(3)).all_positive());
  CHECK_FALSE(Triple(Rat(1), Rat(0), Rat(3)).all_nonzero());
}

TEST_CASE("rationals enumerate by height, numerator, denominator") {
  RationalsByHeight seq;
  std::vector<std::string> got;
  for (int i = 0; i < 12; ++i) got.push_back(seq.next().to_string());
  std::vector<std::string> want = {"-1", "0",    "1",    "-2",   "-1/2", "1/2",
                                   "2",  "-3",   "-3/2", "-2/3", "-1/3", "1/3"};
  CHECK(got == want);

  auto all3 = RationalsByHeight::up_to(Int(3));
  CHECK(all3.size() == 15);
  for (const Rat& r : all3) CHECK(r.height() <= 3);
  // completeness at the bound: any reduced n/d with max(|n|, d) <= 3 occurs once
  std::set<std::string> seen;
  for (const Rat& r : all3) CHECK(seen.insert(r.to_string()).second);
  CHECK(seen.count("2/3") == 1);
  CHECK(seen.count("-3/2") == 1);
}
