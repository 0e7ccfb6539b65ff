#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rab/coxeter.hpp"
#include "rab/error.hpp"

using namespace rab;

namespace {

CoxeterSystem d2() { return CoxeterSystem::commuting(2); }
CoxeterSystem a1() { return CoxeterSystem::free_product(2); }
CoxeterSystem p5() { return CoxeterSystem::polygon(5); }

std::string nf(const CoxeterSystem& sys, const char* text) { return format_element(sys, parse_element(sys, text)); }

}  // namespace

TEST_CASE("normal forms of small words") {
  CHECK(nf(d2(), "a b a") == "b");
  CHECK(nf(a1(), "a b a b") == "a.b.a.b");
  CHECK(parse_element(a1(), "a b a b").length() == 4);
  CHECK(nf(p5(), "s2 s1 s2") == "s1");
  CHECK(nf(p5(), "s2.s1") == "s1.s2");
  CHECK(nf(p5(), "1") == "1");
  CHECK(nf(p5(), "e") == "1");
  CHECK(nf(p5(), "s3 s3") == "1");
}

TEST_CASE("unknown generator names are rejected") {
  CHECK_THROWS_AS(parse_element(p5(), "s6"), PreconditionError);
  CHECK_THROWS_AS(CoxeterSystem({"a", "a"}, {}), PreconditionError);
  CHECK_THROWS_AS(CoxeterSystem({"a", "b"}, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(CoxeterSystem({"a", "b"}, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("products, inverses and distances") {
  const auto sys = p5();
  const Element a = parse_element(sys, "s1 s3 s5 s2");
  CHECK(multiply(sys, a, inverse(sys, a)).is_identity());
  CHECK(dist(sys, Element{}, parse_element(sys, "s1")) == 1);
  CHECK(dist(sys, a, a) == 0);
}

TEST_CASE("descent sets") {
  CHECK(descent_set(p5(), Element{}) == 0);
  const auto sys = p5();
  CHECK(descent_set(sys, parse_element(sys, "s1 s2")) == (bit(0) | bit(1)));
  CHECK(descent_set(a1(), parse_element(a1(), "a b a b")) == bit(1));
}

TEST_CASE("ball enumeration sizes") {
  CHECK(enumerate_ball(d2(), 2).size() == 4);
  CHECK(enumerate_ball(p5(), 2).size() == 21);
  CHECK(enumerate_ball(a1(), 3).size() == 7);
  CHECK_THROWS_AS(enumerate_ball(p5(), 6, 100), CapExceeded);
}

TEST_CASE("normal-form length matches the Cayley graph on random P5 words") {
  const auto sys = p5();
  const oracle::Tits rep(sys);
  const oracle::CayleyBall cayley(rep, 8);
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> letter(0, 4), len(0, 8);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Gen> word(static_cast<std::size_t>(len(rng)));
    for (auto& s : word) s = letter(rng);
    const Element e = normal_form(sys, word);
    const auto m = rep.of_word(word);
    REQUIRE(cayley.distance.count(m));
    CHECK(e.length() == cayley.distance.at(m));
    CHECK(rep.of(e) == m);
  }
}

TEST_CASE("WordBall multiplication table agrees with multiply") {
  const auto sys = p5();
  const WordBall ball(sys, 3);
  for (int i = 0; i < ball.size(); ++i)
    for (Gen s = 0; s < sys.rank(); ++s) {
      const Element ws = multiply(sys, ball[i], s);
      const int j = ball.times(i, s);
      if (ws.length() > 3) {
        CHECK(j == -1);
      } else {
        REQUIRE(j >= 0);
        CHECK(ball[j] == ws);
      }
    }
}

TEST_CASE("coset minimum is the shortest element of the coset") {
  const auto sys = p5();
  const oracle::Tits rep(sys);
  const auto ball = enumerate_ball(sys, 4);
  const GenSet t = bit(1) | bit(4);
  for (const Element& g : enumerate_ball(sys, 2)) {
    const Element m = coset_minimum(sys, g, t);
    CHECK(in_parabolic(multiply(sys, inverse(sys, g), m), t));
    for (const Element& h : ball)
      if (in_parabolic(multiply(sys, inverse(sys, g), h), t)) CHECK(h.length() >= m.length());
  }
}

TEST_CASE("property (+-1) holds exhaustively in a P5 ball") {
  const auto sys = p5();
  const auto ball = enumerate_ball(sys, 3);
  for (const Element& a : ball)
    for (const Element& b : ball)
      for (Gen s = 0; s < 5; ++s) REQUIRE(property_pm1_check(sys, a, b, s));
}

TEST_CASE("property (R) holds for commuting pairs") {
  const auto sys = p5();
  const auto ball = enumerate_ball(sys, 3);
  for (const Element& r : enumerate_ball(sys, 2))
    for (const Element& x : ball) {
      REQUIRE(property_R_check(sys, r, 0, 1, x));
      REQUIRE(property_R_check(sys, r, 2, 3, x));
    }
  CHECK_THROWS_AS(property_R_check(sys, Element{}, 0, 2, Element{}), PreconditionError);
}

TEST_CASE("system hash is stable") {
  CHECK(p5().hash() == CoxeterSystem::polygon(5).hash());
  CHECK(p5().hash() != CoxeterSystem::polygon(6).hash());
}
