#include "doctest.h"
#include "oracles.hpp"
#include "rab/halfspace.hpp"

using namespace rab;

namespace {

Element el(const CoxeterSystem& sys, const char* text) { return parse_element(sys, text); }

std::set<Element> set_of(const CoxeterSystem& sys, std::initializer_list<const char*> words) {
  std::set<Element> out;
  for (const char* w : words) out.insert(el(sys, w));
  return out;
}

}  // namespace

TEST_CASE("membership examples") {
  const auto p5 = CoxeterSystem::polygon(5);
  const HalfSpace h{Element{}, 0};
  CHECK(contains(p5, h, el(p5, "s1")));
  CHECK_FALSE(contains(p5, h, Element{}));
  const auto a1 = CoxeterSystem::free_product(2);
  CHECK(contains(a1, HalfSpace{el(a1, "b"), 0}, el(a1, "b a b")));
}

TEST_CASE("membership agrees with the root-sign oracle and complements partition") {
  const auto sys = CoxeterSystem::polygon(5);
  const oracle::Tits rep(sys);
  const auto ball = enumerate_ball(sys, 4);
  for (const Element& w : enumerate_ball(sys, 2))
    for (Gen s = 0; s < 5; ++s) {
      const HalfSpace hs{w, s};
      const HalfSpace co = complement(sys, hs);
      for (const Element& h : ball) {
        const bool in = contains(sys, hs, h);
        REQUIRE(in == rep.in_half_space(w, s, h));
        REQUIRE(in != contains(sys, co, h));
      }
    }
}

TEST_CASE("wall reflection swaps the two sides") {
  const auto sys = CoxeterSystem::polygon(5);
  for (const Element& w : enumerate_ball(sys, 2))
    for (Gen s = 0; s < 5; ++s) {
      const HalfSpace hs{w, s};
      const Element r = wall_reflection(sys, hs);
      CHECK(multiply(sys, r, w) == multiply(sys, w, s));
      for (const Element& h : enumerate_ball(sys, 2))
        CHECK(contains(sys, hs, h) != contains(sys, hs, multiply(sys, r, h)));
    }
}

TEST_CASE("shortest elements") {
  const auto p5 = CoxeterSystem::polygon(5);
  for (Gen s = 0; s < 5; ++s) CHECK(shortest_element(p5, HalfSpace{Element{}, s}) == Element{{s}});
  const auto a1 = CoxeterSystem::free_product(2);
  CHECK(format_element(a1, shortest_element(a1, HalfSpace{el(a1, "b"), 0})) == "b.a");
  const HalfSpace n = normalize(a1, HalfSpace{el(a1, "b a"), 1});
  CHECK(n.normalized);
  CHECK(multiply(a1, n.w, n.s) == shortest_element(a1, n));
  // H(bab, b) is the side of ba, which contains 1.
  const HalfSpace near{el(a1, "b a b"), 1};
  CHECK(shortest_element(a1, near).is_identity());
  CHECK_FALSE(normalize(a1, near).normalized);
}

TEST_CASE("crossing set is ws times the centralizer subgroup") {
  const auto sys = CoxeterSystem::polygon(5);
  const CrossingSet c = crossing_set(sys, HalfSpace{Element{}, 0});
  CHECK(c.representative == el(sys, "s1"));
  CHECK(c.centralizer == (bit(1) | bit(4)));
  // s2 and s5 do not commute, so the coset is infinite; within radius 3:
  std::set<Element> got;
  for (const Element& h : enumerate_ball(sys, 3))
    if (c.contains(sys, h)) got.insert(h);
  CHECK(got == set_of(sys, {"s1", "s1 s2", "s1 s5", "s1 s2 s5", "s1 s5 s2"}));
  // Direct definition: h in H with hs outside H.
  const HalfSpace hs{Element{}, 0};
  for (const Element& h : enumerate_ball(sys, 4))
    CHECK(c.contains(sys, h) == (contains(sys, hs, h) && !contains(sys, hs, multiply(sys, h, 0))));
}

TEST_CASE("intervals match the distance oracle") {
  const auto sys = CoxeterSystem::polygon(5);
  const oracle::Tits rep(sys);
  const auto ball = enumerate_ball(sys, 3);
  for (const Element& v : enumerate_ball(sys, 3)) {
    std::set<Element> expect;
    const int d = rep.dist(Element{}, v);
    for (const Element& h : ball)
      if (rep.dist(Element{}, h) + rep.dist(h, v) == d) expect.insert(h);
    const auto got = interval(sys, Element{}, v);
    CHECK(std::set<Element>(got.begin(), got.end()) == expect);
  }
}

TEST_CASE("convex hull examples") {
  const auto a1 = CoxeterSystem::free_product(2);
  CHECK(convex_hull(a1, {Element{}, el(a1, "a")}) == set_of(a1, {"1", "a"}));
  const auto d2 = CoxeterSystem::commuting(2);
  CHECK(convex_hull(d2, {Element{}, el(d2, "a b")}) == set_of(d2, {"1", "a", "b", "a b"}));
  const auto p5 = CoxeterSystem::polygon(5);
  // s1 and s3 do not commute: s1.s3 has a single reduced word.
  CHECK(convex_hull(p5, {Element{}, el(p5, "s1 s3")}) == set_of(p5, {"1", "s1", "s1 s3"}));
  CHECK(convex_hull(p5, {Element{}, el(p5, "s1 s2")}) == set_of(p5, {"1", "s1", "s2", "s1 s2"}));
}

TEST_CASE("convex hulls are closed under intervals") {
  const auto sys = CoxeterSystem::polygon(5);
  const auto hull = convex_hull(sys, {el(sys, "s1 s3"), el(sys, "s2 s4"), el(sys, "s5")});
  for (const Element& u : hull)
    for (const Element& v : hull)
      for (const Element& h : interval(sys, u, v)) REQUIRE(hull.count(h));
}
