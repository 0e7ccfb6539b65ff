#include "rab/halfspace.hpp"

#include <deque>
#include <unordered_set>

#include "rab/error.hpp"

namespace rab {

bool contains(const CoxeterSystem& sys, const HalfSpace& hs, const Element& h) {
  const Element ws = multiply(sys, hs.w, hs.s);
  return dist(sys, h, ws) < dist(sys, h, hs.w);
}

HalfSpace complement(const CoxeterSystem& sys, const HalfSpace& hs) {
  return HalfSpace{multiply(sys, hs.w, hs.s), hs.s, false};
}

Element wall_reflection(const CoxeterSystem& sys, const HalfSpace& hs) {
  return multiply(sys, multiply(sys, hs.w, hs.s), inverse(sys, hs.w));
}

bool CrossingSet::contains(const CoxeterSystem& sys, const Element& h) const {
  return in_parabolic(multiply(sys, inverse(sys, representative), h), centralizer);
}

CrossingSet crossing_set(const CoxeterSystem& sys, const HalfSpace& hs) {
  return CrossingSet{multiply(sys, hs.w, hs.s), sys.commuting_with(hs.s)};
}

namespace {

Element crossing_minimum(const CoxeterSystem& sys, const HalfSpace& hs) {
  const CrossingSet c = crossing_set(sys, hs);
  return coset_minimum(sys, c.representative, c.centralizer);
}

}  // namespace

Element shortest_element(const CoxeterSystem& sys, const HalfSpace& hs) {
  if (contains(sys, hs, Element{})) return Element{};
  return crossing_minimum(sys, hs);
}

HalfSpace normalize(const CoxeterSystem& sys, const HalfSpace& hs) {
  const Element g = crossing_minimum(sys, hs);
  return HalfSpace{multiply(sys, g, hs.s), hs.s, !contains(sys, hs, Element{})};
}

std::vector<Element> interval(const CoxeterSystem& sys, const Element& u, const Element& v) {
  const int total = dist(sys, u, v);
  std::vector<Element> out{u};
  std::unordered_set<Element, ElementHash> seen{u};
  std::deque<std::pair<Element, int>> queue{{u, 0}};
  while (!queue.empty()) {
    auto [x, dx] = queue.front();
    queue.pop_front();
    if (dx == total) continue;
    for (Gen s = 0; s < sys.rank(); ++s) {
      Element y = multiply(sys, x, s);
      if (seen.count(y) || dist(sys, y, v) != total - dx - 1) continue;
      seen.insert(y);
      out.push_back(y);
      queue.emplace_back(std::move(y), dx + 1);
    }
  }
  return out;
}

std::set<Element> convex_hull(const CoxeterSystem& sys, const std::vector<Element>& seeds,
                              std::size_t cap) {
  if (seeds.empty()) throw PreconditionError("convex hull of an empty set");
  if (cap == 0) cap = resource_cap();
  std::set<Element> hull(seeds.begin(), seeds.end());
  std::vector<Element> fresh(hull.begin(), hull.end());
  while (!fresh.empty()) {
    const std::vector<Element> old(hull.begin(), hull.end());
    std::vector<Element> added;
    for (const Element& a : fresh)
      for (const Element& b : old)
        for (Element& x : interval(sys, a, b))
          if (hull.insert(x).second) {
            added.push_back(std::move(x));
            if (hull.size() > cap) throw CapExceeded("convex hull exceeds the element cap");
          }
    fresh = std::move(added);
  }
  return hull;
}

}  // namespace rab
