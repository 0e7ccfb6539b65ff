#pragma once

// Walls and half-spaces of a right-angled Coxeter group.

#include <set>
#include <vector>

#include "rab/coxeter.hpp"

namespace rab {

// H(w,s) = {h : d(h, ws) < d(h, w)}. `normalized` marks that ws is the
// shortest element of the half-space (so 1 is not in it).
struct HalfSpace {
  Element w;
  Gen s = 0;
  bool normalized = false;

  bool operator==(const HalfSpace&) const = default;
};

bool contains(const CoxeterSystem& sys, const HalfSpace& hs, const Element& h);
// The complementary half-space H(ws, s).
HalfSpace complement(const CoxeterSystem& sys, const HalfSpace& hs);
// The reflection w s w^{-1} in the wall bounding hs.
Element wall_reflection(const CoxeterSystem& sys, const HalfSpace& hs);

// {h in H(w,s) : hs not in H(w,s)} = ws W_{{s}'}.
struct CrossingSet {
  Element representative;  // ws
  GenSet centralizer = 0;  // {s}'

  bool contains(const CoxeterSystem& sys, const Element& h) const;
};

CrossingSet crossing_set(const CoxeterSystem& sys, const HalfSpace& hs);
// The unique shortest element: 1 when 1 is in the half-space, otherwise the
// shortest element of the crossing coset.
Element shortest_element(const CoxeterSystem& sys, const HalfSpace& hs);
// Same half-space, re-expressed as H(gs, s) with g the shortest element of
// the crossing coset.
HalfSpace normalize(const CoxeterSystem& sys, const HalfSpace& hs);

// All elements on minimal galleries from u to v.
std::vector<Element> interval(const CoxeterSystem& sys, const Element& u, const Element& v);
// Smallest superset of `seeds` closed under intervals. Throws CapExceeded.
std::set<Element> convex_hull(const CoxeterSystem& sys, const std::vector<Element>& seeds,
                              std::size_t cap = 0);

}  // namespace rab
