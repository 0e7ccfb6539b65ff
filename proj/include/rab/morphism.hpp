#pragma once

// Morphisms out of building balls: construction with free choices on root-set
// panels, certification of local injectivity/surjectivity, and pairs of
// pi-equivariant self-maps with disjoint images off a convex core.

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rab/building.hpp"
#include "rab/finite_building.hpp"

namespace rab {

// Builds phi: X -> Y with phi(B) = target_base, visiting chambers in `order`
// (ball order when empty; otherwise it must be star-like). A chamber with
// In(pi(x)) = {s} is a free choice inside [phi(x^s)]_s; every other chamber is
// forced by phi(x^t), phi(x^u).
std::vector<int> construct_morphism(const BuildingBall& x, const ChamberSystem& y, int target_base,
                                    const Chooser& chooser = least_unused, std::span<const int> order = {});

// Chooser replaying recorded choices keyed by (chamber, generator). Throws
// PreconditionError on a missing key.
Chooser table_chooser(std::map<std::pair<int, Gen>, int> table);
// The choices a morphism made at root-set panels, as a table for table_chooser.
std::map<std::pair<int, Gen>, int> recorded_choices(const BuildingBall& x, std::span<const int> phi);

struct Certificate {
  bool mono = true;
  bool epi = true;
  bool covering = true;
  std::string mono_witness;
  std::string epi_witness;
  std::string covering_witness;
};

// Decides mono/epi/covering from the root-set panels and again directly on
// every complete spherical residue. Throws TheoremViolation if they differ.
// `y` must contain every residue that an image residue reaches.
Certificate certify(const BuildingBall& x, const ChamberSystem& y, std::span<const int> phi);

struct DisjointPair {
  std::vector<int> core;        // M, sorted
  std::vector<char> in_core;    // indexed by chamber
  std::vector<int> phi;
  std::vector<int> psi;
};

// M = pi^{-1}(conv(pi(N) + {1})). Off M, phi takes the least and psi the
// second-least chamber of [phi(x^s)]_s \ {phi(x^s)}. Throws PreconditionError
// on a non-thick ball or when the hull reaches the last sphere of the ball.
DisjointPair disjoint_pair(const BuildingBall& x, const std::vector<int>& n);

struct DisjointReport {
  bool equivariant = true;
  bool identity_on_core = true;
  bool disjoint = true;
  std::string witness;
  bool ok() const { return equivariant && identity_on_core && disjoint; }
};

// Exhaustive scan of the chamber-level claims about a DisjointPair.
DisjointReport verify_disjoint_pair(const BuildingBall& x, const DisjointPair& pair);

struct RealizationReport {
  bool ok = true;
  std::string witness;
  std::size_t residues_checked = 0;
};

// Residue-level shadow of disjointness in the realization: for every
// spherical T, no residue disjoint from M has the same image residue under
// phi as any such residue under psi.
RealizationReport realization_disjointness_check(const BuildingBall& x, std::span<const char> in_core,
                                                 std::span<const int> phi, std::span<const int> psi);

}  // namespace rab
