#pragma once

// Balls of standard right-angled buildings.
//
// A BuildingBall holds every chamber whose folding has length <= radius,
// together with the restriction of each s-panel. Chamber ids are dense and
// follow the construction sweep: length-major, ShortLex within a length, and
// by the id of the chamber being glued onto.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rab/chamber_system.hpp"
#include "rab/coxeter.hpp"
#include "rab/finite_building.hpp"
#include "rab/halfspace.hpp"

namespace rab {

class BuildingBall {
 public:
  BuildingBall() = default;
  BuildingBall(CoxeterSystem system, int radius, std::vector<int> q, std::size_t cap = 0);

  const CoxeterSystem& system() const { return system_; }
  int radius() const { return radius_; }
  // Thickness parameters; q[s] + 1 is the size of every complete s-panel.
  // Empty for irregular balls.
  const std::vector<int>& q() const { return q_; }
  const WordBall& words() const { return words_; }
  const ChamberSystem& chambers() const { return chambers_; }
  int size() const { return chambers_.size(); }
  int base() const { return 0; }

  // Index of pi(x) in words().
  int fold_index(int x) const { return fold_[static_cast<std::size_t>(x)]; }
  const Element& fold(int x) const { return words_[fold_index(x)]; }
  int length(int x) const { return words_.length(fold_index(x)); }
  GenSet descent(int x) const { return words_.descent(fold_index(x)); }
  // Chambers folding onto words()[i], in id order.
  const std::vector<int>& over(int i) const { return over_[static_cast<std::size_t>(i)]; }

  // x^t for t in In(pi(x)): the unique t-neighbour folding to pi(x)t.
  int lower(int x, Gen t) const;
  // Shortest chamber of Res(x, T); stays inside the ball.
  int residue_minimum(int x, GenSet types) const;
  // Both pi(x) and pi(x)s lie in the ball.
  bool panel_complete(int x, Gen s) const { return words_.times(fold_index(x), s) >= 0; }
  // Res(x, T) lies entirely inside the ball (T spherical).
  bool residue_complete(int x, GenSet types) const;

  // Construction hooks.
  int add_chamber(int fold_index);
  void join(Gen s, int x, int y) { chambers_.join(s, x, y); }
  // Replaces the panel structure wholesale (used by readers and covers).
  void set_structure(ChamberSystem chambers, std::vector<int> fold);

 private:
  CoxeterSystem system_;
  int radius_ = 0;
  std::vector<int> q_;
  WordBall words_;
  ChamberSystem chambers_;
  std::vector<int> fold_;
  std::vector<std::vector<int>> over_;
};

// Free thickness choice for a root pair (x, s): returns q_{x,s} >= 1.
using ThicknessChooser = std::function<int(int chamber, Gen s)>;

// Radius-k ball of the regular building X(W, q) by inductive gluing of
// product buildings. A ThicknessChooser, when given, replaces q[s] at each
// root pair and yields a non-regular standard building.
BuildingBall build_regular(const CoxeterSystem& sys, const std::vector<int>& q, int k,
                           const ThicknessChooser& chooser = {}, std::size_t cap = 0);

struct CoveringBall {
  BuildingBall ball;
  ProductBuilding local;     // Y = prod_s Y_s with |Y_s| = factor_sizes[s]
  std::vector<int> covering; // chamber of the ball -> chamber of Y
};

// Radius-k ball of the universal cover of the product local building,
// realized as the graph product of the cyclic groups Z/n_s over the
// commutation graph. The covering map is the natural projection to the
// direct product, shifted so that B maps to `base`.
CoveringBall build_by_covering(const CoxeterSystem& sys, const std::vector<int>& factor_sizes, int k,
                               int base = 0, std::size_t cap = 0);

struct IsomorphismResult {
  std::optional<std::vector<int>> map;  // chamber of b1 -> chamber of b2
  std::string witness;                  // set when map is empty
};

// Base-preserving isomorphism built with bijective panel choices.
IsomorphismResult find_isomorphism(const BuildingBall& b1, const BuildingBall& b2);

// Res(x, T) for spherical T as a finite building with its shortest chamber
// as base; labels are ball ids. Throws TruncatedError when the residue leaves
// the ball.
FiniteBuilding residue(const BuildingBall& b, int x, GenSet types);
// (w w_T)^{-1} pi restricted to Res(x, T), as subsets of T.
std::vector<GenSet> residue_folding(const BuildingBall& b, const FiniteBuilding& res);

// Pairs (x, s) with In(pi(x)s) = {s}, restricted to complete panels.
std::vector<std::pair<int, Gen>> root_set(const BuildingBall& b);

// A section sigma of pi over the ball with sigma(pi(x)) = x; its image is an
// apartment through B and x. Indexed by words() index.
std::vector<int> build_section(const BuildingBall& b, int x);

struct Neighborhood {
  HalfSpace half_space;      // normalized
  std::vector<int> chambers; // Y, sorted
  std::vector<int> shortest; // every chamber of Y of minimal length
  int anchor = -1;           // a(x) when `shortest` has one element
};

// Closure of {x} under adjacencies whose panel folds into H(w,s), within the
// ball. Throws PreconditionError when pi(x) is outside the half-space.
Neighborhood neighborhood_chambers(const BuildingBall& b, const HalfSpace& hs, int x);

}  // namespace rab
