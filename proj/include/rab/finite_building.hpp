#pragma once

// Finite right-angled buildings: product buildings, decomposition of an
// abstract finite building as a product, and extension of partial morphisms
// from star-like sets.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rab/chamber_system.hpp"
#include "rab/coxeter.hpp"

namespace rab {

// prod_s Y_s with Y_s = {0, ..., sizes[s]-1}. Two chambers are t-adjacent when
// they agree off coordinate t. Chamber ids are mixed-radix with the first
// generator most significant, so ids sort lexicographically by coordinates.
//
// Over a system whose generators all commute this is a finite building; over
// any other system it is the product local building.
class ProductBuilding {
 public:
  ProductBuilding() = default;
  explicit ProductBuilding(std::vector<int> sizes);

  int rank() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }
  int size() const { return total_; }
  bool thick() const;

  std::vector<int> coords(int id) const;
  int id(std::span<const int> coords) const;
  int coord(int id, Gen s) const;
  int with_coord(int id, Gen s, int value) const;

  const ChamberSystem& chambers() const { return chambers_; }
  // Folding based at `base`: the set of coordinates where a chamber differs.
  GenSet fold(int base, int y) const;

 private:
  std::vector<int> sizes_;
  std::vector<int> place_;
  int total_ = 0;
  ChamberSystem chambers_;
};

// A finite chamber system over commuting generator slots 0..rank-1, usually a
// residue. `types[i]` is the global generator of slot i and `labels[x]` the
// id of chamber x in the structure it came from.
struct FiniteBuilding {
  ChamberSystem chambers;
  int base = 0;
  std::vector<Gen> types;
  std::vector<int> labels;

  int size() const { return chambers.size(); }
  int rank() const { return chambers.rank(); }
  static FiniteBuilding from_product(const ProductBuilding& p, int base = 0);
};

// Folding map of a finite right-angled building based at `base`, as subsets
// of slots. Throws AxiomError with a witness when no consistent folding exists.
std::vector<GenSet> fold_finite(const ChamberSystem& cs, int base);

struct ProductDecomposition {
  ProductBuilding product;
  std::vector<int> iso;  // chamber of the input -> product chamber id
};

// Y_s = [B]_{~s}, with B at coordinate 0 and the other panel members in id
// order. Throws AxiomError (with witness) when the input is not a building.
ProductDecomposition decompose_as_product(const FiniteBuilding& b, std::size_t cap = 4096);

// One free choice in a morphism construction: `chamber` must be sent into the
// target panel `candidates` (sorted), of which `used` are already images of
// the source panel.
struct PanelChoice {
  int chamber = -1;
  Gen generator = 0;
  int anchor = -1;  // the already-mapped shortest chamber of the source panel
  std::span<const int> candidates;
  std::span<const int> used;
};

using Chooser = std::function<int(const PanelChoice&)>;

// Least target id not yet used in this panel; least id when all are used.
int least_unused(const PanelChoice& choice);

// Extends psi (defined where psi[x] >= 0, on a star-like set E) to a
// morphism X -> Y. Throws PreconditionError when E is not star-like, psi is
// not a morphism, or the chooser leaves its panel.
std::vector<int> extend_morphism(const FiniteBuilding& x, std::span<const int> psi, const ProductBuilding& y,
                                 const Chooser& chooser = least_unused);

struct EquivarianceResult {
  bool ok = true;
  int witness = -1;  // chamber z with pi_Y(phi(z)) != pi_X(z)
};

// Compares the folding of X based at `base` with the folding of Y based at
// phi(base), through phi.
EquivarianceResult pi_equivariance_check(const ChamberSystem& x, const ChamberSystem& y, std::span<const int> phi,
                                         int base);

}  // namespace rab
