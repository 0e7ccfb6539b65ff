#pragma once

// Simplicial complexes from residue posets and join structures, and their
// reduced integral homology.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rab/building.hpp"
#include "rab/finite_building.hpp"

namespace rab {

using BigInt = boost::multiprecision::cpp_int;

// Every face is listed; each simplex is a sorted vertex list and the list is
// ordered by dimension, then lexicographically.
struct SimplicialComplex {
  std::vector<std::string> labels;  // one per vertex
  std::vector<std::vector<int>> simplices;

  int vertex_count() const { return static_cast<int>(labels.size()); }
  int dimension() const;
  std::vector<std::size_t> face_counts() const;  // index = dimension
  std::int64_t euler_characteristic() const;

  // Adds all faces of the given simplices and sorts.
  static SimplicialComplex from_maximal(std::vector<std::string> labels, const std::vector<std::vector<int>>& faces);
};

// Poset of spherical residues contained in the ball (including the single
// chambers), realized as the complex of chains.
SimplicialComplex realize(const BuildingBall& b);
SimplicialComplex realize(const FiniteBuilding& b);

// Join of the sets Y_i \ {base_i} over the factors of p: the preimage of the
// simplex antipodal to pi(base).
SimplicialComplex antipodal_subcomplex(const ProductBuilding& p, int base);
// Join of the full factor sets Y_i: the finite building as a simplicial
// complex.
SimplicialComplex join_complex(const ProductBuilding& p);

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
  std::int64_t& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  std::int64_t operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
  std::vector<BigInt> diagonal;  // d_1 | d_2 | ... | d_r, all positive
  int rank() const { return static_cast<int>(diagonal.size()); }
};

// Runs in 64-bit arithmetic and restarts with arbitrary precision on overflow.
SmithForm smith_normal_form(const IntMatrix& m);

// Augmented chain complex: boundary[j] maps C_j to C_{j-1}, with C_{-1} = Z
// and boundary[0] the augmentation.
struct ChainComplex {
  std::vector<IntMatrix> boundary;
};

ChainComplex chain_complex(const SimplicialComplex& c);

struct HomologyGroup {
  int dimension = 0;
  int rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
};

// Reduced homology in dimensions -1 .. dim(c).
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& c);

// One simplex per line as space-separated vertex ids, preceded by
// "# vertex <id> <label>" lines.
void write_complex(std::ostream& out, const SimplicialComplex& c);
SimplicialComplex read_complex(std::istream& in);

}  // namespace rab
