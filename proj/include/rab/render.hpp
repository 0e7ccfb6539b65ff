#pragma once

// SVG picture of one apartment of a 2-dimensional right-angled building: the
// tiling of the Poincare disk by regular right-angled p-gons.

#include <complex>
#include <string>
#include <vector>

#include "rab/coxeter.hpp"

namespace rab {

using Point = std::complex<double>;

// The base p-gon: vertex radius tanh(R/2) with cosh R = cot(pi/p), and the
// circle (center, radius) carrying each side. Side i is fixed by generator i.
struct RightAngledPolygon {
  int p = 0;
  std::vector<Point> vertices;      // side i joins vertices i and i+1
  std::vector<Point> centers;
  std::vector<double> radii;
  std::vector<Point> midpoints;     // on the sides

  explicit RightAngledPolygon(int p);
  // Inversion in the circle of side i.
  Point reflect(int side, Point z) const;
};

struct RenderOptions {
  int depth = 2;
  int size = 800;  // pixels
};

// Draws every chamber of the radius-`depth` ball of W. The system must be a
// p-cycle (p >= 5) listed in cyclic order: generator i commutes exactly with
// i-1 and i+1 mod p. Throws PreconditionError otherwise.
std::string render_apartment_svg(const CoxeterSystem& sys, const RenderOptions& options);

}  // namespace rab
