#include "rab/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "rab/error.hpp"

namespace rab {

RightAngledPolygon::RightAngledPolygon(int p_) : p(p_) {
  if (p < 5) throw PreconditionError("a regular right-angled p-gon in the hyperbolic plane needs p >= 5");
  const double half = std::numbers::pi / p;
  const double big_r = std::acosh(1.0 / std::tan(half));
  const double r = std::tanh(big_r / 2);
  const double d = (1 + r * r) / (2 * r * std::cos(half));
  const double rho = std::sqrt(d * d - 1);
  for (int i = 0; i < p; ++i) vertices.push_back(std::polar(r, std::numbers::pi / 2 + 2 * half * i));
  for (int i = 0; i < p; ++i) {
    const double phi = std::numbers::pi / 2 + 2 * half * i + half;
    centers.push_back(std::polar(d, phi));
    radii.push_back(rho);
    midpoints.push_back(std::polar(d - rho, phi));
  }
}

Point RightAngledPolygon::reflect(int side, Point z) const {
  const Point c = centers[static_cast<std::size_t>(side)];
  const double rho = radii[static_cast<std::size_t>(side)];
  return c + rho * rho / std::conj(z - c);
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

const char* kFill[] = {"#f4d35e", "#90caf9", "#a5d6a7", "#ffab91", "#ce93d8", "#80cbc4", "#fff59d", "#b0bec5"};

}  // namespace

std::string render_apartment_svg(const CoxeterSystem& sys, const RenderOptions& options) {
  const int p = sys.rank();
  if (p < 5) throw PreconditionError("render needs a p-gon system with p >= 5");
  for (Gen a = 0; a < p; ++a)
    for (Gen b = 0; b < p; ++b) {
      const bool neighbours = a != b && ((a + 1) % p == b || (b + 1) % p == a);
      if (sys.commute(a, b) != neighbours)
        throw PreconditionError("render needs generators listed around a p-cycle of commuting pairs");
    }
  if (options.depth < 0) throw PreconditionError("depth must be >= 0");
  const RightAngledPolygon poly(p);
  const double half = options.size / 2.0;
  const double scale = half - 10;
  auto screen = [&](Point z) { return Point(half + scale * z.real(), half - scale * z.imag()); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.size) + "\" height=\"" +
         std::to_string(options.size) + "\" viewBox=\"0 0 " + std::to_string(options.size) + ' ' +
         std::to_string(options.size) + "\">\n";
  out += "<circle cx=\"" + num(half) + "\" cy=\"" + num(half) + "\" r=\"" + num(scale) +
         "\" fill=\"#ffffff\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

  for (const Element& w : enumerate_ball(sys, options.depth)) {
    auto image = [&](Point z) {
      for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) z = poly.reflect(*it, z);
      return z;
    };
    std::string d;
    for (int i = 0; i < p; ++i) {
      const Point a = screen(image(poly.vertices[static_cast<std::size_t>(i)]));
      const Point b = screen(image(poly.vertices[static_cast<std::size_t>((i + 1) % p)]));
      const Point m = screen(image(poly.midpoints[static_cast<std::size_t>(i)]));
      if (i == 0) d += "M " + num(a.real()) + ' ' + num(a.imag()) + ' ';
      const Point u = m - a, v = b - a;
      const double cross = u.real() * v.imag() - u.imag() * v.real();
      if (std::abs(cross) < 1e-9 * std::norm(v)) {
        d += "L " + num(b.real()) + ' ' + num(b.imag()) + ' ';
        continue;
      }
      // Circle through a, m, b.
      const double ab = std::norm(v), am = std::norm(u);
      const Point center = a + Point(v.imag() * am - u.imag() * ab, u.real() * ab - v.real() * am) / (2 * cross);
      const double radius = std::abs(center - a);
      d += "A " + num(radius) + ' ' + num(radius) + " 0 0 " + (cross > 0 ? "1 " : "0 ") + num(b.real()) + ' ' +
           num(b.imag()) + ' ';
    }
    d += "Z";
    const char* fill = w.is_identity() ? "#ef5350" : kFill[static_cast<std::size_t>(w.length() - 1) % 8];
    out += "<path d=\"" + d + "\" fill=\"" + fill + "\" stroke=\"#222222\" stroke-width=\"0.6\"><title>" +
           format_element(sys, w) + "</title></path>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace rab
