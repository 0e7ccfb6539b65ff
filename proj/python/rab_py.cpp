#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rab/building.hpp"
#include "rab/complexes.hpp"
#include "rab/error.hpp"
#include "rab/halfspace.hpp"
#include "rab/io.hpp"
#include "rab/morphism.hpp"
#include "rab/render.hpp"
#include "rab/verify.hpp"

namespace py = pybind11;
using namespace rab;

namespace {

std::vector<std::string> format_all(const CoxeterSystem& sys, const std::vector<Element>& elems) {
  std::vector<std::string> out;
  for (const auto& e : elems) out.push_back(format_element(sys, e));
  return out;
}

py::list homology_table(const SimplicialComplex& c) {
  py::list out;
  for (const auto& h : reduced_homology(c)) {
    py::list torsion;
    for (const auto& t : h.torsion) torsion.append(py::int_(py::str(t.str())));
    out.append(py::make_tuple(h.dimension, h.rank, torsion));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_rabuild, m) {
  m.doc() = "Right-angled Coxeter groups and right-angled buildings";

  static py::exception<Error> error(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<TruncatedError>(m, "TruncatedError", error.ptr());
  py::register_exception<AxiomError>(m, "AxiomError", error.ptr());

  py::class_<CoxeterSystem>(m, "CoxeterSystem")
      .def(py::init<std::vector<std::string>, const std::vector<std::pair<Gen, Gen>>&>(), py::arg("names"),
           py::arg("commuting") = std::vector<std::pair<Gen, Gen>>{})
      .def_static("polygon", &CoxeterSystem::polygon)
      .def_static("free_product", &CoxeterSystem::free_product)
      .def_static("commuting", &CoxeterSystem::commuting)
      .def_static("parse", [](const std::string& text) { return parse_racs(text); })
      .def_property_readonly("rank", &CoxeterSystem::rank)
      .def_property_readonly("names", &CoxeterSystem::names)
      .def("commute", &CoxeterSystem::commute)
      .def("hash", [](const CoxeterSystem& s) { return hex64(s.hash()); })
      .def("to_racs", [](const CoxeterSystem& s) { return format_racs(s); })
      .def("normal_form", [](const CoxeterSystem& s, const std::string& w) { return format_element(s, parse_element(s, w)); })
      .def("length", [](const CoxeterSystem& s, const std::string& w) { return parse_element(s, w).length(); })
      .def("multiply",
           [](const CoxeterSystem& s, const std::string& a, const std::string& b) {
             return format_element(s, multiply(s, parse_element(s, a), parse_element(s, b)));
           })
      .def("descent_set",
           [](const CoxeterSystem& s, const std::string& w) {
             std::vector<std::string> out;
             for (Gen g : members(descent_set(s, parse_element(s, w)))) out.push_back(s.name(g));
             return out;
           })
      .def("ball", [](const CoxeterSystem& s, int k) { return format_all(s, enumerate_ball(s, k)); })
      .def("shortest_element",
           [](const CoxeterSystem& s, const std::string& w, const std::string& g) {
             return format_element(s, shortest_element(s, HalfSpace{parse_element(s, w), s.index(g)}));
           })
      .def("convex_hull", [](const CoxeterSystem& s, const std::vector<std::string>& seeds) {
        std::vector<Element> elems;
        for (const auto& w : seeds) elems.push_back(parse_element(s, w));
        const auto hull = convex_hull(s, elems);
        return format_all(s, std::vector<Element>(hull.begin(), hull.end()));
      });

  py::class_<BuildingBall>(m, "BuildingBall")
      .def_property_readonly("size", &BuildingBall::size)
      .def_property_readonly("radius", &BuildingBall::radius)
      .def_property_readonly("system", &BuildingBall::system)
      .def("fold", [](const BuildingBall& b, int x) { return format_element(b.system(), b.fold(x)); })
      .def("panel",
           [](const BuildingBall& b, const std::string& s, int x) {
             const auto p = b.chambers().panel(b.system().index(s), x);
             return std::vector<int>(p.begin(), p.end());
           })
      .def("to_bldg", [](const BuildingBall& b) { return format_bldg(b); })
      .def_static("parse", [](const std::string& text) { return parse_bldg(text); })
      .def("check",
           [](const BuildingBall& b, const std::vector<std::string>& names) {
             std::vector<std::tuple<std::string, bool, std::string>> out;
             for (const auto& r : run_checks(b, names)) out.emplace_back(r.name, r.passed, r.witness);
             return out;
           },
           py::arg("names") = std::vector<std::string>{"axioms", "panels", "fibers", "f1", "f2", "f3", "b1"})
      .def("section", [](const BuildingBall& b, int x) { return build_section(b, x); })
      .def("realize_homology", [](const BuildingBall& b) { return homology_table(realize(b)); });

  m.def("build_regular", [](const CoxeterSystem& s, const std::vector<int>& q, int k) { return build_regular(s, q, k); },
        py::arg("system"), py::arg("q"), py::arg("radius"));
  m.def("build_by_covering",
        [](const CoxeterSystem& s, const std::vector<int>& sizes, int k) {
          auto c = build_by_covering(s, sizes, k);
          return py::make_tuple(std::move(c.ball), c.covering);
        },
        py::arg("system"), py::arg("factor_sizes"), py::arg("radius"));
  m.def("find_isomorphism", [](const BuildingBall& a, const BuildingBall& b) -> py::object {
    auto r = find_isomorphism(a, b);
    if (r.map) return py::cast(*r.map);
    return py::none();
  });
  m.def("disjoint_pair",
        [](const BuildingBall& b, const std::vector<int>& n) {
          const auto p = disjoint_pair(b, n);
          const auto report = verify_disjoint_pair(b, p);
          return py::dict(py::arg("core") = p.core, py::arg("phi") = p.phi, py::arg("psi") = p.psi,
                          py::arg("ok") = report.ok());
        });
  m.def("antipodal_homology", [](const std::vector<int>& sizes) {
    return homology_table(antipodal_subcomplex(ProductBuilding(sizes), 0));
  });
  m.def("join_homology", [](const std::vector<int>& sizes) { return homology_table(join_complex(ProductBuilding(sizes))); });
  m.def("render_svg", [](int p, int depth, int size) {
    return render_apartment_svg(CoxeterSystem::polygon(p), RenderOptions{depth, size});
  }, py::arg("p") = 5, py::arg("depth") = 2, py::arg("size") = 800);
}
