// rab: command-line front end for right-angled buildings.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rab/building.hpp"
#include "rab/complexes.hpp"
#include "rab/error.hpp"
#include "rab/halfspace.hpp"
#include "rab/io.hpp"
#include "rab/morphism.hpp"
#include "rab/render.hpp"
#include "rab/report.hpp"
#include "rab/verify.hpp"

namespace {

using namespace rab;

struct Input {
  std::string path;
  std::string text;
};

Input load(const std::string& path) { return {path, read_file(path)}; }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw CLI::ValidationError("expected a comma-separated integer list, got '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::string type_names(const CoxeterSystem& sys, GenSet t) {
  std::string out = "{";
  for (Gen g : members(t)) out += (out.size() > 1 ? "," : "") + sys.name(g);
  return out + "}";
}

std::string homology_line(const HomologyGroup& h) {
  std::string line = "H\xcc\x83" + std::to_string(h.dimension) + " rank " + std::to_string(h.rank);
  if (!h.torsion.empty()) {
    line += " torsion";
    for (const auto& t : h.torsion) line += " Z/" + t.str();
  }
  return line;
}

struct Options {
  bool timing = false;
  // ball
  std::string racs;
  int radius = 2;
  // build
  std::string q = "2";
  std::string method = "glue";
  std::string out;
  // verify
  std::string bldg;
  std::string checks = "axioms,panels,fibers,f1,f2,f3,b1";
  // halfspace
  std::vector<std::string> w;
  std::string s;
  std::string op = "shortest";
  int scan_radius = -1;
  // disjoint
  std::string n = "0";
  std::string prefix;
  // homology
  std::string file;
  std::string mode = "realize";
  std::string sizes;
  int base = 0;
  std::string export_path;
  // render
  int p = 5;
  int depth = 2;
  int pixels = 800;
};

int cmd_ball(const Options& o, RunReport& report) {
  const auto in = load(o.racs);
  const auto sys = parse_racs(in.text);
  report.input(in.path, hex64(fnv1a(in.text)));
  const auto ball = enumerate_ball(sys, o.radius);
  std::vector<std::size_t> sphere(static_cast<std::size_t>(o.radius + 1), 0);
  for (const auto& e : ball) ++sphere[static_cast<std::size_t>(e.length())];
  for (std::size_t k = 0; k < sphere.size(); ++k) report.raw("sphere " + std::to_string(k) + ' ' + std::to_string(sphere[k]));
  report.note("elements", std::to_string(ball.size()));
  for (std::size_t i = 0; i < ball.size(); ++i)
    report.raw(std::to_string(i) + ' ' + format_element(sys, ball[i]) + " In=" + type_names(sys, descent_set(sys, ball[i])));
  return 0;
}

int cmd_build(const Options& o, RunReport& report) {
  const auto in = load(o.racs);
  const auto sys = parse_racs(in.text);
  report.input(in.path, hex64(fnv1a(in.text)));
  auto q = int_list(o.q);
  if (q.size() == 1) q.assign(static_cast<std::size_t>(sys.rank()), q[0]);
  if (static_cast<int>(q.size()) != sys.rank()) throw CLI::ValidationError("--q needs one value or one per generator");
  BuildingBall ball;
  if (o.method == "glue") {
    ball = build_regular(sys, q, o.radius);
  } else {
    std::vector<int> sizes;
    for (int v : q) sizes.push_back(v + 1);
    auto cover = build_by_covering(sys, sizes, o.radius);
    const auto cert = certify(cover.ball, cover.local.chambers(), cover.covering);
    report.check("covering", cert.covering, cert.covering_witness);
    ball = std::move(cover.ball);
  }
  const std::string text = format_bldg(ball);
  write_file(o.out, text);
  report.note("method", o.method);
  report.note("chambers", std::to_string(ball.size()));
  report.note("output", o.out + ' ' + hex64(fnv1a(text)));
  return 0;
}

int cmd_verify(const Options& o, RunReport& report) {
  const auto in = load(o.bldg);
  const auto ball = parse_bldg(in.text);
  report.input(in.path, hex64(fnv1a(in.text)));
  report.note("chambers", std::to_string(ball.size()));
  for (const auto& r : run_checks(ball, split_list(o.checks))) report.check(r);
  return 0;
}

int cmd_halfspace(const Options& o, RunReport& report) {
  const auto in = load(o.racs);
  const auto sys = parse_racs(in.text);
  report.input(in.path, hex64(fnv1a(in.text)));
  if (o.w.empty()) throw CLI::ValidationError("--w is required");
  std::vector<Element> ws;
  for (const auto& text : o.w) ws.push_back(parse_element(sys, text));
  if (o.op == "hull") {
    const auto hull = convex_hull(sys, ws);
    report.note("hull size", std::to_string(hull.size()));
    for (const auto& e : hull) report.raw("member " + format_element(sys, e));
    return 0;
  }
  if (o.s.empty()) throw CLI::ValidationError("--s is required for this op");
  const HalfSpace hs{ws[0], sys.index(o.s), false};
  const HalfSpace norm = normalize(sys, hs);
  report.note("half-space", "H(" + format_element(sys, hs.w) + ", " + o.s + ")");
  report.note("normalized", "H(" + format_element(sys, norm.w) + ", " + o.s + ")");
  const Element g = shortest_element(sys, hs);
  if (o.op == "shortest") {
    report.note("shortest", format_element(sys, g));
    // Every element of the half-space within the scan ball is at least as long.
    const int radius = o.scan_radius >= 0 ? o.scan_radius : g.length() + 2;
    bool unique = true;
    std::string witness;
    for (const auto& h : enumerate_ball(sys, radius))
      if (contains(sys, hs, h) && h != g && h.length() <= g.length()) {
        unique = false;
        witness = format_element(sys, h);
        break;
      }
    report.check("unique-shortest", unique, witness);
    return 0;
  }
  if (o.op == "crossing") {
    const auto cs = crossing_set(sys, hs);
    report.note("representative", format_element(sys, cs.representative));
    report.note("centralizer", type_names(sys, cs.centralizer));
    const int radius = o.scan_radius >= 0 ? o.scan_radius : cs.representative.length() + 2;
    report.note("scan radius", std::to_string(radius));
    bool agree = true;
    std::string witness;
    for (const auto& h : enumerate_ball(sys, radius)) {
      const bool by_coset = cs.contains(sys, h);
      const bool by_definition = contains(sys, hs, h) && !contains(sys, hs, multiply(sys, h, hs.s));
      if (by_coset != by_definition && agree) {
        agree = false;
        witness = format_element(sys, h);
      }
      if (by_coset) report.raw("member " + format_element(sys, h));
    }
    report.check("coset-membership", agree, witness);
    return 0;
  }
  throw CLI::ValidationError("--op must be shortest, crossing or hull");
}

int cmd_disjoint(const Options& o, RunReport& report) {
  const auto in = load(o.bldg);
  const auto ball = parse_bldg(in.text);
  const auto hash = fnv1a(in.text);
  report.input(in.path, hex64(hash));
  const auto n = int_list(o.n);
  const auto pair = disjoint_pair(ball, n);
  report.note("core", std::to_string(pair.core.size()) + " chambers");
  const auto r = verify_disjoint_pair(ball, pair);
  report.check("equivariant", r.equivariant, r.witness);
  report.check("identity-on-core", r.identity_on_core, r.witness);
  report.check("disjoint", r.disjoint, r.witness);
  const auto real = realization_disjointness_check(ball, pair.in_core, pair.phi, pair.psi);
  report.note("residues off core", std::to_string(real.residues_checked));
  report.check("realization", real.ok, real.witness);
  if (!o.prefix.empty()) {
    write_file(o.prefix + ".phi", format_map(hash, hash, pair.phi));
    write_file(o.prefix + ".psi", format_map(hash, hash, pair.psi));
    report.note("output", o.prefix + ".phi " + hex64(fnv1a(format_map(hash, hash, pair.phi))));
    report.note("output", o.prefix + ".psi " + hex64(fnv1a(format_map(hash, hash, pair.psi))));
  }
  return 0;
}

int cmd_homology(const Options& o, RunReport& report) {
  SimplicialComplex c;
  if (!o.sizes.empty()) {
    const ProductBuilding p(int_list(o.sizes));
    report.note("product", o.sizes);
    if (o.mode == "antipodal") c = antipodal_subcomplex(p, o.base);
    else if (o.mode == "join") c = join_complex(p);
    else if (o.mode == "realize") c = realize(FiniteBuilding::from_product(p, o.base));
    else throw CLI::ValidationError("--mode must be realize, antipodal or join");
  } else {
    if (o.file.empty()) throw CLI::ValidationError("give a .bldg or complex file, or --sizes");
    const auto in = load(o.file);
    report.input(in.path, hex64(fnv1a(in.text)));
    if (in.text.rfind("system ", 0) == 0) {
      const auto ball = parse_bldg(in.text);
      if (o.mode == "realize") {
        c = realize(ball);
      } else {
        const GenSet all = ball.system().all();
        if (!ball.system().is_spherical(all)) throw PreconditionError("antipodal and join modes need a finite W");
        const FiniteBuilding whole = residue(ball, ball.base(), all);
        const auto d = decompose_as_product(whole);
        report.note("product", [&] {
          std::string s;
          for (int v : d.product.sizes()) s += (s.empty() ? "" : ",") + std::to_string(v);
          return s;
        }());
        if (o.mode == "antipodal") c = antipodal_subcomplex(d.product, d.iso[static_cast<std::size_t>(whole.base)]);
        else if (o.mode == "join") c = join_complex(d.product);
        else throw CLI::ValidationError("--mode must be realize, antipodal or join");
      }
    } else {
      std::istringstream is(in.text);
      c = read_complex(is);
    }
  }
  report.note("mode", o.mode);
  std::string counts;
  for (auto n : c.face_counts()) counts += (counts.empty() ? "" : " ") + std::to_string(n);
  report.note("faces", counts.empty() ? "none" : counts);
  const auto h = reduced_homology(c);
  // Reduced Betti numbers alternate to chi - 1.
  std::int64_t alternating = 0;
  for (const auto& g : h) {
    alternating += (g.dimension % 2 == 0 ? 1 : -1) * g.rank;
    report.raw(homology_line(g));
  }
  report.check("euler", alternating == c.euler_characteristic() - 1, "Betti numbers disagree with the face counts");
  if (!o.export_path.empty()) {
    std::ostringstream os;
    write_complex(os, c);
    write_file(o.export_path, os.str());
    report.note("output", o.export_path + ' ' + hex64(fnv1a(os.str())));
  }
  return 0;
}

int cmd_render(const Options& o, RunReport& report) {
  CoxeterSystem sys = CoxeterSystem::polygon(o.p);
  if (!o.racs.empty()) {
    const auto in = load(o.racs);
    sys = parse_racs(in.text);
    report.input(in.path, hex64(fnv1a(in.text)));
  }
  const std::string svg = render_apartment_svg(sys, RenderOptions{o.depth, o.pixels});
  write_file(o.out, svg);
  report.note("chambers drawn", std::to_string(enumerate_ball(sys, o.depth).size()));
  report.note("output", o.out + ' ' + hex64(fnv1a(svg)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rab: right-angled buildings"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--timing", o.timing, "Append wall-clock timing to the report");

  auto* ball = app.add_subcommand("ball", "List the ball of radius k in W");
  ball->add_option("racs", o.racs, "Coxeter system (.racs)")->required();
  ball->add_option("--radius,-k", o.radius)->check(CLI::NonNegativeNumber);

  auto* build = app.add_subcommand("build", "Build a ball of the regular building");
  build->add_option("racs", o.racs)->required();
  build->add_option("--q", o.q, "Thickness: one value or one per generator, comma-separated");
  build->add_option("--radius,-k", o.radius)->check(CLI::NonNegativeNumber);
  build->add_option("--method", o.method)->check(CLI::IsMember({"glue", "cover"}));
  build->add_option("--out,-o", o.out)->required();

  auto* verify = app.add_subcommand("verify", "Check building axioms and (F1)-(F3), (B1)");
  verify->add_option("bldg", o.bldg)->required();
  verify->add_option("--checks", o.checks);

  auto* half = app.add_subcommand("halfspace", "Half-space queries in W");
  half->add_option("racs", o.racs)->required();
  half->add_option("--w", o.w, "Element (repeatable; hull uses all)");
  half->add_option("--s", o.s, "Generator");
  half->add_option("--op", o.op)->check(CLI::IsMember({"shortest", "crossing", "hull"}));
  half->add_option("--scan-radius", o.scan_radius);

  auto* disjoint = app.add_subcommand("disjoint", "Disjoint pi-equivariant self-maps off conv(N)");
  disjoint->add_option("bldg", o.bldg)->required();
  disjoint->add_option("--N", o.n, "Chamber ids, comma-separated");
  disjoint->add_option("--out-prefix", o.prefix);

  auto* homology = app.add_subcommand("homology", "Reduced integral homology");
  homology->add_option("file", o.file, ".bldg or complex file");
  homology->add_option("--mode", o.mode)->check(CLI::IsMember({"realize", "antipodal", "join"}));
  homology->add_option("--sizes", o.sizes, "Product building factor sizes instead of a file");
  homology->add_option("--base", o.base);
  homology->add_option("--export", o.export_path, "Write the complex");

  auto* render = app.add_subcommand("render", "SVG of one apartment of a right-angled p-gon building");
  render->add_option("racs", o.racs);
  render->add_option("--p", o.p);
  render->add_option("--depth", o.depth)->check(CLI::NonNegativeNumber);
  render->add_option("--size", o.pixels)->check(CLI::PositiveNumber);
  render->add_option("--out,-o", o.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string command = "rab";
  for (int i = 1; i < argc; ++i) command += std::string(" ") + argv[i];
  RunReport report(command);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*ball) cmd_ball(o, report);
    else if (*build) cmd_build(o, report);
    else if (*verify) cmd_verify(o, report);
    else if (*half) cmd_halfspace(o, report);
    else if (*disjoint) cmd_disjoint(o, report);
    else if (*homology) cmd_homology(o, report);
    else if (*render) cmd_render(o, report);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const TheoremViolation& e) {
    report.check("theorem", false, e.what());
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.str(o.timing ? ms : -1);
  return report.passed() ? 0 : 1;
}
