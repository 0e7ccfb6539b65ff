// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rab/building.hpp"
#include "rab/complexes.hpp"
#include "rab/error.hpp"
#include "rab/finite_building.hpp"
#include "rab/halfspace.hpp"
#include "rab/morphism.hpp"
#include "rab/verify.hpp"

using namespace rab;

namespace {

// Wall-clock limits in seconds; 0 means none.
constexpr double kLimitWordEngine = 10.0;
constexpr double kLimitConstruction = 5.0;
constexpr double kLimitHomology = 30.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure only.
struct Failures {
  Outcome out;
  void fail(const std::string& what) {
    if (out.pass) out.detail = what;
    out.pass = false;
  }
};

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Criterion 1: word engine against the Cayley-graph BFS oracle.
Outcome word_engine() {
  Failures f;
  const std::vector<std::pair<std::string, CoxeterSystem>> systems{
      {"A1", CoxeterSystem::free_product(2)}, {"D2", CoxeterSystem::commuting(2)}, {"P5", CoxeterSystem::polygon(5)}};
  std::size_t checked = 0;
  for (const auto& [name, sys] : systems) {
    const oracle::Tits rep(sys);
    const oracle::CayleyBall bfs(rep, 6);
    const auto ball = enumerate_ball(sys, 6);
    std::vector<int> sphere(7, 0);
    std::set<oracle::Mat> seen;
    for (const Element& e : ball) {
      const auto m = rep.of(e);
      const auto it = bfs.distance.find(m);
      if (it == bfs.distance.end()) {
        f.fail(name + ": " + format_element(sys, e) + " not found by BFS");
        continue;
      }
      if (it->second != e.length()) f.fail(name + ": length mismatch at " + format_element(sys, e));
      if (!seen.insert(m).second) f.fail(name + ": two normal forms for one element at " + format_element(sys, e));
      ++sphere[static_cast<std::size_t>(e.length())];
      ++checked;
    }
    // Every BFS geodesic word normalizes to an element of the right length.
    for (const auto& [m, word] : bfs.word) {
      const Element e = normal_form(sys, word);
      if (e.length() != bfs.distance.at(m) || rep.of(e) != m) f.fail(name + ": geodesic word normalizes wrongly");
    }
    for (int k = 0; k <= 6; ++k)
      if (sphere[static_cast<std::size_t>(k)] != bfs.sphere[static_cast<std::size_t>(k)])
        f.fail(name + ": sphere " + std::to_string(k) + " has " + std::to_string(sphere[static_cast<std::size_t>(k)]) +
               " elements, BFS " + std::to_string(bfs.sphere[static_cast<std::size_t>(k)]));
    if (name == "P5" && !(bfs.sphere[0] == 1 && bfs.sphere[1] == 5 && bfs.sphere[2] == 15)) f.fail("P5 spheres not 1,5,15");
  }
  if (f.out.pass) f.out.detail = std::to_string(checked) + " elements";
  return f.out;
}

// Criterion 2: shortest elements of half-spaces in P5.
Outcome half_spaces() {
  Failures f;
  const auto sys = CoxeterSystem::polygon(5);
  const oracle::Tits rep(sys);
  const oracle::CayleyBall bfs(rep, 6);
  std::vector<std::pair<oracle::Mat, int>> ball6;  // (matrix, length)
  std::map<oracle::Mat, oracle::Mat> inverse;
  for (const auto& [m, word] : bfs.word) {
    ball6.emplace_back(m, bfs.distance.at(m));
    inverse[m] = rep.of_word(std::vector<int>(word.rbegin(), word.rend()));
  }
  std::size_t half_space_count = 0, gallery_checks = 0, containing_one = 0;
  for (const Element& w : enumerate_ball(sys, 4))
    for (Gen s = 0; s < 5; ++s) {
      ++half_space_count;
      const HalfSpace hs{w, s};
      const std::string tag = "H(" + format_element(sys, w) + "," + sys.name(s) + ")";
      const auto wm = rep.of(w);
      auto in_h = [&](const oracle::Mat& h) { return rep.right_descent(rep.mul(inverse.at(h), wm), s); };
      // Oracle minimum over the ball and over the crossing set.
      int best = 99, best_crossing = 99;
      std::vector<oracle::Mat> shortest, shortest_crossing;
      for (const auto& [h, len] : ball6) {
        if (!in_h(h)) continue;
        if (len < best) best = len, shortest.clear();
        if (len == best) shortest.push_back(h);
        const auto hs_m = rep.mul(h, rep.gen(s));
        if (bfs.distance.count(hs_m) && !in_h(hs_m)) {
          if (len < best_crossing) best_crossing = len, shortest_crossing.clear();
          if (len == best_crossing) shortest_crossing.push_back(h);
        }
      }
      const Element m = shortest_element(sys, hs);
      const auto mm = rep.of(m);
      if (shortest.size() != 1) f.fail(tag + ": " + std::to_string(shortest.size()) + " shortest elements");
      else if (shortest[0] != mm) f.fail(tag + ": shortest element differs from oracle");
      // With 1 in H the shortest element is 1; otherwise it is the least
      // element of the crossing coset ws W_{s'}.
      if (in_h(rep.identity())) {
        ++containing_one;
        if (!m.is_identity()) f.fail(tag + ": contains 1 but the shortest element is " + format_element(sys, m));
      } else {
        if (shortest_crossing.size() != 1 || shortest_crossing[0] != mm)
          f.fail(tag + ": shortest element is not the least element of the crossing coset");
        const Element ws = multiply(sys, w, s);
        if (!(coset_minimum(sys, ws, sys.commuting_with(s)) == m)) f.fail(tag + ": coset minimum of ws W_{s'} differs");
      }
      // A minimal gallery from each member to 1 passes through m.
      const int lm = m.length();
      for (const auto& [h, len] : ball6) {
        if (!in_h(h)) continue;
        ++gallery_checks;
        if (rep.length(rep.mul(inverse.at(h), mm)) + lm != len) {
          f.fail(tag + ": no minimal gallery to 1 through the shortest element");
          break;
        }
      }
    }
  if (f.out.pass)
    f.out.detail = std::to_string(half_space_count) + " half-spaces (" + std::to_string(containing_one) +
                   " containing 1), " + std::to_string(gallery_checks) + " gallery checks";
  return f.out;
}

// Criterion 3: the P5 ball of radius 2.
Outcome construction() {
  Failures f;
  const auto sys = CoxeterSystem::polygon(5);
  const auto b = build_regular(sys, {2, 2, 2, 2, 2}, 2);
  if (b.size() != 71) f.fail("expected 71 chambers, got " + std::to_string(b.size()));
  std::map<int, int> fibre;
  for (int x = 0; x < b.size(); ++x) ++fibre[b.fold_index(x)];
  for (int i = 0; i < b.words().size(); ++i) {
    int expect = 1;
    for (std::size_t j = 0; j < b.words()[i].word.size(); ++j) expect *= 2;
    if (fibre[i] != expect) f.fail("fibre over " + format_element(sys, b.words()[i]) + " has " + std::to_string(fibre[i]));
  }
  for (const auto& r : run_checks(b, {"f1", "f2", "f3"}))
    if (!r.passed) f.fail(r.name + ": " + r.witness);
  int complete = 0;
  for (Gen s = 0; s < 5; ++s)
    for (const auto& p : b.chambers().sorted_panels(s)) {
      if (!b.panel_complete(p.front(), s)) continue;
      ++complete;
      if (p.size() != 3) f.fail("complete " + sys.name(s) + "-panel of size " + std::to_string(p.size()));
    }
  if (f.out.pass) f.out.detail = "71 chambers, " + std::to_string(complete) + " complete panels of size 3";
  return f.out;
}

bool valid_isomorphism(const BuildingBall& a, const BuildingBall& b, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != a.size() || a.size() != b.size()) return false;
  std::vector<int> inv(map.size(), -1);
  for (int x = 0; x < a.size(); ++x) {
    const int y = map[static_cast<std::size_t>(x)];
    if (y < 0 || y >= b.size() || inv[static_cast<std::size_t>(y)] >= 0 || !(a.fold(x) == b.fold(y))) return false;
    inv[static_cast<std::size_t>(y)] = x;
  }
  return map[0] == 0 && is_morphism(a.chambers(), b.chambers(), map) && is_morphism(b.chambers(), a.chambers(), inv);
}

// Criterion 4: the gluing and covering constructions agree.
Outcome uniqueness() {
  Failures f;
  struct Case {
    std::string name;
    CoxeterSystem sys;
    std::vector<int> q;
    int k;
  };
  for (const auto& c : {Case{"P5", CoxeterSystem::polygon(5), {2, 2, 2, 2, 2}, 2},
                        Case{"A1", CoxeterSystem::free_product(2), {2, 2}, 3}}) {
    const auto glued = build_regular(c.sys, c.q, c.k);
    std::vector<int> sizes;
    for (int q : c.q) sizes.push_back(q + 1);
    const auto cover = build_by_covering(c.sys, sizes, c.k).ball;
    const auto r = find_isomorphism(glued, cover);
    if (!r.map) f.fail(c.name + ": " + r.witness);
    else if (!valid_isomorphism(glued, cover, *r.map)) f.fail(c.name + ": returned map is not an isomorphism");
  }
  if (f.out.pass) f.out.detail = "P5 q=2 k=2 and A1 q=(2,2) k=3";
  return f.out;
}

// Criterion 5: morphism extension on small products, by full enumeration.
Outcome extension() {
  Failures f;
  const std::vector<std::vector<int>> shapes{{2, 2}, {3, 2}, {3, 3}};
  std::size_t partial = 0, total = 0;
  for (const auto& xs : shapes)
    for (const auto& ys : shapes) {
      const ProductBuilding px(xs), y(ys);
      const auto x = FiniteBuilding::from_product(px);
      const int n = px.size();
      const std::string tag = join_ints(xs) + "->" + join_ints(ys);
      // Star-like sets: closed under zeroing coordinates.
      std::vector<std::vector<int>> star_like;
      for (int mask = 0; mask < (1 << n); ++mask) {
        bool ok = true;
        for (int c = 0; c < n && ok; ++c) {
          if (!(mask >> c & 1)) continue;
          for (Gen s = 0; s < 2 && ok; ++s)
            if (!(mask >> px.with_coord(c, s, 0) & 1)) ok = false;
        }
        if (!ok) continue;
        std::vector<int> e;
        for (int c = 0; c < n; ++c)
          if (mask >> c & 1) e.push_back(c);
        star_like.push_back(std::move(e));
      }
      const std::vector<int> base_panels = [&] {
        std::vector<int> v;
        for (int c = 0; c < n; ++c)
          if (px.coord(c, 0) == 0 || px.coord(c, 1) == 0) v.push_back(c);
        return v;
      }();
      std::map<std::vector<int>, std::vector<int>> by_base_panels;
      const Chooser least = least_unused;
      const Chooser greatest = [](const PanelChoice& c) { return c.candidates.back(); };

      for (const auto& e : star_like) {
        std::vector<int> psi(static_cast<std::size_t>(n), -1);
        std::function<void(std::size_t)> assign = [&](std::size_t i) {
          if (i == e.size()) {
            ++partial;
            for (const Chooser* ch : {&least, &greatest}) {
              std::vector<int> phi;
              try {
                phi = extend_morphism(x, psi, y, *ch);
              } catch (const Error& err) {
                f.fail(tag + ": extension failed: " + err.what());
                return;
              }
              if (!is_morphism(x.chambers, y.chambers(), phi)) f.fail(tag + ": extension is not a morphism");
              for (int c : e)
                if (phi[static_cast<std::size_t>(c)] != psi[static_cast<std::size_t>(c)]) f.fail(tag + ": extension moves E");
            }
            if (static_cast<int>(e.size()) != n) return;
            ++total;
            // Full morphism: group by the restriction to the base panels.
            std::vector<int> key;
            for (int c : base_panels) key.push_back(psi[static_cast<std::size_t>(c)]);
            if (!by_base_panels.emplace(key, psi).second) f.fail(tag + ": two morphisms agree on the base panels");
            bool panel_injective = true, panel_surjective = true;
            for (Gen s = 0; s < 2; ++s) {
              std::set<int> img;
              for (int c : x.chambers.panel(s, 0)) img.insert(psi[static_cast<std::size_t>(c)]);
              const auto target = y.chambers().panel(s, psi[0]);
              if (img.size() != x.chambers.panel(s, 0).size()) panel_injective = false;
              if (img.size() != target.size()) panel_surjective = false;
            }
            const std::set<int> image(psi.begin(), psi.end());
            if (panel_injective && static_cast<int>(image.size()) != n) f.fail(tag + ": panel-injective but not mono");
            if (panel_surjective && static_cast<int>(image.size()) != y.size()) f.fail(tag + ": panel-surjective but not epi");
            return;
          }
          const int c = e[i];
          for (int t = 0; t < y.size(); ++t) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
              const int d = e[j];
              for (Gen s = 0; s < 2 && ok; ++s)
                if (x.chambers.adjacent(s, c, d) && !y.chambers().adjacent(s, t, psi[static_cast<std::size_t>(d)])) ok = false;
            }
            if (!ok) continue;
            psi[static_cast<std::size_t>(c)] = t;
            assign(i + 1);
            psi[static_cast<std::size_t>(c)] = -1;
          }
        };
        assign(0);
      }
      // Extension from the base panels reproduces each full morphism.
      for (const auto& [key, phi] : by_base_panels) {
        std::vector<int> psi(static_cast<std::size_t>(n), -1);
        for (int c : base_panels) psi[static_cast<std::size_t>(c)] = phi[static_cast<std::size_t>(c)];
        if (extend_morphism(x, psi, y) != phi) f.fail(tag + ": extension from base panels differs");
      }
    }
  if (f.out.pass)
    f.out.detail = std::to_string(partial) + " partial morphisms, " + std::to_string(total) + " total morphisms";
  return f.out;
}

// Criterion 6: unique shortest chamber of each neighbourhood.
Outcome neighbourhoods() {
  Failures f;
  const auto sys = CoxeterSystem::polygon(5);
  const int k = 3;
  const auto b = build_regular(sys, {2, 2, 2, 2, 2}, k);
  std::set<std::pair<Element, Gen>> seen;
  std::size_t spaces = 0, seeds = 0;
  for (const Element& w : enumerate_ball(sys, 2))
    for (Gen s = 0; s < 5; ++s) {
      const HalfSpace n = normalize(sys, HalfSpace{w, s});
      if (!seen.emplace(n.w, n.s).second) continue;
      const Element m = shortest_element(sys, n);
      if (m.length() > 2) continue;
      ++spaces;
      for (int x = 0; x < b.size(); ++x) {
        if (b.length(x) > k - 2 || !contains(sys, n, b.fold(x))) continue;
        ++seeds;
        const auto nb = neighborhood_chambers(b, n, x);
        const std::string tag = "H(" + format_element(sys, n.w) + "," + sys.name(n.s) + ") seed " + std::to_string(x);
        if (nb.shortest.size() != 1) f.fail(tag + ": " + std::to_string(nb.shortest.size()) + " shortest chambers");
        else if (!(b.fold(nb.anchor) == m)) f.fail(tag + ": anchor does not fold to the shortest element");
        if (!std::binary_search(nb.chambers.begin(), nb.chambers.end(), x)) f.fail(tag + ": seed not in its neighbourhood");
      }
    }
  if (seeds == 0) f.fail("no eligible seeds");
  if (f.out.pass) f.out.detail = std::to_string(spaces) + " half-spaces, " + std::to_string(seeds) + " seeds";
  return f.out;
}

void scan_pair(const BuildingBall& b, const DisjointPair& pair, const std::string& tag, Failures& f,
               std::size_t& residues) {
  const auto lib = verify_disjoint_pair(b, pair);
  if (!lib.ok()) f.fail(tag + ": " + lib.witness);
  const auto real = realization_disjointness_check(b, pair.in_core, pair.phi, pair.psi);
  if (!real.ok) f.fail(tag + ": " + real.witness);
  // Independent chamber scan.
  std::set<int> off_phi, off_psi;
  for (int x = 0; x < b.size(); ++x) {
    const int p = pair.phi[static_cast<std::size_t>(x)], q = pair.psi[static_cast<std::size_t>(x)];
    if (!(b.fold(p) == b.fold(x)) || !(b.fold(q) == b.fold(x))) f.fail(tag + ": not equivariant at " + std::to_string(x));
    if (pair.in_core[static_cast<std::size_t>(x)]) {
      if (p != x || q != x) f.fail(tag + ": not the identity on M at " + std::to_string(x));
    } else {
      if (p == q) f.fail(tag + ": phi and psi agree off M at " + std::to_string(x));
      off_phi.insert(p);
      off_psi.insert(q);
    }
  }
  for (int y : off_phi)
    if (off_psi.count(y)) f.fail(tag + ": images off M meet at " + std::to_string(y));
  if (!is_morphism(b.chambers(), b.chambers(), pair.phi) || !is_morphism(b.chambers(), b.chambers(), pair.psi))
    f.fail(tag + ": not a morphism");
  // Independent residue scan: image residues of residues avoiding M.
  std::set<std::vector<int>> phi_images;
  std::vector<std::vector<int>> psi_images;
  for (GenSet t : b.system().spherical_subsets()) {
    std::vector<char> done(static_cast<std::size_t>(b.size()), 0);
    for (int x = 0; x < b.size(); ++x) {
      if (done[static_cast<std::size_t>(x)] || !b.residue_complete(x, t)) continue;
      const auto r = b.chambers().residue(x, t);
      bool avoids = true;
      for (int y : r) {
        done[static_cast<std::size_t>(y)] = 1;
        if (pair.in_core[static_cast<std::size_t>(y)]) avoids = false;
      }
      if (!avoids) continue;
      ++residues;
      std::vector<int> a, c;
      for (int y : r) a.push_back(pair.phi[static_cast<std::size_t>(y)]), c.push_back(pair.psi[static_cast<std::size_t>(y)]);
      std::sort(a.begin(), a.end());
      std::sort(c.begin(), c.end());
      phi_images.insert(a);
      psi_images.push_back(c);
    }
  }
  for (const auto& c : psi_images)
    if (phi_images.count(c)) f.fail(tag + ": a residue image is shared by phi and psi");
}

// Criterion 7: disjoint pi-equivariant pairs.
Outcome disjoint_pairs() {
  Failures f;
  const auto b = build_regular(CoxeterSystem::polygon(5), {2, 2, 2, 2, 2}, 3);
  std::size_t residues = 0;
  const auto base = disjoint_pair(b, {0});
  if (base.core != std::vector<int>{0}) f.fail("N={B}: M is not {B}");
  scan_pair(b, base, "N={B}", f, residues);

  std::mt19937 rng(20261017);
  std::vector<int> pool;
  for (int x = 0; x < b.size(); ++x)
    if (b.length(x) <= 2) pool.push_back(x);
  std::vector<int> n;
  DisjointPair pair;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> draw;
    std::sample(pool.begin(), pool.end(), std::back_inserter(draw), 3, rng);
    try {
      pair = disjoint_pair(b, draw);
      n = draw;
      break;
    } catch (const PreconditionError&) {
    }
  }
  if (n.empty()) f.fail("no admissible random N found");
  else scan_pair(b, pair, "N={" + join_ints(n) + "}", f, residues);
  if (f.out.pass)
    f.out.detail = "N={B} and N={" + join_ints(n) + "} (|M|=" + std::to_string(pair.core.size()) + "), " +
                   std::to_string(residues) + " residues";
  return f.out;
}

// Criterion 8: homology of antipodal complexes and of the full join.
Outcome homology() {
  Failures f;
  std::size_t cases = 0;
  auto check = [&](const SimplicialComplex& c, int n, long rank, const std::string& tag) {
    for (const auto& g : reduced_homology(c)) {
      if (!g.torsion.empty()) f.fail(tag + ": torsion in degree " + std::to_string(g.dimension));
      const long expect = g.dimension == n - 1 ? rank : 0;
      if (g.rank != expect)
        f.fail(tag + ": H~" + std::to_string(g.dimension) + " rank " + std::to_string(g.rank) + ", expected " +
               std::to_string(expect));
    }
  };
  for (int n = 2; n <= 3; ++n)
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> sizes;
      for (int i = 0; i < n; ++i) sizes.push_back(mask >> i & 1 ? 4 : 3);
      const ProductBuilding p(sizes);
      long antipodal = 1, full = 1;
      for (int s : sizes) antipodal *= s - 2, full *= s - 1;
      check(antipodal_subcomplex(p, 0), n, antipodal, "antipodal " + join_ints(sizes));
      check(join_complex(p), n, full, "join " + join_ints(sizes));
      ++cases;
    }
  if (f.out.pass)
    f.out.detail = std::to_string(cases) +
                   " products; antipodal rank prod(size-2), full join rank prod(size-1), lower degrees zero";
  return f.out;
}

// Criterion 9: construction does not depend on iteration order.
Outcome order_independence() {
  Failures f;
  const auto b = build_regular(CoxeterSystem::polygon(5), {2, 2, 2, 2, 2}, 3);
  const ProductBuilding y({3, 3, 3, 3, 3});
  std::mt19937 rng(99);
  const Chooser random_pick = [&](const PanelChoice& c) {
    return c.candidates[std::uniform_int_distribution<std::size_t>(0, c.candidates.size() - 1)(rng)];
  };
  for (const ChamberSystem* target : {&y.chambers(), &b.chambers()}) {
    const auto phi = construct_morphism(b, *target, 0, random_pick);
    const auto table = recorded_choices(b, phi);
    std::vector<int> reversed(static_cast<std::size_t>(b.size()));
    std::iota(reversed.begin(), reversed.end(), 0);
    std::stable_sort(reversed.begin(), reversed.end(), [&](int u, int v) {
      return b.length(u) != b.length(v) ? b.length(u) < b.length(v) : u > v;
    });
    std::vector<int> shuffled = reversed;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::stable_sort(shuffled.begin(), shuffled.end(), [&](int u, int v) { return b.length(u) < b.length(v); });
    for (const auto& order : {reversed, shuffled}) {
      const auto again = construct_morphism(b, *target, 0, table_chooser(table), order);
      if (again != phi) {
        for (int x = 0; x < b.size(); ++x)
          if (again[static_cast<std::size_t>(x)] != phi[static_cast<std::size_t>(x)]) {
            f.fail("maps differ at chamber " + std::to_string(x));
            break;
          }
      }
    }
  }
  if (f.out.pass) f.out.detail = "391 chambers, 2 targets, 3 orders each";
  return f.out;
}

// Criterion 10: CLI golden files, each run twice.
Outcome golden() {
  Failures f;
#ifdef RAB_CLI_PATH
  namespace fs = std::filesystem;
  std::vector<std::string> cases;
  std::set<std::string> commands;
  for (const auto& entry : fs::directory_iterator(RAB_GOLDEN_DIR)) {
    if (entry.path().extension() != ".args") continue;
    const std::string name = entry.path().stem().string();
    if (!fs::exists(fs::path(RAB_GOLDEN_DIR) / (name + ".golden"))) f.fail(name + ": golden file missing");
    cases.push_back(name);
    std::ifstream in(entry.path());
    std::string cmd;
    while (in >> cmd) {
      commands.insert(cmd);
      std::string rest;
      std::getline(in, rest);
    }
  }
  std::sort(cases.begin(), cases.end());
  for (const char* sub : {"ball", "build", "verify", "halfspace", "disjoint", "homology", "render"})
    if (!commands.count(sub)) f.fail(std::string("no golden test for '") + sub + "'");
  for (const auto& c : cases) {
    const std::string cmd = std::string("\"") + RAB_CMAKE_COMMAND + "\" -DRAB=\"" + RAB_CLI_PATH + "\" -DCASE=" + c +
                            " -DGOLDEN_DIR=\"" + RAB_GOLDEN_DIR + "\" -DDATA_DIR=\"" + RAB_DATA_DIR +
                            "\" -DWORK_DIR=\"" + RAB_WORK_DIR + "/" + c + "\" -P \"" + RAB_GOLDEN_DIR +
                            "/run_golden.cmake\" > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) f.fail(c + ": output differs from its golden file");
  }
  if (f.out.pass) f.out.detail = std::to_string(cases.size()) + " cases, " + std::to_string(commands.size()) + " subcommands";
#else
  f.fail("command-line tool not built");
#endif
  return f.out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "word engine vs Cayley BFS (A1, D2, P5, length <= 6)", kLimitWordEngine, word_engine},
      {2, "half-space shortest elements (P5, l(w) <= 4)", 0, half_spaces},
      {3, "building construction P5 q=2 k=2", kLimitConstruction, construction},
      {4, "gluing and covering balls are isomorphic", 0, uniqueness},
      {5, "morphism extension on 2x2, 3x2, 3x3", 0, extension},
      {6, "unique shortest neighbourhood chamber (P5 q=2 k=3)", 0, neighbourhoods},
      {7, "disjoint equivariant pairs (P5 q=2 k=3)", 0, disjoint_pairs},
      {8, "antipodal and join homology, sizes in {3,4}, n = 2, 3", kLimitHomology, homology},
      {9, "morphism independent of iteration order", 0, order_independence},
      {10, "CLI golden files", 0, golden},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && c.limit > 0 && secs > c.limit) {
      out.pass = false;
      out.detail += "; over the " + std::to_string(static_cast<int>(c.limit)) + " s limit";
    }
    if (!out.pass) ++failed;
    std::printf("criterion %2d %s  %s (%s; %.2f s)\n", c.number, out.pass ? "PASS" : "FAIL", c.title,
                out.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
