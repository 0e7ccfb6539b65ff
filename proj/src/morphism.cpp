#include "rab/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rab/error.hpp"
#include "rab/halfspace.hpp"

namespace rab {
namespace {

std::vector<int> ball_order(const BuildingBall& x) {
  std::vector<int> order(static_cast<std::size_t>(x.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x.fold_index(a) < x.fold_index(b); });
  return order;
}

void check_star_like(const BuildingBall& x, std::span<const int> order) {
  if (order.size() != static_cast<std::size_t>(x.size())) throw PreconditionError("order must list every chamber once");
  std::vector<int> pos(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int c = order[i];
    if (c < 0 || c >= x.size() || pos[static_cast<std::size_t>(c)] >= 0)
      throw PreconditionError("order must list every chamber once");
    pos[static_cast<std::size_t>(c)] = static_cast<int>(i);
  }
  for (int c : order)
    for (Gen t : members(x.descent(c)))
      if (pos[static_cast<std::size_t>(x.lower(c, t))] > pos[static_cast<std::size_t>(c)])
        throw PreconditionError("order is not star-like at chamber " + std::to_string(c));
}

std::string panel_text(const BuildingBall& x, int c, Gen s) {
  return x.system().name(s) + "-panel of chamber " + std::to_string(c);
}

// Sorted, deduplicated images of `chambers`; `injective` reports collisions.
std::vector<int> images(std::span<const int> chambers, std::span<const int> phi, bool& injective) {
  std::vector<int> out;
  for (int c : chambers) out.push_back(phi[static_cast<std::size_t>(c)]);
  std::sort(out.begin(), out.end());
  const auto before = out.size();
  out.erase(std::unique(out.begin(), out.end()), out.end());
  injective = out.size() == before;
  return out;
}

}  // namespace

std::vector<int> construct_morphism(const BuildingBall& x, const ChamberSystem& y, int target_base,
                                    const Chooser& chooser, std::span<const int> order) {
  if (y.rank() != x.system().rank()) throw PreconditionError("source and target have different rank");
  if (target_base < 0 || target_base >= y.size()) throw PreconditionError("target base out of range");
  std::vector<int> own;
  if (order.empty()) {
    own = ball_order(x);
    order = own;
  } else {
    check_star_like(x, order);
  }

  std::vector<int> phi(static_cast<std::size_t>(x.size()), -1);
  auto at = [&](int c) -> int& { return phi[static_cast<std::size_t>(c)]; };
  at(x.base()) = target_base;
  for (int c : order) {
    if (c == x.base()) continue;
    const GenSet in = x.descent(c);
    if (popcount(in) == 1) {
      const Gen s = std::countr_zero(in);
      const int c0 = x.lower(c, s);
      std::vector<int> used;
      for (int m : x.chambers().panel(s, c0))
        if (at(m) >= 0) used.push_back(at(m));
      const auto candidates = y.panel(s, at(c0));
      const int pick = chooser(PanelChoice{c, s, c0, candidates, used});
      if (std::find(candidates.begin(), candidates.end(), pick) == candidates.end())
        throw PreconditionError("chooser returned " + std::to_string(pick) + " outside the " +
                                panel_text(x, c0, s) + "'s image panel");
      at(c) = pick;
      continue;
    }
    const auto gens = members(in);
    const int r = y.square(gens[0], at(x.lower(c, gens[0])), gens[1], at(x.lower(c, gens[1])));
    if (r < 0) throw PreconditionError("target has no square completion for chamber " + std::to_string(c));
    for (Gen t : gens)
      if (!y.adjacent(t, r, at(x.lower(c, t))))
        throw TheoremViolation("forced image of chamber " + std::to_string(c) + " is not well defined");
    at(c) = r;
  }
  return phi;
}

Chooser table_chooser(std::map<std::pair<int, Gen>, int> table) {
  return [table = std::move(table)](const PanelChoice& choice) {
    const auto it = table.find({choice.chamber, choice.generator});
    if (it == table.end())
      throw PreconditionError("no recorded choice for chamber " + std::to_string(choice.chamber));
    return it->second;
  };
}

std::map<std::pair<int, Gen>, int> recorded_choices(const BuildingBall& x, std::span<const int> phi) {
  std::map<std::pair<int, Gen>, int> out;
  for (int c = 0; c < x.size(); ++c) {
    const GenSet in = x.descent(c);
    if (popcount(in) == 1) out[{c, std::countr_zero(in)}] = phi[static_cast<std::size_t>(c)];
  }
  return out;
}

Certificate certify(const BuildingBall& x, const ChamberSystem& y, std::span<const int> phi) {
  if (phi.size() != static_cast<std::size_t>(x.size())) throw PreconditionError("map has the wrong size");
  std::vector<int> w;
  if (!is_morphism(x.chambers(), y, phi, &w)) throw PreconditionError("map is not a morphism");

  Certificate root;
  for (auto [c, s] : root_set(x)) {
    bool injective = true;
    const auto img = images(x.chambers().panel(s, c), phi, injective);
    const auto target = y.panel(s, phi[static_cast<std::size_t>(c)]);
    const bool onto = std::equal(img.begin(), img.end(), target.begin(), target.end());
    if (!injective && root.mono) {
      root.mono = false;
      root.mono_witness = panel_text(x, c, s) + " is not mapped injectively";
    }
    if (!onto && root.epi) {
      root.epi = false;
      root.epi_witness = panel_text(x, c, s) + " misses part of its image panel";
    }
    if ((!injective || !onto) && root.covering) {
      root.covering = false;
      root.covering_witness = panel_text(x, c, s) + " is not mapped bijectively";
    }
  }

  Certificate direct;
  const auto spherical = x.system().spherical_subsets();
  for (int c = 0; c < x.size(); ++c)
    for (GenSet t : spherical) {
      if (t == 0 || (x.descent(c) & t) != 0 || !x.residue_complete(c, t)) continue;
      const auto members_x = x.chambers().residue(c, t);
      bool injective = true;
      const auto img = images(members_x, phi, injective);
      const bool onto = img == y.residue(phi[static_cast<std::size_t>(c)], t);
      direct.mono = direct.mono && injective;
      direct.epi = direct.epi && onto;
      direct.covering = direct.covering && injective && onto;
    }

  if (root.mono != direct.mono || root.epi != direct.epi || root.covering != direct.covering)
    throw TheoremViolation("root-set certificate disagrees with the residue-by-residue check");
  return root;
}

DisjointPair disjoint_pair(const BuildingBall& x, const std::vector<int>& n) {
  const auto& sys = x.system();
  const auto& cs = x.chambers();
  for (int c = 0; c < x.size(); ++c)
    for (Gen s = 0; s < sys.rank(); ++s)
      if (x.panel_complete(c, s) && cs.panel(s, c).size() < 3)
        throw PreconditionError("thickness violation: " + panel_text(x, c, s) + " has " +
                                std::to_string(cs.panel(s, c).size()) + " chambers");

  std::vector<Element> seeds{Element{}};
  for (int c : n) {
    if (c < 0 || c >= x.size()) throw PreconditionError("chamber " + std::to_string(c) + " is not in the ball");
    seeds.push_back(x.fold(c));
  }
  const auto hull = convex_hull(sys, seeds);
  std::vector<char> hull_index(static_cast<std::size_t>(x.words().size()), 0);
  for (const Element& e : hull) {
    if (e.length() > x.radius() - 1)
      throw PreconditionError("conv(pi(N) + {1}) contains " + format_element(sys, e) + ", beyond radius " +
                              std::to_string(x.radius() - 1));
    hull_index[static_cast<std::size_t>(x.words().find(e))] = 1;
  }

  DisjointPair out;
  out.in_core.assign(static_cast<std::size_t>(x.size()), 0);
  for (int c = 0; c < x.size(); ++c)
    if (hull_index[static_cast<std::size_t>(x.fold_index(c))]) {
      out.in_core[static_cast<std::size_t>(c)] = 1;
      out.core.push_back(c);
    }
  out.phi.assign(static_cast<std::size_t>(x.size()), -1);
  out.psi.assign(static_cast<std::size_t>(x.size()), -1);

  for (int c : ball_order(x)) {
    const auto i = static_cast<std::size_t>(c);
    if (out.in_core[i]) {
      out.phi[i] = out.psi[i] = c;
      continue;
    }
    const GenSet in = x.descent(c);
    if (popcount(in) == 1) {
      const Gen s = std::countr_zero(in);
      const int c0 = x.lower(c, s);
      for (int pick = 0; pick < 2; ++pick) {
        auto& map = pick == 0 ? out.phi : out.psi;
        const int anchor = map[static_cast<std::size_t>(c0)];
        std::vector<int> rest;
        for (int m : cs.panel(s, anchor))
          if (m != anchor) rest.push_back(m);
        map[i] = rest[static_cast<std::size_t>(pick)];
      }
      continue;
    }
    const auto gens = members(in);
    for (auto* map : {&out.phi, &out.psi}) {
      const int r = cs.square(gens[0], (*map)[static_cast<std::size_t>(x.lower(c, gens[0]))], gens[1],
                              (*map)[static_cast<std::size_t>(x.lower(c, gens[1]))]);
      if (r < 0) throw TheoremViolation("no square completion for chamber " + std::to_string(c));
      (*map)[i] = r;
    }
  }
  return out;
}

DisjointReport verify_disjoint_pair(const BuildingBall& x, const DisjointPair& pair) {
  DisjointReport r;
  auto note = [&](bool& flag, const std::string& why) {
    if (flag && r.witness.empty()) r.witness = why;
    flag = false;
  };
  for (auto* map : {&pair.phi, &pair.psi}) {
    const char* name = map == &pair.phi ? "phi" : "psi";
    std::vector<int> w;
    if (!is_morphism(x.chambers(), x.chambers(), *map, &w))
      note(r.equivariant, std::string(name) + " is not a morphism at chamber " + std::to_string(w[0]));
    for (int c = 0; c < x.size(); ++c) {
      const int img = (*map)[static_cast<std::size_t>(c)];
      if (x.fold_index(img) != x.fold_index(c))
        note(r.equivariant, std::string(name) + " moves the fold of chamber " + std::to_string(c));
      if (pair.in_core[static_cast<std::size_t>(c)] && img != c)
        note(r.identity_on_core, std::string(name) + " moves core chamber " + std::to_string(c));
    }
  }
  std::vector<char> hit(static_cast<std::size_t>(x.size()), 0);
  for (int c = 0; c < x.size(); ++c)
    if (!pair.in_core[static_cast<std::size_t>(c)]) hit[static_cast<std::size_t>(pair.phi[static_cast<std::size_t>(c)])] = 1;
  for (int c = 0; c < x.size(); ++c)
    if (!pair.in_core[static_cast<std::size_t>(c)] && hit[static_cast<std::size_t>(pair.psi[static_cast<std::size_t>(c)])])
      note(r.disjoint, "psi(" + std::to_string(c) + ") = " + std::to_string(pair.psi[static_cast<std::size_t>(c)]) +
                           " is also in phi(X \\ M)");
  return r;
}

RealizationReport realization_disjointness_check(const BuildingBall& x, std::span<const char> in_core,
                                                 std::span<const int> phi, std::span<const int> psi) {
  RealizationReport r;
  for (GenSet t : x.system().spherical_subsets()) {
    std::vector<int> roots;
    for (int c = 0; c < x.size(); ++c) {
      if ((x.descent(c) & t) != 0 || !x.residue_complete(c, t)) continue;
      const auto res = x.chambers().residue(c, t);
      if (std::none_of(res.begin(), res.end(), [&](int m) { return in_core[static_cast<std::size_t>(m)]; }))
        roots.push_back(c);
    }
    r.residues_checked += roots.size();
    std::map<int, int> under_phi;
    for (int c : roots) under_phi.emplace(x.residue_minimum(phi[static_cast<std::size_t>(c)], t), c);
    for (int c : roots) {
      const auto it = under_phi.find(x.residue_minimum(psi[static_cast<std::size_t>(c)], t));
      if (it != under_phi.end()) {
        r.ok = false;
        std::string type;
        for (Gen g : members(t)) type += (type.empty() ? "" : ",") + x.system().name(g);
        r.witness = "phi(Res(" + std::to_string(it->second) + ", {" + type + "})) = psi(Res(" + std::to_string(c) +
                    ", {" + type + "}))";
        return r;
      }
    }
  }
  return r;
}

}  // namespace rab
