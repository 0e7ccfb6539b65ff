#include "rab/verify.hpp"

#include <cstdint>
#include <set>

#include "rab/error.hpp"

namespace rab {
namespace {

std::string chamber(int x) { return "chamber " + std::to_string(x); }

CheckResult fail(CheckResult r, std::string witness) {
  r.passed = false;
  r.witness = std::move(witness);
  return r;
}

}  // namespace

CheckResult check_axioms(const BuildingBall& b) {
  CheckResult r{"axioms", true, {}};
  const auto& sys = b.system();
  const auto& words = b.words();
  const auto& cs = b.chambers();
  for (Gen s = 0; s < sys.rank(); ++s)
    for (int p = 0; p < cs.panel_count(s); ++p) {
      const auto panel = cs.panel_members(s, p);
      const int f = b.fold_index(panel[0]);
      const int g = words.times(f, s);
      for (int y : panel)
        if (b.fold_index(y) != f && b.fold_index(y) != g)
          return fail(r, "fold is not a morphism: " + chamber(panel[0]) + " ~" + sys.name(s) + " " + chamber(y));
    }
  if (b.over(0).size() != 1 || b.over(0)[0] != b.base())
    return fail(r, "pi^-1(1) has " + std::to_string(b.over(0).size()) + " chambers");
  for (int x = 0; x < b.size(); ++x)
    for (Gen s = 0; s < sys.rank(); ++s)
      if (b.panel_complete(x, s) && cs.panel(s, x).size() < 2)
        return fail(r, chamber(x) + " has a complete " + sys.name(s) + "-panel with one chamber");

  std::set<std::pair<GenSet, int>> seen;
  for (int x = 0; x < b.size(); ++x) {
    const GenSet t = b.descent(x);
    if (t == 0) continue;
    const int low = b.residue_minimum(x, t);
    if (!seen.emplace(t, low).second) continue;
    try {
      const FiniteBuilding res = residue(b, x, t);
      decompose_as_product(res);
      if (fold_finite(res.chambers, res.base) != residue_folding(b, res))
        return fail(r, "residue of " + chamber(x) + " is not folded by (w w_T)^-1 pi");
    } catch (const Error& e) {
      return fail(r, "residue of " + chamber(x) + ": " + e.what());
    }
  }
  return r;
}

CheckResult check_panel_sizes(const BuildingBall& b) {
  CheckResult r{"panels", true, {}};
  if (b.q().empty()) return r;
  for (int x = 0; x < b.size(); ++x)
    for (Gen s = 0; s < b.system().rank(); ++s) {
      const auto size = b.chambers().panel(s, x).size();
      if (b.panel_complete(x, s) && size != static_cast<std::size_t>(b.q()[static_cast<std::size_t>(s)] + 1))
        return fail(r, chamber(x) + " " + b.system().name(s) + "-panel has " + std::to_string(size) + " chambers");
    }
  return r;
}

CheckResult check_fiber_sizes(const BuildingBall& b) {
  CheckResult r{"fibers", true, {}};
  if (b.q().empty()) return r;
  for (int i = 0; i < b.words().size(); ++i) {
    std::size_t expected = 1;
    for (Gen s : b.words()[i].word) expected *= static_cast<std::size_t>(b.q()[static_cast<std::size_t>(s)]);
    if (b.over(i).size() != expected)
      return fail(r, "pi^-1(" + format_element(b.system(), b.words()[i]) + ") has " +
                         std::to_string(b.over(i).size()) + " chambers, expected " + std::to_string(expected));
  }
  return r;
}

CheckResult check_f1(const BuildingBall& b) {
  CheckResult r{"f1", true, {}};
  for (int x = 0; x < b.size(); ++x)
    for (Gen t : members(b.descent(x))) {
      const int target = b.words().times(b.fold_index(x), t);
      int count = 0;
      for (int y : b.chambers().panel(t, x)) count += b.fold_index(y) == target;
      if (count != 1)
        return fail(r, chamber(x) + " has " + std::to_string(count) + " lower " + b.system().name(t) + "-neighbours");
    }
  return r;
}

CheckResult check_f2(const BuildingBall& b) {
  CheckResult r{"f2", true, {}};
  const auto& words = b.words();
  const auto& cs = b.chambers();
  std::vector<int> dist(static_cast<std::size_t>(b.size()), -1);
  std::vector<int> queue{b.base()};
  dist[static_cast<std::size_t>(b.base())] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (Gen s = 0; s < cs.rank(); ++s)
      for (int y : cs.panel(s, x))
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          queue.push_back(y);
        }
  }
  for (int x = 0; x < b.size(); ++x)
    if (dist[static_cast<std::size_t>(x)] != b.length(x))
      return fail(r, chamber(x) + " is at distance " + std::to_string(dist[static_cast<std::size_t>(x)]) +
                         " from B but folds to length " + std::to_string(b.length(x)));

  // Minimal galleries from B, counted in X and in W.
  std::vector<std::uint64_t> in_w(static_cast<std::size_t>(words.size()), 0);
  in_w[0] = 1;
  for (int i = 1; i < words.size(); ++i)
    for (Gen s : members(words.descent(i))) in_w[static_cast<std::size_t>(i)] += in_w[static_cast<std::size_t>(words.times(i, s))];
  std::vector<std::uint64_t> in_x(static_cast<std::size_t>(b.size()), 0);
  in_x[static_cast<std::size_t>(b.base())] = 1;
  for (int x : queue) {
    for (Gen s = 0; s < cs.rank(); ++s)
      for (int y : cs.panel(s, x))
        if (dist[static_cast<std::size_t>(y)] == dist[static_cast<std::size_t>(x)] - 1)
          in_x[static_cast<std::size_t>(x)] += in_x[static_cast<std::size_t>(y)];
    if (in_x[static_cast<std::size_t>(x)] != in_w[static_cast<std::size_t>(b.fold_index(x))])
      return fail(r, chamber(x) + " has " + std::to_string(in_x[static_cast<std::size_t>(x)]) +
                         " minimal galleries from B, its fold has " +
                         std::to_string(in_w[static_cast<std::size_t>(b.fold_index(x))]));
  }
  return r;
}

CheckResult check_f3(const BuildingBall& b) {
  CheckResult r{"f3", true, {}};
  const auto& sys = b.system();
  const auto spherical = sys.spherical_subsets();
  for (int y = 0; y < b.size(); ++y)
    for (GenSet t : spherical) {
      if (t == 0 || (b.descent(y) & t) != 0 || !b.residue_complete(y, t)) continue;
      const FiniteBuilding res = residue(b, y, t);
      const auto rel = residue_folding(b, res);
      for (std::size_t i = 0; i < res.labels.size(); ++i) {
        const int z = res.labels[i];
        if (z != y && b.length(z) <= b.length(y))
          return fail(r, "residue of " + chamber(y) + " has a second shortest chamber " + std::to_string(z));
        if (b.length(z) != b.length(y) + popcount(rel[i]))
          return fail(r, chamber(z) + " is not reached from " + std::to_string(y) + " by a minimal gallery");
      }
    }
  return r;
}

CheckResult check_b1(const BuildingBall& b) {
  CheckResult r{"b1", true, {}};
  const auto& words = b.words();
  for (int x = 0; x < b.size(); ++x) {
    const auto sigma = build_section(b, x);
    if (sigma[static_cast<std::size_t>(b.fold_index(x))] != x || sigma[0] != b.base())
      return fail(r, "section for " + chamber(x) + " misses B or x");
    for (int i = 0; i < words.size(); ++i) {
      if (b.fold_index(sigma[static_cast<std::size_t>(i)]) != i)
        return fail(r, "section for " + chamber(x) + " is not a section over " + format_element(b.system(), words[i]));
      for (Gen s = 0; s < b.system().rank(); ++s) {
        const int j = words.times(i, s);
        if (j >= 0 && !b.chambers().adjacent(s, sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]))
          return fail(r, "section for " + chamber(x) + " breaks " + b.system().name(s) + "-adjacency at " +
                             format_element(b.system(), words[i]));
      }
    }
  }
  return r;
}

std::vector<CheckResult> run_checks(const BuildingBall& b, const std::vector<std::string>& names) {
  std::vector<CheckResult> out;
  for (const auto& n : names) {
    if (n == "axioms") out.push_back(check_axioms(b));
    else if (n == "panels") out.push_back(check_panel_sizes(b));
    else if (n == "fibers") out.push_back(check_fiber_sizes(b));
    else if (n == "f1") out.push_back(check_f1(b));
    else if (n == "f2") out.push_back(check_f2(b));
    else if (n == "f3") out.push_back(check_f3(b));
    else if (n == "b1") out.push_back(check_b1(b));
    else throw PreconditionError("unknown check '" + n + "'");
  }
  return out;
}

}  // namespace rab
