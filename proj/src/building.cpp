#include "rab/building.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rab/error.hpp"

namespace rab {

BuildingBall::BuildingBall(CoxeterSystem system, int radius, std::vector<int> q, std::size_t cap)
    : system_(std::move(system)), radius_(radius), q_(std::move(q)), words_(system_, radius, cap),
      chambers_(system_.rank()), over_(static_cast<std::size_t>(words_.size())) {}

int BuildingBall::lower(int x, Gen t) const {
  const int target = words_.times(fold_index(x), t);
  if (!has(descent(x), t) || target < 0) throw PreconditionError("lower: generator is not a descent");
  for (int y : chambers_.panel(t, x))
    if (fold_index(y) == target) return y;
  throw AxiomError("chamber " + std::to_string(x) + " has no lower " + system_.name(t) + "-neighbour");
}

int BuildingBall::residue_minimum(int x, GenSet types) const {
  for (;;) {
    const GenSet down = descent(x) & types;
    if (down == 0) return x;
    x = lower(x, std::countr_zero(down));
  }
}

bool BuildingBall::residue_complete(int x, GenSet types) const {
  return length(residue_minimum(x, types)) + popcount(types) <= radius_;
}

int BuildingBall::add_chamber(int fold_index) {
  const int id = chambers_.add_chamber();
  fold_.push_back(fold_index);
  over_[static_cast<std::size_t>(fold_index)].push_back(id);
  return id;
}

void BuildingBall::set_structure(ChamberSystem chambers, std::vector<int> fold) {
  if (chambers.rank() != system_.rank() || fold.size() != static_cast<std::size_t>(chambers.size()))
    throw PreconditionError("structure does not match the system");
  chambers_ = std::move(chambers);
  fold_ = std::move(fold);
  over_.assign(static_cast<std::size_t>(words_.size()), {});
  for (int x = 0; x < chambers_.size(); ++x) {
    const int f = fold_[static_cast<std::size_t>(x)];
    if (f < 0 || f >= words_.size()) throw PreconditionError("fold index out of range");
    over_[static_cast<std::size_t>(f)].push_back(x);
  }
}

namespace {

// Glues the product building Res(x, T) onto the ball: creates the chambers
// over words()[target] whose T-residue has shortest chamber x. Coordinates
// of existing residue chambers are recovered by completing squares, starting
// from the panels [x]_t (coordinate c_t indexes [x]_t \ {x} in id order).
void glue_product(BuildingBall& b, int x, GenSet types, int target) {
  const auto gens = members(types);
  const std::size_t m = gens.size();
  std::vector<std::vector<int>> axis(m);
  for (std::size_t j = 0; j < m; ++j)
    for (int y : b.chambers().panel(gens[j], x))
      if (y != x) axis[j].push_back(y);

  std::map<std::pair<GenSet, std::vector<int>>, int> memo;
  // Chamber with support `v` (slots) and coordinates `c` (-1 off the support).
  std::function<int(unsigned, std::vector<int>)> chamber = [&](unsigned v, std::vector<int> c) -> int {
    if (v == 0) return x;
    if (std::popcount(v) == 1) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(v));
      return axis[j][static_cast<std::size_t>(c[j])];
    }
    auto key = std::make_pair(GenSet{v}, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t j1 = static_cast<std::size_t>(std::countr_zero(v));
    const std::size_t j2 = static_cast<std::size_t>(std::countr_zero(v & (v - 1)));
    auto c1 = c;
    c1[j1] = -1;
    auto c2 = c;
    c2[j2] = -1;
    const int a = chamber(v & ~(1U << j1), c1);
    const int d = chamber(v & ~(1U << j2), c2);
    const int r = b.chambers().square(gens[j1], a, gens[j2], d);
    if (r < 0) throw TheoremViolation("square completion failed while gluing onto chamber " + std::to_string(x));
    memo.emplace(std::move(key), r);
    return r;
  };

  const unsigned full = (1U << m) - 1;
  std::vector<int> c(m, 0);
  for (;;) {
    const int y = b.add_chamber(target);
    for (std::size_t j = 0; j < m; ++j) {
      auto face = c;
      face[j] = -1;
      b.join(gens[j], y, chamber(full & ~(1U << j), face));
    }
    std::size_t j = m;
    while (j-- > 0) {
      if (++c[j] < static_cast<int>(axis[j].size())) break;
      c[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
}

}  // namespace

BuildingBall build_regular(const CoxeterSystem& sys, const std::vector<int>& q, int k,
                           const ThicknessChooser& chooser, std::size_t cap) {
  if (static_cast<int>(q.size()) != sys.rank()) throw PreconditionError("need one thickness per generator");
  for (int v : q)
    if (v < 1) throw PreconditionError("thickness parameters must be >= 1");
  if (cap == 0) cap = resource_cap();
  BuildingBall b(sys, k, chooser ? std::vector<int>{} : q, cap);
  const WordBall& words = b.words();
  b.add_chamber(0);
  for (int i = 1; i < words.size(); ++i) {
    const GenSet types = words.descent(i);
    int shortest = i;
    for (Gen t : members(types)) shortest = words.times(shortest, t);
    const std::vector<int> roots = b.over(shortest);
    for (int x : roots) {
      if (popcount(types) == 1) {
        const Gen s = std::countr_zero(types);
        const int qs = chooser ? chooser(x, s) : q[static_cast<std::size_t>(s)];
        if (qs < 1) throw PreconditionError("thickness chooser returned a value below 1");
        for (int j = 0; j < qs; ++j) b.join(s, b.add_chamber(i), x);
      } else {
        glue_product(b, x, types, i);
      }
      if (static_cast<std::size_t>(b.size()) > cap)
        throw CapExceeded("building ball exceeds the cap of " + std::to_string(cap) + " chambers");
    }
  }
  return b;
}

namespace {

using Syllable = std::pair<Gen, int>;
using Syllables = std::vector<Syllable>;

// Lexicographically least arrangement of the syllables' types; values ride
// along with their syllable.
Syllables canonical(const CoxeterSystem& sys, const Syllables& w) {
  const std::size_t n = w.size();
  Syllables out;
  out.reserve(n);
  std::vector<char> taken(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j)
        if (!taken[j] && !sys.commute(w[j].first, w[i].first)) front = false;
      if (front && (best == n || w[i].first < w[best].first)) best = i;
    }
    taken[best] = 1;
    out.push_back(w[best]);
  }
  return out;
}

Element type_of(const Syllables& w) {
  Element e;
  for (auto [s, v] : w) e.word.push_back(s);
  return e;
}

// Removes the syllable of type s that can be moved to the end, if any.
bool drop_last(const CoxeterSystem& sys, Syllables& w, Gen s) {
  for (std::size_t j = w.size(); j-- > 0;) {
    if (w[j].first == s) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
      return true;
    }
    if (!sys.commute(w[j].first, s)) return false;
  }
  return false;
}

}  // namespace

CoveringBall build_by_covering(const CoxeterSystem& sys, const std::vector<int>& factor_sizes, int k, int base,
                               std::size_t cap) {
  if (static_cast<int>(factor_sizes.size()) != sys.rank())
    throw PreconditionError("need one factor size per generator");
  std::vector<int> q;
  for (int n : factor_sizes) {
    if (n < 2) throw PreconditionError("factor sizes must be >= 2");
    q.push_back(n - 1);
  }
  if (cap == 0) cap = resource_cap();
  CoveringBall out{BuildingBall(sys, k, q, cap), ProductBuilding(factor_sizes), {}};
  if (base < 0 || base >= out.local.size()) throw PreconditionError("base chamber outside the local building");
  BuildingBall& b = out.ball;
  const WordBall& words = b.words();

  // Graph-product elements of syllable length <= k, level by level.
  std::vector<Syllables> all{Syllables{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= k; ++len) {
    const std::size_t level_end = all.size();
    std::set<Syllables> next;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const GenSet in = descent_set(sys, type_of(all[i]));
      for (Gen s = 0; s < sys.rank(); ++s) {
        if (has(in, s)) continue;
        for (int h = 1; h < factor_sizes[static_cast<std::size_t>(s)]; ++h) {
          Syllables w = all[i];
          w.emplace_back(s, h);
          next.insert(canonical(sys, w));
        }
      }
    }
    if (all.size() + next.size() > cap) throw CapExceeded("covering ball exceeds the chamber cap");
    level_begin = level_end;
    all.insert(all.end(), next.begin(), next.end());
  }

  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < all.size(); ++i) order.emplace_back(words.find(type_of(all[i])), i);
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& c) {
    if (a.first != c.first) return a.first < c.first;
    return all[a.second] < all[c.second];
  });
  std::map<Syllables, int> id;
  for (auto [fi, i] : order) id.emplace(all[i], b.add_chamber(fi));

  for (Gen s = 0; s < sys.rank(); ++s)
    for (auto [fi, i] : order) {
      Syllables rep = all[i];
      if (drop_last(sys, rep, s)) b.join(s, id.at(all[i]), id.at(rep));
    }

  const auto base_coords = out.local.coords(base);
  out.covering.resize(all.size());
  for (const auto& [w, x] : id) {
    auto c = base_coords;
    for (auto [s, v] : w) c[static_cast<std::size_t>(s)] = (c[static_cast<std::size_t>(s)] + v) % factor_sizes[static_cast<std::size_t>(s)];
    out.covering[static_cast<std::size_t>(x)] = out.local.id(c);
  }
  return out;
}

IsomorphismResult find_isomorphism(const BuildingBall& b1, const BuildingBall& b2) {
  if (!(b1.system() == b2.system())) return {std::nullopt, "the balls are over different Coxeter systems"};
  if (b1.radius() != b2.radius()) return {std::nullopt, "the balls have different radii"};
  const auto& c1 = b1.chambers();
  const auto& c2 = b2.chambers();
  std::vector<int> order(static_cast<std::size_t>(b1.size()));
  for (int x = 0; x < b1.size(); ++x) order[static_cast<std::size_t>(x)] = x;
  std::stable_sort(order.begin(), order.end(), [&](int a, int c) { return b1.fold_index(a) < b1.fold_index(c); });

  std::vector<int> phi(static_cast<std::size_t>(b1.size()), -1);
  auto at = [&](int x) -> int& { return phi[static_cast<std::size_t>(x)]; };
  at(b1.base()) = b2.base();
  for (int x : order) {
    if (at(x) >= 0) continue;
    const GenSet in = b1.descent(x);
    if (popcount(in) == 1) {
      const Gen s = std::countr_zero(in);
      const int x0 = b1.lower(x, s);
      const int y0 = at(x0);
      std::vector<int> src, dst;
      for (int y : c1.panel(s, x0))
        if (y != x0) src.push_back(y);
      for (int y : c2.panel(s, y0))
        if (y != y0) dst.push_back(y);
      if (src.size() != dst.size())
        return {std::nullopt, "panel sizes differ: " + b1.system().name(s) + "-panel of chamber " + std::to_string(x0) +
                                  " has " + std::to_string(src.size() + 1) + " chambers, its image has " +
                                  std::to_string(dst.size() + 1)};
      for (std::size_t j = 0; j < src.size(); ++j) at(src[j]) = dst[j];
    } else {
      const auto gens = members(in);
      const Gen t = gens[0], u = gens[1];
      const int r = c2.square(t, at(b1.lower(x, t)), u, at(b1.lower(x, u)));
      if (r < 0) return {std::nullopt, "no square completion for chamber " + std::to_string(x)};
      at(x) = r;
    }
  }
  if (b1.size() != b2.size())
    return {std::nullopt, "chamber counts differ: " + std::to_string(b1.size()) + " vs " + std::to_string(b2.size())};
  std::vector<int> inv(static_cast<std::size_t>(b2.size()), -1);
  for (int x = 0; x < b1.size(); ++x) {
    if (b2.fold_index(at(x)) != b1.fold_index(x))
      return {std::nullopt, "chamber " + std::to_string(x) + " maps to a chamber with a different folding"};
    if (inv[static_cast<std::size_t>(at(x))] >= 0)
      return {std::nullopt, "chambers " + std::to_string(inv[static_cast<std::size_t>(at(x))]) + " and " +
                                std::to_string(x) + " have the same image"};
    inv[static_cast<std::size_t>(at(x))] = x;
  }
  std::vector<int> w;
  if (!is_morphism(c1, c2, phi, &w))
    return {std::nullopt, "adjacency of chambers " + std::to_string(w[0]) + ", " + std::to_string(w[1]) + " not preserved"};
  if (!is_morphism(c2, c1, inv, &w))
    return {std::nullopt, "inverse does not preserve adjacency of chambers " + std::to_string(w[0]) + ", " +
                              std::to_string(w[1])};
  return {std::move(phi), {}};
}

FiniteBuilding residue(const BuildingBall& b, int x, GenSet types) {
  if (!b.system().is_spherical(types)) throw PreconditionError("residue type is not spherical");
  if (!b.residue_complete(x, types))
    throw TruncatedError("residue of chamber " + std::to_string(x) + " leaves the radius-" +
                         std::to_string(b.radius()) + " ball");
  FiniteBuilding out;
  out.labels = b.chambers().residue(x, types);
  out.types = members(types);
  const std::size_t m = out.types.size();
  out.chambers = ChamberSystem(static_cast<int>(m));
  std::map<int, int> local;
  for (int y : out.labels) local.emplace(y, out.chambers.add_chamber());
  for (std::size_t j = 0; j < m; ++j)
    for (int y : out.labels) {
      const int first = b.chambers().panel(out.types[j], y).front();
      if (first != y) out.chambers.join(static_cast<Gen>(j), local.at(y), local.at(first));
    }
  out.base = local.at(b.residue_minimum(x, types));
  return out;
}

std::vector<GenSet> residue_folding(const BuildingBall& b, const FiniteBuilding& res) {
  const CoxeterSystem& sys = b.system();
  const Element g_inv = inverse(sys, b.fold(res.labels[static_cast<std::size_t>(res.base)]));
  std::vector<GenSet> out;
  for (int y : res.labels) {
    const Element rel = multiply(sys, g_inv, b.fold(y));
    GenSet slots = 0;
    for (Gen s : rel.word) {
      const auto it = std::find(res.types.begin(), res.types.end(), s);
      if (it == res.types.end()) throw TheoremViolation("residue chamber folds outside its coset");
      slots |= bit(static_cast<Gen>(it - res.types.begin()));
    }
    out.push_back(slots);
  }
  return out;
}

std::vector<std::pair<int, Gen>> root_set(const BuildingBall& b) {
  std::vector<std::pair<int, Gen>> out;
  const WordBall& words = b.words();
  for (int x = 0; x < b.size(); ++x)
    for (Gen s = 0; s < b.system().rank(); ++s) {
      const int up = words.times(b.fold_index(x), s);
      if (up >= 0 && words.descent(up) == bit(s)) out.emplace_back(x, s);
    }
  return out;
}

std::vector<int> build_section(const BuildingBall& b, int x) {
  const CoxeterSystem& sys = b.system();
  const WordBall& words = b.words();
  const Element& g = b.fold(x);
  std::vector<int> sigma(static_cast<std::size_t>(words.size()), -1);
  sigma[0] = b.base();
  for (int i = 1; i < words.size(); ++i) {
    const Element& v = words[i];
    const Element rest = multiply(sys, inverse(sys, v), g);
    if (v.length() + rest.length() == g.length()) {
      // v lies on a minimal gallery from 1 to pi(x): descend from x.
      int c = x;
      for (auto it = rest.word.rbegin(); it != rest.word.rend(); ++it) c = b.lower(c, *it);
      sigma[static_cast<std::size_t>(i)] = c;
      continue;
    }
    const GenSet in = words.descent(i);
    if (popcount(in) == 1) {
      const Gen s = std::countr_zero(in);
      const int prev = sigma[static_cast<std::size_t>(words.times(i, s))];
      for (int y : b.chambers().panel(s, prev))
        if (y != prev) {
          sigma[static_cast<std::size_t>(i)] = y;
          break;
        }
    } else {
      const auto gens = members(in);
      const int a = sigma[static_cast<std::size_t>(words.times(i, gens[0]))];
      const int c = sigma[static_cast<std::size_t>(words.times(i, gens[1]))];
      sigma[static_cast<std::size_t>(i)] = b.chambers().square(gens[0], a, gens[1], c);
    }
    if (sigma[static_cast<std::size_t>(i)] < 0)
      throw TheoremViolation("section construction stalled at " + format_element(sys, v));
  }
  return sigma;
}

Neighborhood neighborhood_chambers(const BuildingBall& b, const HalfSpace& hs, int x) {
  const CoxeterSystem& sys = b.system();
  const WordBall& words = b.words();
  Neighborhood out;
  out.half_space = normalize(sys, hs);
  if (!contains(sys, out.half_space, b.fold(x)))
    throw PreconditionError("chamber " + std::to_string(x) + " folds outside the half-space");
  std::vector<char> inside(static_cast<std::size_t>(words.size()));
  for (int i = 0; i < words.size(); ++i) inside[static_cast<std::size_t>(i)] = contains(sys, out.half_space, words[i]);

  std::vector<char> seen(static_cast<std::size_t>(b.size()), 0);
  std::vector<int> queue{x};
  seen[static_cast<std::size_t>(x)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int y = queue[head];
    const int fy = b.fold_index(y);
    for (Gen s = 0; s < sys.rank(); ++s) {
      const int up = words.times(fy, s);
      if (up < 0 || !inside[static_cast<std::size_t>(fy)] || !inside[static_cast<std::size_t>(up)]) continue;
      for (int z : b.chambers().panel(s, y))
        if (!seen[static_cast<std::size_t>(z)]) {
          seen[static_cast<std::size_t>(z)] = 1;
          queue.push_back(z);
        }
    }
  }
  std::sort(queue.begin(), queue.end());
  out.chambers = queue;
  int best = b.radius() + 1;
  for (int y : queue) best = std::min(best, b.length(y));
  for (int y : queue)
    if (b.length(y) == best) out.shortest.push_back(y);
  if (out.shortest.size() == 1) out.anchor = out.shortest[0];
  return out;
}

}  // namespace rab
