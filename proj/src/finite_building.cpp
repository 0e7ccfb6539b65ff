#include "rab/finite_building.hpp"

#include <algorithm>
#include <numeric>

#include "rab/error.hpp"

namespace rab {

ProductBuilding::ProductBuilding(std::vector<int> sizes) : sizes_(std::move(sizes)), place_(sizes_.size()) {
  if (sizes_.size() > static_cast<std::size_t>(kMaxGenerators)) throw PreconditionError("too many factors");
  long long total = 1;
  for (std::size_t s = sizes_.size(); s-- > 0;) {
    if (sizes_[s] < 1) throw PreconditionError("product factor sizes must be positive");
    place_[s] = static_cast<int>(total);
    total *= sizes_[s];
    if (total > static_cast<long long>(resource_cap())) throw CapExceeded("product building exceeds the chamber cap");
  }
  total_ = static_cast<int>(total);
  chambers_ = ChamberSystem(rank());
  for (int i = 0; i < total_; ++i) chambers_.add_chamber();
  for (Gen s = 0; s < rank(); ++s)
    for (int i = 0; i < total_; ++i)
      if (coord(i, s) != 0) chambers_.join(s, i, with_coord(i, s, 0));
}

bool ProductBuilding::thick() const {
  return std::all_of(sizes_.begin(), sizes_.end(), [](int n) { return n >= 3; });
}

std::vector<int> ProductBuilding::coords(int id) const {
  std::vector<int> out(sizes_.size());
  for (std::size_t s = 0; s < sizes_.size(); ++s) out[s] = (id / place_[s]) % sizes_[s];
  return out;
}

int ProductBuilding::id(std::span<const int> coords) const {
  int out = 0;
  for (std::size_t s = 0; s < sizes_.size(); ++s) {
    if (coords[s] < 0 || coords[s] >= sizes_[s]) throw PreconditionError("coordinate out of range");
    out += coords[s] * place_[s];
  }
  return out;
}

int ProductBuilding::coord(int id, Gen s) const {
  return (id / place_[static_cast<std::size_t>(s)]) % sizes_[static_cast<std::size_t>(s)];
}

int ProductBuilding::with_coord(int id, Gen s, int value) const {
  return id + (value - coord(id, s)) * place_[static_cast<std::size_t>(s)];
}

GenSet ProductBuilding::fold(int base, int y) const {
  GenSet out = 0;
  for (Gen s = 0; s < rank(); ++s)
    if (coord(base, s) != coord(y, s)) out |= bit(s);
  return out;
}

FiniteBuilding FiniteBuilding::from_product(const ProductBuilding& p, int base) {
  FiniteBuilding b;
  b.chambers = p.chambers();
  b.base = base;
  b.types.resize(static_cast<std::size_t>(p.rank()));
  std::iota(b.types.begin(), b.types.end(), 0);
  b.labels.resize(static_cast<std::size_t>(p.size()));
  std::iota(b.labels.begin(), b.labels.end(), 0);
  return b;
}

std::vector<GenSet> fold_finite(const ChamberSystem& cs, int base) {
  if (cs.rank() > kMaxGenerators) throw PreconditionError("too many generators");
  const std::size_t n = static_cast<std::size_t>(cs.size());
  std::vector<GenSet> fold(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<int> queue{base};
  seen[static_cast<std::size_t>(base)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    const GenSet fx = fold[static_cast<std::size_t>(x)];
    for (Gen s = 0; s < cs.rank(); ++s) {
      for (int y : cs.panel(s, x)) {
        if (y == x) continue;
        const std::size_t yi = static_cast<std::size_t>(y);
        if (!seen[yi]) {
          if (has(fx, s))
            throw AxiomError("chamber " + std::to_string(y) + " is " + std::to_string(s) +
                             "-adjacent to " + std::to_string(x) + " but not reached from the shorter chamber");
          seen[yi] = 1;
          fold[yi] = fx | bit(s);
          queue.push_back(y);
        } else if (has(fx, s) ? (fold[yi] != fx && fold[yi] != (fx & ~bit(s))) : fold[yi] != (fx | bit(s))) {
          throw AxiomError("inconsistent folding at chambers " + std::to_string(x) + " and " + std::to_string(y));
        }
      }
    }
  }
  if (queue.size() != n) {
    for (std::size_t i = 0; i < n; ++i)
      if (!seen[i]) throw AxiomError("chamber " + std::to_string(i) + " is not gallery connected to the base");
  }
  for (Gen s = 0; s < cs.rank(); ++s)
    for (int p = 0; p < cs.panel_count(s); ++p) {
      const auto members = cs.panel_members(s, p);
      if (members.size() < 2)
        throw AxiomError("panel of chamber " + std::to_string(members[0]) + " has fewer than 2 chambers");
      const auto low = std::count_if(members.begin(), members.end(),
                                     [&](int m) { return !has(fold[static_cast<std::size_t>(m)], s); });
      if (low != 1)
        throw AxiomError("panel of chamber " + std::to_string(members[0]) + " has no unique shortest chamber");
    }
  return fold;
}

namespace {

// x^t: the member of [x]_t whose folding drops t.
int lower(const ChamberSystem& cs, const std::vector<GenSet>& fold, int x, Gen t) {
  const GenSet want = fold[static_cast<std::size_t>(x)] & ~bit(t);
  int found = -1;
  for (int y : cs.panel(t, x))
    if (fold[static_cast<std::size_t>(y)] == want) {
      if (found >= 0) throw AxiomError("chamber " + std::to_string(x) + " has two lower neighbours of one type");
      found = y;
    }
  if (found < 0) throw AxiomError("chamber " + std::to_string(x) + " has no lower neighbour");
  return found;
}

std::vector<int> order_by_length(const std::vector<GenSet>& fold) {
  std::vector<int> order(fold.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(fold[static_cast<std::size_t>(a)]) < popcount(fold[static_cast<std::size_t>(b)]);
  });
  return order;
}

}  // namespace

ProductDecomposition decompose_as_product(const FiniteBuilding& b, std::size_t cap) {
  const ChamberSystem& cs = b.chambers;
  if (static_cast<std::size_t>(cs.size()) > cap)
    throw CapExceeded("building axiom verification is capped at " + std::to_string(cap) + " chambers");
  const auto fold = fold_finite(cs, b.base);
  const int n = cs.rank();

  std::vector<int> sizes(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> value(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(cs.size()), -1));
  for (Gen s = 0; s < n; ++s) {
    const auto panel = cs.panel(s, b.base);
    sizes[static_cast<std::size_t>(s)] = static_cast<int>(panel.size());
    value[static_cast<std::size_t>(s)][static_cast<std::size_t>(b.base)] = 0;
    int next = 1;
    for (int y : panel)
      if (y != b.base) value[static_cast<std::size_t>(s)][static_cast<std::size_t>(y)] = next++;
  }
  ProductDecomposition out{ProductBuilding(sizes), std::vector<int>(static_cast<std::size_t>(cs.size()), -1)};

  std::vector<std::vector<int>> coords(static_cast<std::size_t>(cs.size()));
  for (int x : order_by_length(fold)) {
    const GenSet fx = fold[static_cast<std::size_t>(x)];
    auto& c = coords[static_cast<std::size_t>(x)];
    c.assign(static_cast<std::size_t>(n), 0);
    if (fx == 0) {
      if (x != b.base) throw AxiomError("chambers " + std::to_string(x) + " and the base both fold to 1");
    } else if (popcount(fx) == 1) {
      const Gen s = std::countr_zero(fx);
      c[static_cast<std::size_t>(s)] = value[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)];
    } else {
      std::vector<std::pair<Gen, int>> below;
      for (Gen t : members(fx)) below.emplace_back(t, lower(cs, fold, x, t));
      for (Gen s = 0; s < n; ++s) {
        int v = -1;
        for (auto [t, xt] : below) {
          if (t == s) continue;
          const int vt = coords[static_cast<std::size_t>(xt)][static_cast<std::size_t>(s)];
          if (v >= 0 && v != vt)
            throw AxiomError("chamber " + std::to_string(x) + " has incompatible lower neighbours");
          v = vt;
        }
        c[static_cast<std::size_t>(s)] = v;
      }
    }
    out.iso[static_cast<std::size_t>(x)] = out.product.id(c);
  }

  std::vector<char> hit(static_cast<std::size_t>(out.product.size()), 0);
  for (int x = 0; x < cs.size(); ++x) {
    auto& h = hit[static_cast<std::size_t>(out.iso[static_cast<std::size_t>(x)])];
    if (h) throw AxiomError("chamber " + std::to_string(x) + " collides with another chamber in the product");
    h = 1;
  }
  if (cs.size() != out.product.size())
    throw AxiomError("building has " + std::to_string(cs.size()) + " chambers but its product model has " +
                     std::to_string(out.product.size()));
  std::vector<int> witness;
  if (!is_morphism(cs, out.product.chambers(), out.iso, &witness))
    throw AxiomError("chambers " + std::to_string(witness[0]) + " and " + std::to_string(witness[1]) +
                     " are adjacent but their images are not");
  for (Gen s = 0; s < n; ++s)
    for (int p = 0; p < cs.panel_count(s); ++p)
      if (static_cast<int>(cs.panel_members(s, p).size()) != sizes[static_cast<std::size_t>(s)])
        throw AxiomError("panel of chamber " + std::to_string(cs.panel_members(s, p)[0]) +
                         " differs in size from the base panel");
  return out;
}

int least_unused(const PanelChoice& choice) {
  for (int c : choice.candidates)
    if (std::find(choice.used.begin(), choice.used.end(), c) == choice.used.end()) return c;
  return choice.candidates.front();
}

std::vector<int> extend_morphism(const FiniteBuilding& x, std::span<const int> psi, const ProductBuilding& y,
                                 const Chooser& chooser) {
  const ChamberSystem& cs = x.chambers;
  if (cs.rank() != y.rank()) throw PreconditionError("source and target have different rank");
  if (psi.size() != static_cast<std::size_t>(cs.size())) throw PreconditionError("partial map has the wrong size");
  const auto fold = fold_finite(cs, x.base);
  const auto at = [](auto& v, int i) -> decltype(auto) { return v[static_cast<std::size_t>(i)]; };

  for (int c = 0; c < cs.size(); ++c) {
    if (at(psi, c) < 0) continue;
    if (at(psi, c) >= y.size()) throw PreconditionError("partial map sends " + std::to_string(c) + " out of range");
    for (Gen t : members(at(fold, c)))
      if (at(psi, lower(cs, fold, c, t)) < 0)
        throw PreconditionError("domain is not star-like: chamber " + std::to_string(c) + " is defined but " +
                                std::to_string(lower(cs, fold, c, t)) + " is not");
  }
  for (Gen s = 0; s < cs.rank(); ++s)
    for (int p = 0; p < cs.panel_count(s); ++p) {
      int first = -1;
      for (int m : cs.panel_members(s, p)) {
        if (at(psi, m) < 0) continue;
        if (first < 0)
          first = m;
        else if (!y.chambers().adjacent(s, at(psi, first), at(psi, m)))
          throw PreconditionError("partial map is not a morphism at chambers " + std::to_string(first) + " and " +
                                  std::to_string(m));
      }
    }

  std::vector<int> phi(static_cast<std::size_t>(cs.size()), -1);
  const auto choose = [&](int chamber, Gen s, int anchor, std::span<const int> candidates, std::span<const int> used) {
    const int c = chooser(PanelChoice{chamber, s, anchor, candidates, used});
    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end())
      throw PreconditionError("chooser returned " + std::to_string(c) + " outside the required panel");
    return c;
  };

  int base_image = at(psi, x.base);
  if (base_image < 0) {
    std::vector<int> all(static_cast<std::size_t>(y.size()));
    std::iota(all.begin(), all.end(), 0);
    base_image = choose(x.base, -1, -1, all, {});
  }
  at(phi, x.base) = base_image;
  for (Gen s = 0; s < cs.rank(); ++s) {
    std::vector<int> used{base_image};
    const auto panel = cs.panel(s, x.base);
    for (int m : panel)
      if (m != x.base && at(psi, m) >= 0) {
        at(phi, m) = at(psi, m);
        used.push_back(at(psi, m));
      }
    for (int m : panel)
      if (m != x.base && at(psi, m) < 0) {
        at(phi, m) = choose(m, s, x.base, y.chambers().panel(s, base_image), used);
        used.push_back(at(phi, m));
      }
  }

  std::vector<int> coords(static_cast<std::size_t>(cs.rank()));
  for (int c : order_by_length(fold)) {
    const GenSet fc = at(fold, c);
    if (popcount(fc) < 2) continue;
    std::vector<std::pair<Gen, int>> below;
    for (Gen t : members(fc)) below.emplace_back(t, at(phi, lower(cs, fold, c, t)));
    for (Gen s = 0; s < cs.rank(); ++s) {
      int v = -1;
      for (auto [t, image] : below) {
        if (t == s) continue;
        const int vt = y.coord(image, s);
        if (v >= 0 && v != vt) throw TheoremViolation("extension is not forced at chamber " + std::to_string(c));
        v = vt;
      }
      at(coords, s) = v;
    }
    at(phi, c) = y.id(coords);
    if (at(psi, c) >= 0 && at(psi, c) != at(phi, c))
      throw TheoremViolation("forced extension disagrees with the partial map at chamber " + std::to_string(c));
  }
  return phi;
}

EquivarianceResult pi_equivariance_check(const ChamberSystem& x, const ChamberSystem& y, std::span<const int> phi,
                                         int base) {
  const auto fx = fold_finite(x, base);
  const auto fy = fold_finite(y, phi[static_cast<std::size_t>(base)]);
  for (int z = 0; z < x.size(); ++z)
    if (fy[static_cast<std::size_t>(phi[static_cast<std::size_t>(z)])] != fx[static_cast<std::size_t>(z)])
      return {false, z};
  return {};
}

}  // namespace rab
