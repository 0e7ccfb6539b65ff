#include "rab/chamber_system.hpp"

#include <algorithm>
#include <deque>

#include "rab/error.hpp"

namespace rab {

int ChamberSystem::add_chamber() {
  const int id = size_++;
  for (std::size_t s = 0; s < panel_of_.size(); ++s) {
    panel_of_[s].push_back(static_cast<int>(panels_[s].size()));
    panels_[s].push_back({id});
  }
  return id;
}

void ChamberSystem::join(Gen s, int x, int y) {
  auto& of = panel_of_[static_cast<std::size_t>(s)];
  auto& lists = panels_[static_cast<std::size_t>(s)];
  const int from = of[static_cast<std::size_t>(x)];
  const int to = of[static_cast<std::size_t>(y)];
  if (from == to) return;
  if (lists[static_cast<std::size_t>(from)].size() != 1)
    throw std::logic_error("join: chamber is not alone in its panel");
  // The emptied singleton stays as a tombstone only if it is not the last
  // panel; swap-remove keeps ids dense.
  auto& target = lists[static_cast<std::size_t>(to)];
  target.insert(std::upper_bound(target.begin(), target.end(), x), x);
  of[static_cast<std::size_t>(x)] = to;
  const int last = static_cast<int>(lists.size()) - 1;
  if (from != last) {
    lists[static_cast<std::size_t>(from)] = std::move(lists[static_cast<std::size_t>(last)]);
    for (int m : lists[static_cast<std::size_t>(from)]) of[static_cast<std::size_t>(m)] = from;
  }
  lists.pop_back();
}

std::vector<int> ChamberSystem::residue(int x, GenSet types) const {
  std::vector<char> seen(static_cast<std::size_t>(size_), 0);
  std::vector<int> out{x};
  seen[static_cast<std::size_t>(x)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Gen t : members(types))
      for (int y : panel(t, out[i]))
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          out.push_back(y);
        }
  std::sort(out.begin(), out.end());
  return out;
}

int ChamberSystem::square(Gen s1, int a, Gen s2, int b) const {
  const int target = panel_id(s2, b);
  int found = -1;
  for (int m : panel(s1, a))
    if (panel_id(s2, m) == target) {
      if (found >= 0) return -1;
      found = m;
    }
  return found;
}

std::vector<std::vector<int>> ChamberSystem::sorted_panels(Gen s) const {
  auto out = panels_[static_cast<std::size_t>(s)];
  std::sort(out.begin(), out.end());
  return out;
}

ChamberSystem ChamberSystem::from_panels(int size, const std::vector<std::vector<std::vector<int>>>& panels) {
  ChamberSystem cs(static_cast<int>(panels.size()));
  cs.size_ = size;
  for (std::size_t s = 0; s < panels.size(); ++s) {
    cs.panel_of_[s].assign(static_cast<std::size_t>(size), -1);
    for (const auto& p : panels[s]) {
      if (p.empty()) throw ParseError(0, "empty panel");
      auto sorted = p;
      std::sort(sorted.begin(), sorted.end());
      for (int x : sorted) {
        if (x < 0 || x >= size) throw ParseError(0, "panel member " + std::to_string(x) + " out of range");
        if (cs.panel_of_[s][static_cast<std::size_t>(x)] != -1)
          throw ParseError(0, "chamber " + std::to_string(x) + " appears in two panels of one type");
        cs.panel_of_[s][static_cast<std::size_t>(x)] = static_cast<int>(cs.panels_[s].size());
      }
      cs.panels_[s].push_back(std::move(sorted));
    }
    for (int x = 0; x < size; ++x)
      if (cs.panel_of_[s][static_cast<std::size_t>(x)] == -1)
        throw ParseError(0, "chamber " + std::to_string(x) + " missing from the panels of a generator");
  }
  return cs;
}

bool is_morphism(const ChamberSystem& source, const ChamberSystem& target, std::span<const int> map,
                 std::vector<int>* witness) {
  if (source.rank() != target.rank()) throw PreconditionError("chamber systems of different rank");
  for (Gen s = 0; s < source.rank(); ++s)
    for (int p = 0; p < source.panel_count(s); ++p) {
      const auto members = source.panel_members(s, p);
      const int first = map[static_cast<std::size_t>(members[0])];
      for (int y : members) {
        if (target.adjacent(s, first, map[static_cast<std::size_t>(y)])) continue;
        if (witness) *witness = {members[0], y, s};
        return false;
      }
    }
  return true;
}

}  // namespace rab
