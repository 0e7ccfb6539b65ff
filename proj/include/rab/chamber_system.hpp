#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rab/coxeter.hpp"

namespace rab {

// A set of chambers 0..n-1 with one partition (the s-panels) per generator
// slot. Panel member lists are kept sorted.
class ChamberSystem {
 public:
  ChamberSystem() = default;
  explicit ChamberSystem(int rank) : panel_of_(static_cast<std::size_t>(rank)), panels_(static_cast<std::size_t>(rank)) {}

  int rank() const { return static_cast<int>(panel_of_.size()); }
  int size() const { return size_; }

  // Appends a chamber lying in singleton panels; returns its id.
  int add_chamber();
  // Moves chamber x (currently alone in its s-panel) into the s-panel of y.
  void join(Gen s, int x, int y);

  int panel_id(Gen s, int x) const { return panel_of_[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)]; }
  std::span<const int> panel(Gen s, int x) const { return panels_[static_cast<std::size_t>(s)][static_cast<std::size_t>(panel_id(s, x))]; }
  int panel_count(Gen s) const { return static_cast<int>(panels_[static_cast<std::size_t>(s)].size()); }
  std::span<const int> panel_members(Gen s, int pid) const { return panels_[static_cast<std::size_t>(s)][static_cast<std::size_t>(pid)]; }
  bool adjacent(Gen s, int x, int y) const { return panel_id(s, x) == panel_id(s, y); }

  // Closure of x under ~_t for t in `types`, sorted.
  std::vector<int> residue(int x, GenSet types) const;
  // Unique chamber of panel(s1, a) that is s2-adjacent to b, or -1 if none.
  int square(Gen s1, int a, Gen s2, int b) const;

  // Panels listed with every member sorted and panels ordered by their
  // smallest member; used for serialization and comparison.
  std::vector<std::vector<int>> sorted_panels(Gen s) const;

  // Rebuilds the structure from explicit panel lists (each chamber must
  // appear exactly once per generator). Throws ParseError on violations.
  static ChamberSystem from_panels(int size, const std::vector<std::vector<std::vector<int>>>& panels);

 private:
  int size_ = 0;
  std::vector<std::vector<int>> panel_of_;
  std::vector<std::vector<std::vector<int>>> panels_;
};

// True when `map` (source chamber -> target chamber) preserves every ~_s.
// On failure, `witness` receives {x, y, s}.
bool is_morphism(const ChamberSystem& source, const ChamberSystem& target, std::span<const int> map,
                 std::vector<int>* witness = nullptr);

}  // namespace rab
