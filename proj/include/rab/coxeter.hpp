#pragma once

// Right-angled Coxeter systems and their elements.
//
// An element is stored as the ShortLex-least reduced word of its commutation
// class, so equality of Elements is equality in W.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rab {

using Gen = int;
using GenSet = std::uint64_t;

constexpr int kMaxGenerators = 64;

inline constexpr GenSet bit(Gen s) { return GenSet{1} << s; }
inline constexpr bool has(GenSet set, Gen s) { return (set >> s) & 1U; }
inline int popcount(GenSet set) { return std::popcount(set); }
std::vector<Gen> members(GenSet set);

class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  // Throws PreconditionError on duplicate names, self-commutation, or
  // duplicate pairs.
  CoxeterSystem(std::vector<std::string> names, const std::vector<std::pair<Gen, Gen>>& commuting);

  // Convenience constructors used by tests, the CLI and the bindings.
  static CoxeterSystem free_product(int n);      // no commuting pairs
  static CoxeterSystem commuting(int n);         // all pairs commute, W = (Z/2)^n
  static CoxeterSystem polygon(int p);           // s_i commutes with s_{i+-1 mod p}

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Gen s) const { return names_.at(static_cast<std::size_t>(s)); }
  // Throws PreconditionError for an unknown name.
  Gen index(std::string_view name) const;

  bool commute(Gen a, Gen b) const { return has(commute_[static_cast<std::size_t>(a)], b); }
  // {s}' : the generators other than s that commute with s.
  GenSet commuting_with(Gen s) const { return commute_[static_cast<std::size_t>(s)]; }
  GenSet all() const { return rank() == 64 ? ~GenSet{0} : bit(rank()) - 1; }
  bool is_spherical(GenSet set) const;
  // Every spherical subset (cliques of the commutation graph, including the
  // empty set), ordered by size and then by bitmask.
  std::vector<GenSet> spherical_subsets() const;
  std::vector<std::pair<Gen, Gen>> commuting_pairs() const;

  // FNV-1a over the canonical .racs text; stable across runs and platforms.
  std::uint64_t hash() const;

  bool operator==(const CoxeterSystem& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<GenSet> commute_;
};

struct Element {
  std::vector<Gen> word;

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }

  bool operator==(const Element&) const = default;
  // ShortLex: length first, then lexicographic on the canonical word.
  std::strong_ordering operator<=>(const Element& other) const;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

// Canonical element equal in W to the product of the letters.
Element normal_form(const CoxeterSystem& sys, std::span<const Gen> letters);
// Parses names separated by spaces or dots; "1", "e" and "" denote the identity.
Element parse_element(const CoxeterSystem& sys, std::string_view text);
// Dot-separated names, or "1" for the identity.
std::string format_element(const CoxeterSystem& sys, const Element& e);

Element multiply(const CoxeterSystem& sys, const Element& a, const Element& b);
Element multiply(const CoxeterSystem& sys, const Element& a, Gen s);
Element inverse(const CoxeterSystem& sys, const Element& a);
int dist(const CoxeterSystem& sys, const Element& a, const Element& b);

// In(w) = {s : l(ws) < l(w)}; always spherical.
GenSet descent_set(const CoxeterSystem& sys, const Element& w);
// Product of the members of a spherical subset (its longest element).
Element longest_element(const CoxeterSystem& sys, GenSet spherical);
// Unique shortest element of the coset g W_T (T need not be spherical).
Element coset_minimum(const CoxeterSystem& sys, Element g, GenSet types);
// True when every letter of the canonical word lies in `types`.
bool in_parabolic(const Element& e, GenSet types);

// All elements of length <= k ordered by length, then ShortLex. Every
// initial segment is star-like. Throws CapExceeded past `cap` elements.
std::vector<Element> enumerate_ball(const CoxeterSystem& sys, int k, std::size_t cap = 0);

// Indexed radius-k ball with a right-multiplication table.
class WordBall {
 public:
  WordBall() = default;
  WordBall(const CoxeterSystem& sys, int radius, std::size_t cap = 0);

  int radius() const { return radius_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Element& operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<Element>& elements() const { return elements_; }
  // -1 when absent.
  int find(const Element& e) const;
  // Index of w_i * s, or -1 when it has length radius + 1.
  int times(int i, Gen s) const { return right_[static_cast<std::size_t>(i) * stride_ + static_cast<std::size_t>(s)]; }
  GenSet descent(int i) const { return descent_[static_cast<std::size_t>(i)]; }
  int length(int i) const { return elements_[static_cast<std::size_t>(i)].length(); }

 private:
  int radius_ = 0;
  std::size_t stride_ = 0;
  std::vector<Element> elements_;
  std::unordered_map<Element, int, ElementHash> index_;
  std::vector<int> right_;
  std::vector<GenSet> descent_;
};

// d(as,b) = d(a,b) +- 1 and d(a,bs) = d(a,b) +- 1.
bool property_pm1_check(const CoxeterSystem& sys, const Element& a, const Element& b, Gen s);
// Distances from x to the {t,t'}-residue of r are three consecutive integers,
// the middle one attained twice on two non-adjacent members. Throws
// PreconditionError unless t, t' are distinct and commute.
bool property_R_check(const CoxeterSystem& sys, const Element& r, Gen t, Gen t2, const Element& x);

}  // namespace rab
