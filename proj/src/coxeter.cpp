#include "rab/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

#include "rab/error.hpp"

namespace rab {

std::size_t resource_cap() {
  if (const char* env = std::getenv("RAB_MAX_CHAMBERS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

std::vector<Gen> members(GenSet set) {
  std::vector<Gen> out;
  while (set) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

CoxeterSystem::CoxeterSystem(std::vector<std::string> names,
                             const std::vector<std::pair<Gen, Gen>>& commuting)
    : names_(std::move(names)), commute_(names_.size(), 0) {
  if (names_.size() > static_cast<std::size_t>(kMaxGenerators))
    throw PreconditionError("at most 64 generators are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw PreconditionError("empty generator name");
    if (!seen.insert(n).second) throw PreconditionError("duplicate generator '" + n + "'");
  }
  for (auto [a, b] : commuting) {
    if (a < 0 || b < 0 || a >= rank() || b >= rank())
      throw PreconditionError("commuting pair refers to an unknown generator");
    if (a == b) throw PreconditionError("generator '" + names_[a] + "' cannot commute with itself");
    if (commute(a, b)) throw PreconditionError("duplicate commuting pair " + names_[a] + " " + names_[b]);
    commute_[a] |= bit(b);
    commute_[b] |= bit(a);
  }
}

CoxeterSystem CoxeterSystem::free_product(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return CoxeterSystem(std::move(names), {});
}

CoxeterSystem CoxeterSystem::commuting(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<Gen, Gen>> pairs;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int j = 0; j < i; ++j) pairs.emplace_back(j, i);
  }
  return CoxeterSystem(std::move(names), pairs);
}

CoxeterSystem CoxeterSystem::polygon(int p) {
  if (p < 4) throw PreconditionError("polygon system needs p >= 4");
  std::vector<std::string> names;
  std::vector<std::pair<Gen, Gen>> pairs;
  for (int i = 0; i < p; ++i) {
    names.push_back("s" + std::to_string(i + 1));
    pairs.emplace_back(i, (i + 1) % p);
  }
  return CoxeterSystem(std::move(names), pairs);
}

Gen CoxeterSystem::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Gen>(i);
  throw PreconditionError("unknown generator '" + std::string(name) + "'");
}

bool CoxeterSystem::is_spherical(GenSet set) const {
  for (Gen s : members(set))
    if ((set & ~bit(s) & ~commute_[s]) != 0) return false;
  return true;
}

std::vector<GenSet> CoxeterSystem::spherical_subsets() const {
  std::vector<GenSet> out{0};
  // Grow cliques one generator at a time; each clique is produced once by
  // only adding generators above its current maximum.
  for (std::size_t i = 0; i < out.size(); ++i) {
    const GenSet c = out[i];
    const int start = c == 0 ? 0 : 64 - std::countl_zero(c);
    for (Gen s = start; s < rank(); ++s)
      if ((c & ~commute_[s]) == 0) out.push_back(c | bit(s));
  }
  std::sort(out.begin(), out.end(), [](GenSet a, GenSet b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

std::vector<std::pair<Gen, Gen>> CoxeterSystem::commuting_pairs() const {
  std::vector<std::pair<Gen, Gen>> out;
  for (Gen a = 0; a < rank(); ++a)
    for (Gen b = a + 1; b < rank(); ++b)
      if (commute(a, b)) out.emplace_back(a, b);
  return out;
}

std::uint64_t CoxeterSystem::hash() const {
  std::ostringstream os;
  os << "generators:";
  for (const auto& n : names_) os << ' ' << n;
  os << '\n';
  for (auto [a, b] : commuting_pairs()) os << "commute: " << names_[a] << ' ' << names_[b] << '\n';
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::strong_ordering Element::operator<=>(const Element& other) const {
  if (auto c = word.size() <=> other.word.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(word.begin(), word.end(), other.word.begin(),
                                                other.word.end());
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Gen g : e.word) {
    h ^= static_cast<std::size_t>(g) + 1;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void check_letter(const CoxeterSystem& sys, Gen s) {
  if (s < 0 || s >= sys.rank()) throw PreconditionError("letter out of range for this system");
}

// Appends s to a reduced word, cancelling against the last occurrence of s
// that every later letter commutes with.
void append_letter(const CoxeterSystem& sys, std::vector<Gen>& w, Gen s) {
  for (std::size_t j = w.size(); j-- > 0;) {
    if (w[j] == s) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
      return;
    }
    if (!sys.commute(w[j], s)) break;
  }
  w.push_back(s);
}

// Lexicographically least linearization of the commutation class.
std::vector<Gen> lex_least(const CoxeterSystem& sys, const std::vector<Gen>& w) {
  const std::size_t n = w.size();
  std::vector<Gen> out;
  out.reserve(n);
  std::vector<char> taken(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j)
        if (!taken[j] && !sys.commute(w[j], w[i])) front = false;
      if (front && (best == n || w[i] < w[best])) best = i;
    }
    taken[best] = 1;
    out.push_back(w[best]);
  }
  return out;
}

}  // namespace

Element normal_form(const CoxeterSystem& sys, std::span<const Gen> letters) {
  std::vector<Gen> w;
  w.reserve(letters.size());
  for (Gen s : letters) {
    check_letter(sys, s);
    append_letter(sys, w, s);
  }
  return Element{lex_least(sys, w)};
}

Element parse_element(const CoxeterSystem& sys, std::string_view text) {
  std::vector<Gen> letters;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token != "1" && token != "e") letters.push_back(sys.index(token));
    token.clear();
  };
  for (char c : text) {
    if (c == '.' || c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token.push_back(c);
  }
  flush();
  return normal_form(sys, letters);
}

std::string format_element(const CoxeterSystem& sys, const Element& e) {
  if (e.word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < e.word.size(); ++i) {
    if (i) out.push_back('.');
    out += sys.name(e.word[i]);
  }
  return out;
}

Element multiply(const CoxeterSystem& sys, const Element& a, const Element& b) {
  std::vector<Gen> w = a.word;
  for (Gen s : w) check_letter(sys, s);
  for (Gen s : b.word) {
    check_letter(sys, s);
    append_letter(sys, w, s);
  }
  return Element{lex_least(sys, w)};
}

Element multiply(const CoxeterSystem& sys, const Element& a, Gen s) {
  check_letter(sys, s);
  std::vector<Gen> w = a.word;
  append_letter(sys, w, s);
  return Element{lex_least(sys, w)};
}

Element inverse(const CoxeterSystem& sys, const Element& a) {
  std::vector<Gen> w(a.word.rbegin(), a.word.rend());
  for (Gen s : w) check_letter(sys, s);
  return Element{lex_least(sys, w)};
}

int dist(const CoxeterSystem& sys, const Element& a, const Element& b) {
  return multiply(sys, inverse(sys, a), b).length();
}

GenSet descent_set(const CoxeterSystem& sys, const Element& w) {
  GenSet out = 0;
  const std::size_t n = w.word.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool last = true;
    for (std::size_t j = i + 1; j < n && last; ++j)
      if (!sys.commute(w.word[i], w.word[j])) last = false;
    if (last) out |= bit(w.word[i]);
  }
  return out;
}

Element longest_element(const CoxeterSystem& sys, GenSet spherical) {
  if (!sys.is_spherical(spherical)) throw PreconditionError("subset is not spherical");
  const auto gens = members(spherical);
  return normal_form(sys, gens);
}

Element coset_minimum(const CoxeterSystem& sys, Element g, GenSet types) {
  for (;;) {
    const GenSet down = descent_set(sys, g) & types;
    if (down == 0) return g;
    g = multiply(sys, g, std::countr_zero(down));
  }
}

bool in_parabolic(const Element& e, GenSet types) {
  return std::all_of(e.word.begin(), e.word.end(), [&](Gen s) { return has(types, s); });
}

std::vector<Element> enumerate_ball(const CoxeterSystem& sys, int k, std::size_t cap) {
  if (k < 0) throw PreconditionError("radius must be non-negative");
  if (cap == 0) cap = resource_cap();
  std::vector<Element> out{Element{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= k; ++len) {
    const std::size_t level_end = out.size();
    std::vector<Element> next;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const GenSet in = descent_set(sys, out[i]);
      for (Gen s = 0; s < sys.rank(); ++s)
        if (!has(in, s)) next.push_back(multiply(sys, out[i], s));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (out.size() + next.size() > cap)
      throw CapExceeded("ball of radius " + std::to_string(k) + " exceeds the cap of " +
                        std::to_string(cap) + " elements");
    level_begin = level_end;
    out.insert(out.end(), std::make_move_iterator(next.begin()), std::make_move_iterator(next.end()));
  }
  return out;
}

WordBall::WordBall(const CoxeterSystem& sys, int radius, std::size_t cap)
    : radius_(radius), stride_(static_cast<std::size_t>(sys.rank())), elements_(enumerate_ball(sys, radius, cap)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<int>(i));
  right_.assign(elements_.size() * stride_, -1);
  descent_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    descent_[i] = descent_set(sys, elements_[i]);
    for (Gen s = 0; s < sys.rank(); ++s)
      right_[i * stride_ + static_cast<std::size_t>(s)] = find(multiply(sys, elements_[i], s));
  }
}

int WordBall::find(const Element& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

bool property_pm1_check(const CoxeterSystem& sys, const Element& a, const Element& b, Gen s) {
  const int d = dist(sys, a, b);
  const Element as = multiply(sys, a, s);
  const Element bs = multiply(sys, b, s);
  return std::abs(dist(sys, as, b) - d) == 1 && std::abs(dist(sys, a, bs) - d) == 1;
}

bool property_R_check(const CoxeterSystem& sys, const Element& r, Gen t, Gen t2, const Element& x) {
  if (t == t2 || !sys.commute(t, t2))
    throw PreconditionError("property (R) needs two distinct commuting generators");
  // Residue members in square order: r, rt, rtt', rt'. Opposite corners are
  // the non-adjacent pairs {0,2} and {1,3}.
  const Element rt = multiply(sys, r, t);
  const Element corner[4] = {r, rt, multiply(sys, rt, t2), multiply(sys, r, t2)};
  int d[4];
  for (int i = 0; i < 4; ++i) d[i] = dist(sys, x, corner[i]);
  const int lo = *std::min_element(d, d + 4);
  int count[3] = {0, 0, 0};
  for (int v : d) {
    if (v - lo > 2) return false;
    ++count[v - lo];
  }
  if (count[0] != 1 || count[1] != 2 || count[2] != 1) return false;
  return (d[0] == lo + 1 && d[2] == lo + 1) || (d[1] == lo + 1 && d[3] == lo + 1);
}

}  // namespace rab
