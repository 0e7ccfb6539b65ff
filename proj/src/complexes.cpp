#include "rab/complexes.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "rab/error.hpp"

namespace rab {

int SimplicialComplex::dimension() const {
  return simplices.empty() ? -1 : static_cast<int>(simplices.back().size()) - 1;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : simplices) ++out[s.size() - 1];
  return out;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& s : simplices) chi += s.size() % 2 == 1 ? 1 : -1;
  return chi;
}

namespace {

bool simplex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(std::vector<std::string> labels,
                                                  const std::vector<std::vector<int>>& faces) {
  std::set<std::vector<int>> all;
  for (auto face : faces) {
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    if (face.size() > 30) throw PreconditionError("simplex too large");
    const unsigned n = static_cast<unsigned>(face.size());
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
      std::vector<int> sub;
      for (unsigned i = 0; i < n; ++i)
        if (mask >> i & 1U) sub.push_back(face[i]);
      all.insert(std::move(sub));
    }
  }
  SimplicialComplex c;
  c.labels = std::move(labels);
  c.simplices.assign(all.begin(), all.end());
  std::sort(c.simplices.begin(), c.simplices.end(), simplex_less);
  return c;
}

namespace {

// Chains of residues Res(x, T0) < ... < Res(x, Tm) through a common chamber.
// `complete` says whether Res(x, T) is fully present, `key` names its vertex.
SimplicialComplex realize_residues(const ChamberSystem& cs, const std::vector<GenSet>& types,
                                   const std::function<bool(int, GenSet)>& complete,
                                   const std::function<int(int, GenSet)>& key,
                                   const std::function<std::string(GenSet, int)>& label) {
  std::map<std::pair<GenSet, int>, int> vertex;
  for (int x = 0; x < cs.size(); ++x)
    for (GenSet t : types)
      if (complete(x, t)) vertex.emplace(std::make_pair(t, key(x, t)), -1);
  // Vertices ordered by (|T|, T, key).
  std::vector<std::pair<GenSet, int>> keys;
  for (const auto& [k, v] : vertex) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (popcount(a.first) != popcount(b.first)) return popcount(a.first) < popcount(b.first);
    return a < b;
  });
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    vertex[keys[i]] = static_cast<int>(i);
    labels.push_back(label(keys[i].first, keys[i].second));
  }
  std::vector<std::vector<int>> faces;
  for (int x = 0; x < cs.size(); ++x) {
    std::vector<GenSet> present;
    for (GenSet t : types)
      if (complete(x, t)) present.push_back(t);
    for (GenSet top : present) {
      // Maximal chains end at a maximal present type; enumerate every
      // ordering of adding its members.
      bool maximal = true;
      for (GenSet t : present)
        if (t != top && (t & top) == top) maximal = false;
      if (!maximal) continue;
      auto gens = members(top);
      do {
        std::vector<int> face{vertex.at({0, key(x, 0)})};
        GenSet t = 0;
        for (Gen g : gens) {
          t |= bit(g);
          face.push_back(vertex.at({t, key(x, t)}));
        }
        faces.push_back(std::move(face));
      } while (std::next_permutation(gens.begin(), gens.end()));
    }
  }
  return SimplicialComplex::from_maximal(std::move(labels), faces);
}

std::string type_label(const std::vector<std::string>& names, GenSet t, int key) {
  std::string out = std::to_string(key);
  if (t == 0) return out;
  out += '/';
  bool first = true;
  for (Gen g : members(t)) {
    if (!first) out += '.';
    out += names[static_cast<std::size_t>(g)];
    first = false;
  }
  return out;
}

}  // namespace

SimplicialComplex realize(const BuildingBall& b) {
  return realize_residues(
      b.chambers(), b.system().spherical_subsets(), [&](int x, GenSet t) { return b.residue_complete(x, t); },
      [&](int x, GenSet t) { return b.residue_minimum(x, t); },
      [&](GenSet t, int k) { return type_label(b.system().names(), t, k); });
}

SimplicialComplex realize(const FiniteBuilding& b) {
  const int n = b.rank();
  std::vector<GenSet> types;
  for (GenSet t = 0; t < (GenSet{1} << n); ++t) types.push_back(t);
  std::stable_sort(types.begin(), types.end(), [](GenSet a, GenSet c) { return popcount(a) < popcount(c); });
  std::map<std::pair<int, GenSet>, int> least;
  auto key = [&](int x, GenSet t) {
    auto it = least.find({x, t});
    if (it != least.end()) return it->second;
    const int k = b.chambers.residue(x, t).front();
    least.emplace(std::make_pair(x, t), k);
    return k;
  };
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
  return realize_residues(
      b.chambers, types, [](int, GenSet) { return true; }, key,
      [&](GenSet t, int k) { return type_label(names, t, k); });
}

namespace {

// Join of the coordinate sets of p, leaving out coordinate skip[i] of factor i.
SimplicialComplex join_of_factors(const ProductBuilding& p, const std::vector<int>& skip) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> factor;
  for (int i = 0; i < p.rank(); ++i) {
    factor.emplace_back();
    for (int v = 0; v < p.sizes()[static_cast<std::size_t>(i)]; ++v) {
      if (v == skip[static_cast<std::size_t>(i)]) continue;
      factor.back().push_back(static_cast<int>(labels.size()));
      labels.push_back(std::to_string(i) + ":" + std::to_string(v));
    }
  }
  // Maximal simplices pick one vertex from every non-empty factor.
  std::vector<std::vector<int>> faces{{}};
  for (const auto& f : factor) {
    if (f.empty()) continue;
    std::vector<std::vector<int>> next;
    for (const auto& partial : faces)
      for (int v : f) {
        auto grown = partial;
        grown.push_back(v);
        next.push_back(std::move(grown));
      }
    faces = std::move(next);
  }
  if (faces.size() == 1 && faces[0].empty()) faces.clear();
  return SimplicialComplex::from_maximal(std::move(labels), faces);
}

}  // namespace

SimplicialComplex antipodal_subcomplex(const ProductBuilding& p, int base) {
  if (base < 0 || base >= p.size()) throw PreconditionError("base chamber out of range");
  return join_of_factors(p, p.coords(base));
}

SimplicialComplex join_complex(const ProductBuilding& p) {
  return join_of_factors(p, std::vector<int>(static_cast<std::size_t>(p.rank()), -1));
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw PreconditionError("matrix shapes do not match");
  IntMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const auto v = a(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j) out(i, j) += v * b(k, j);
    }
  return out;
}

namespace {

struct Overflow {};

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t p = 0;
  std::int64_t r = 0;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
BigInt checked_sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

std::int64_t magnitude(std::int64_t v) {
  if (v == INT64_MIN) throw Overflow{};
  return v < 0 ? -v : v;
}
BigInt magnitude(const BigInt& v) { return abs(v); }

template <class T>
std::vector<BigInt> smith_diagonal(int rows, int cols, std::vector<T> a) {
  auto at = [&](int i, int j) -> T& { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; };
  auto swap_rows = [&](int i, int j) {
    if (i != j)
      for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i != j)
      for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  };
  std::vector<BigInt> diag;
  const int limit = std::min(rows, cols);
  for (int t = 0; t < limit; ++t) {
    // Pivot: least non-zero magnitude in the remaining block.
    int pi = -1, pj = -1;
    T best{};
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (at(i, j) != 0 && (pi < 0 || magnitude(at(i, j)) < best)) {
          best = magnitude(at(i, j));
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool clear = true;
      for (int i = t + 1; i < rows; ++i) {
        if (at(i, t) == 0) continue;
        const T q = at(i, t) / at(t, t);
        for (int c = t; c < cols; ++c) at(i, c) = checked_sub_mul(at(i, c), q, at(t, c));
        if (at(i, t) != 0) clear = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0) continue;
        const T q = at(t, j) / at(t, t);
        for (int r = t; r < rows; ++r) at(r, j) = checked_sub_mul(at(r, j), q, at(r, t));
        if (at(t, j) != 0) clear = false;
      }
      if (!clear) {
        int bi = t, bj = t;
        T m = magnitude(at(t, t));
        for (int i = t + 1; i < rows; ++i)
          if (at(i, t) != 0 && magnitude(at(i, t)) < m) m = magnitude(at(i, t)), bi = i, bj = t;
        for (int j = t + 1; j < cols; ++j)
          if (at(t, j) != 0 && magnitude(at(t, j)) < m) m = magnitude(at(t, j)), bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (at(i, j) % at(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int c = t; c < cols; ++c) at(t, c) = checked_sub_mul(at(t, c), T(-1), at(bad, c));
    }
    diag.emplace_back(magnitude(at(t, t)));
  }
  return diag;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  try {
    return {smith_diagonal<std::int64_t>(m.rows, m.cols, m.data)};
  } catch (const Overflow&) {
    std::vector<BigInt> wide(m.data.begin(), m.data.end());
    return {smith_diagonal<BigInt>(m.rows, m.cols, std::move(wide))};
  }
}

ChainComplex chain_complex(const SimplicialComplex& c) {
  ChainComplex out;
  const int d = c.dimension();
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(d + 1));
  for (const auto& s : c.simplices) {
    auto& level = index[s.size() - 1];
    level.emplace(s, static_cast<int>(level.size()));
  }
  for (int j = 0; j <= d; ++j) {
    const auto& cols = index[static_cast<std::size_t>(j)];
    if (j == 0) {
      IntMatrix aug(1, static_cast<int>(cols.size()));
      for (int k = 0; k < aug.cols; ++k) aug(0, k) = 1;
      out.boundary.push_back(std::move(aug));
      continue;
    }
    const auto& rows = index[static_cast<std::size_t>(j - 1)];
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (const auto& [s, col] : cols)
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        m(rows.at(face), col) = i % 2 == 0 ? 1 : -1;
      }
    out.boundary.push_back(std::move(m));
  }
  return out;
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& c) {
  const int d = c.dimension();
  const ChainComplex cc = chain_complex(c);
  std::vector<SmithForm> snf;
  for (const auto& m : cc.boundary) snf.push_back(smith_normal_form(m));
  std::vector<std::size_t> count{1};
  for (auto n : c.face_counts()) count.push_back(n);
  auto rank_of = [&](int j) { return j >= 0 && j <= d ? snf[static_cast<std::size_t>(j)].rank() : 0; };

  std::vector<HomologyGroup> out;
  for (int j = -1; j <= d; ++j) {
    HomologyGroup h;
    h.dimension = j;
    h.rank = static_cast<int>(count[static_cast<std::size_t>(j + 1)]) - rank_of(j) - rank_of(j + 1);
    if (j + 1 <= d)
      for (const auto& v : snf[static_cast<std::size_t>(j + 1)].diagonal)
        if (v > 1) h.torsion.push_back(v);
    out.push_back(std::move(h));
  }
  return out;
}

void write_complex(std::ostream& out, const SimplicialComplex& c) {
  for (int v = 0; v < c.vertex_count(); ++v)
    out << "# vertex " << v << ' ' << c.labels[static_cast<std::size_t>(v)] << '\n';
  for (const auto& s : c.simplices) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

SimplicialComplex read_complex(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> faces;
  std::string line;
  int number = 0;
  int max_vertex = -1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, word;
      int id = -1;
      ls >> hash >> word;
      if (word != "vertex") continue;
      std::string label;
      if (!(ls >> id >> label) || id != static_cast<int>(labels.size()))
        throw ParseError(number, "vertex lines must be numbered 0, 1, 2, ...");
      labels.push_back(label);
      continue;
    }
    std::vector<int> face;
    std::string token;
    while (ls >> token) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size() || v < 0) throw std::invalid_argument(token);
        face.push_back(v);
        max_vertex = std::max(max_vertex, v);
      } catch (const std::exception&) {
        throw ParseError(number, "bad vertex id '" + token + "'");
      }
    }
    faces.push_back(std::move(face));
  }
  while (static_cast<int>(labels.size()) <= max_vertex) labels.push_back(std::to_string(labels.size()));
  return SimplicialComplex::from_maximal(std::move(labels), faces);
}

}  // namespace rab
