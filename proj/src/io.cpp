#include "rab/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rab/error.hpp"

namespace rab {
namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    out.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

int to_int(const std::string& s, int line) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return v;
}

std::uint64_t to_hash(const std::string& s, int line) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || p != s.data() + s.size() || s.size() != 16)
    throw ParseError(line, "expected a 16-digit hex hash, got '" + s + "'");
  return v;
}

void check_name(const std::string& n, int line) {
  if (n == "1" || n == "e" || n.find_first_of(".,:#") != std::string::npos)
    throw ParseError(line, "invalid generator name '" + n + "'");
}

}  // namespace

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

CoxeterSystem parse_racs(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, Gen> index;
  std::vector<std::pair<Gen, Gen>> pairs;
  std::set<std::pair<Gen, Gen>> seen;
  bool have_generators = false;
  int number = 0;
  for (auto raw : lines_of(text)) {
    ++number;
    const auto hash = raw.find('#');
    const auto words = split(raw.substr(0, hash));
    if (words.empty()) continue;
    if (words[0] == "generators:") {
      if (have_generators) throw ParseError(number, "second generators line");
      have_generators = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        check_name(words[i], number);
        if (!index.emplace(words[i], static_cast<Gen>(names.size())).second)
          throw ParseError(number, "duplicate generator '" + words[i] + "'");
        names.push_back(words[i]);
      }
      if (names.empty()) throw ParseError(number, "no generators");
    } else if (words[0] == "commute:") {
      if (!have_generators) throw ParseError(number, "commute line before the generators line");
      if (words.size() != 3) throw ParseError(number, "commute takes exactly two generators");
      Gen g[2];
      for (int i = 0; i < 2; ++i) {
        const auto it = index.find(words[static_cast<std::size_t>(i + 1)]);
        if (it == index.end()) throw ParseError(number, "unknown generator '" + words[static_cast<std::size_t>(i + 1)] + "'");
        g[i] = it->second;
      }
      if (g[0] == g[1]) throw ParseError(number, "a generator cannot commute with itself");
      if (!seen.emplace(std::min(g[0], g[1]), std::max(g[0], g[1])).second)
        throw ParseError(number, "duplicate commute declaration");
      pairs.emplace_back(g[0], g[1]);
    } else {
      throw ParseError(number, "unrecognized line '" + words[0] + "'");
    }
  }
  if (!have_generators) throw ParseError(0, "missing generators line");
  return CoxeterSystem(std::move(names), pairs);
}

std::string format_racs(const CoxeterSystem& sys) {
  std::ostringstream os;
  os << "generators:";
  for (const auto& n : sys.names()) os << ' ' << n;
  os << '\n';
  for (auto [a, b] : sys.commuting_pairs()) os << "commute: " << sys.name(a) << ' ' << sys.name(b) << '\n';
  return os.str();
}

std::string format_bldg(const BuildingBall& b) {
  const auto& sys = b.system();
  std::ostringstream os;
  os << "system " << hex64(sys.hash()) << '\n';
  os << "generators";
  for (const auto& n : sys.names()) os << ' ' << n;
  os << '\n';
  for (auto [a, c] : sys.commuting_pairs()) os << "commute " << sys.name(a) << ' ' << sys.name(c) << '\n';
  os << "radius " << b.radius() << '\n';
  os << "q";
  if (b.q().empty()) os << " -";
  for (int v : b.q()) os << ' ' << v;
  os << '\n';
  os << "chambers " << b.size() << '\n';
  for (int x = 0; x < b.size(); ++x) os << x << ' ' << format_element(sys, b.fold(x)) << '\n';
  os << "panels\n";
  for (Gen s = 0; s < sys.rank(); ++s)
    for (const auto& p : b.chambers().sorted_panels(s)) {
      os << sys.name(s) << ':';
      for (int x : p) os << ' ' << x;
      os << '\n';
    }
  return os.str();
}

BuildingBall parse_bldg(std::string_view text) {
  const auto lines = lines_of(text);
  std::size_t at = 0;
  auto next = [&](const char* key) {
    while (at < lines.size() && split(lines[at]).empty()) ++at;
    if (at >= lines.size()) throw ParseError(static_cast<int>(at), std::string("missing '") + key + "' line");
    auto words = split(lines[at++]);
    if (words[0] != key) throw ParseError(static_cast<int>(at), std::string("expected '") + key + "', got '" + words[0] + "'");
    return words;
  };
  const auto system_line = next("system");
  if (system_line.size() != 2) throw ParseError(static_cast<int>(at), "system takes one hash");
  const std::uint64_t hash = to_hash(system_line[1], static_cast<int>(at));
  auto gens = next("generators");
  gens.erase(gens.begin());
  std::map<std::string, Gen> index;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check_name(gens[i], static_cast<int>(at));
    if (!index.emplace(gens[i], static_cast<Gen>(i)).second)
      throw ParseError(static_cast<int>(at), "duplicate generator '" + gens[i] + "'");
  }
  std::vector<std::pair<Gen, Gen>> pairs;
  while (at < lines.size()) {
    const auto words = split(lines[at]);
    if (words.empty() || words[0] != "commute") break;
    ++at;
    if (words.size() != 3 || !index.count(words[1]) || !index.count(words[2]))
      throw ParseError(static_cast<int>(at), "bad commute line");
    pairs.emplace_back(index[words[1]], index[words[2]]);
  }
  CoxeterSystem sys = [&] {
    try {
      return CoxeterSystem(gens, pairs);
    } catch (const PreconditionError& e) {
      throw ParseError(static_cast<int>(at), e.what());
    }
  }();
  if (sys.hash() != hash) throw ParseError(1, "system hash does not match the generators and commute lines");

  const auto radius_line = next("radius");
  if (radius_line.size() != 2) throw ParseError(static_cast<int>(at), "radius takes one value");
  const int radius = to_int(radius_line[1], static_cast<int>(at));
  if (radius < 0) throw ParseError(static_cast<int>(at), "negative radius");
  const auto q_line = next("q");
  std::vector<int> q;
  if (!(q_line.size() == 2 && q_line[1] == "-")) {
    for (std::size_t i = 1; i < q_line.size(); ++i) q.push_back(to_int(q_line[i], static_cast<int>(at)));
    if (static_cast<int>(q.size()) != sys.rank()) throw ParseError(static_cast<int>(at), "q needs one value per generator");
  }
  const auto count_line = next("chambers");
  if (count_line.size() != 2) throw ParseError(static_cast<int>(at), "chambers takes one count");
  const int count = to_int(count_line[1], static_cast<int>(at));
  if (count < 1) throw ParseError(static_cast<int>(at), "a ball has at least one chamber");

  BuildingBall b(sys, radius, q);
  std::vector<int> fold;
  for (int x = 0; x < count; ++x) {
    if (at >= lines.size()) throw ParseError(static_cast<int>(at), "missing chamber lines");
    const auto words = split(lines[at++]);
    const int line = static_cast<int>(at);
    if (words.size() != 2 || to_int(words[0], line) != x)
      throw ParseError(line, "expected chamber line for id " + std::to_string(x));
    Element e;
    try {
      e = parse_element(sys, words[1]);
    } catch (const Error& err) {
      throw ParseError(line, err.what());
    }
    if (format_element(sys, e) != words[1]) throw ParseError(line, "fold word is not in normal form");
    const int i = b.words().find(e);
    if (i < 0) throw ParseError(line, "fold word is longer than the radius");
    fold.push_back(i);
  }
  next("panels");
  std::vector<std::vector<std::vector<int>>> panels(static_cast<std::size_t>(sys.rank()));
  for (; at < lines.size(); ++at) {
    auto words = split(lines[at]);
    const int line = static_cast<int>(at + 1);
    if (words.empty()) continue;
    if (words[0].empty() || words[0].back() != ':') throw ParseError(line, "expected 's: ids'");
    words[0].pop_back();
    const auto it = index.find(words[0]);
    if (it == index.end()) throw ParseError(line, "unknown generator '" + words[0] + "'");
    std::vector<int> members;
    for (std::size_t i = 1; i < words.size(); ++i) members.push_back(to_int(words[i], line));
    panels[static_cast<std::size_t>(it->second)].push_back(std::move(members));
  }
  b.set_structure(ChamberSystem::from_panels(count, panels), std::move(fold));
  return b;
}

std::string format_map(std::uint64_t source, std::uint64_t target, const std::vector<int>& map) {
  std::ostringstream os;
  os << hex64(source) << ' ' << hex64(target) << '\n';
  for (std::size_t x = 0; x < map.size(); ++x) os << x << " -> " << map[x] << '\n';
  return os.str();
}

ChamberMapFile parse_map(std::string_view text) {
  ChamberMapFile out;
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError(1, "empty map file");
  const auto head = split(lines[0]);
  if (head.size() != 2) throw ParseError(1, "expected '<source-hash> <target-hash>'");
  out.source = to_hash(head[0], 1);
  out.target = to_hash(head[1], 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto words = split(lines[i]);
    const int line = static_cast<int>(i + 1);
    if (words.empty()) continue;
    if (words.size() != 3 || words[1] != "->") throw ParseError(line, "expected 'x -> y'");
    if (to_int(words[0], line) != static_cast<int>(out.map.size())) throw ParseError(line, "chamber ids out of order");
    out.map.push_back(to_int(words[2], line));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace rab
