#pragma once

// Text formats: .racs (Coxeter systems), .bldg (building balls) and
// chamber-map files.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rab/building.hpp"
#include "rab/coxeter.hpp"

namespace rab {

std::uint64_t fnv1a(std::string_view text);
std::string hex64(std::uint64_t v);

// generators: a b c
// commute: a b
// Lines may carry '#' comments. Throws ParseError with the line number.
CoxeterSystem parse_racs(std::string_view text);
std::string format_racs(const CoxeterSystem& sys);

// system <hash>, generators, commute lines, radius, q, chambers N, then one
// "id fold-word" line per chamber, "panels", and one "s: ids" line per panel.
std::string format_bldg(const BuildingBall& b);
BuildingBall parse_bldg(std::string_view text);

// "<source-hash> <target-hash>" then one "x -> y" line per chamber.
std::string format_map(std::uint64_t source, std::uint64_t target, const std::vector<int>& map);
struct ChamberMapFile {
  std::uint64_t source = 0;
  std::uint64_t target = 0;
  std::vector<int> map;
};
ChamberMapFile parse_map(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace rab
