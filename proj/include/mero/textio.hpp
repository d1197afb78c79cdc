#pragma once

#include <iosfwd>
#include <string>

#include "mero/structures.hpp"

namespace mero {

// Text formats.
//
// Structure file: a header line "n=<int>" followed by one line per basis
// cover, "cover: 0,1;1,2" — elements comma-separated within a block, blocks
// separated by ';'. Map file: "n=<int>", "m=<int>", then a single line
// "map: 0-><i>,1-><i>,...". Blank lines and "#" comments are accepted on
// input and never produced on output. Parsers throw ParseError with a 1-based
// line number.

std::string format_subset(const Subset& set);
std::string format_cover(const Cover& cover);

// Basis covers joined by " | "; a one-line rendering for diagnostics and the
// enumerate/counterexample commands.
std::string format_basis(const MerotopicStructure& structure);

MerotopicStructure parse_structure(std::istream& in);
MerotopicStructure parse_structure(const std::string& text);
std::string serialize_structure(const MerotopicStructure& structure);

SetMap parse_map(std::istream& in);
SetMap parse_map(const std::string& text);
std::string serialize_map(const SetMap& map);

}  // namespace mero
