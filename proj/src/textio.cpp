#include "mero/textio.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mero {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_uint(const std::string& text, unsigned& out) {
  if (text.empty() || text.size() > 9) return false;
  unsigned v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return false;
    v = v * 10 + static_cast<unsigned>(ch - '0');
  }
  out = v;
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

// Significant line, or nothing at end of input; skips blanks and # comments.
std::optional<std::string> next_line(std::istream& in, int& lineno) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    return text;
  }
  return std::nullopt;
}

unsigned parse_size_line(const std::string& text, const char* key, int lineno) {
  const std::string prefix = std::string(key) + "=";
  if (text.rfind(prefix, 0) != 0)
    throw ParseError(lineno, "expected " + prefix + "<int> line");
  unsigned value = 0;
  if (!parse_uint(trim(text.substr(prefix.size())), value))
    throw ParseError(lineno, "malformed " + prefix + " line");
  if (value < 1) throw ParseError(lineno, prefix.substr(0, 1) + " must be at least 1");
  if (value > kMaxGroundSetSize)
    throw ParseError(lineno, prefix.substr(0, 1) + " exceeds the supported maximum " +
                                 std::to_string(kMaxGroundSetSize));
  return value;
}

std::vector<Subset> parse_blocks(const std::string& payload, GroundSet ground, int lineno) {
  std::vector<Subset> blocks;
  for (const std::string& raw_block : split(payload, ';')) {
    const std::string block = trim(raw_block);
    if (block.empty()) throw ParseError(lineno, "empty block");
    std::uint32_t bits = 0;
    long last = -1;
    for (const std::string& raw_element : split(block, ',')) {
      unsigned e = 0;
      if (!parse_uint(trim(raw_element), e))
        throw ParseError(lineno, "malformed element index");
      if (e >= ground.size()) throw ParseError(lineno, "element index out of range");
      if (static_cast<long>(e) <= last)
        throw ParseError(lineno, "elements must be strictly ascending");
      last = static_cast<long>(e);
      bits |= 1u << e;
    }
    blocks.emplace_back(ground, bits);
  }
  return blocks;
}

}  // namespace

std::string format_subset(const Subset& set) {
  std::string out;
  for (unsigned e : set.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

std::string format_cover(const Cover& cover) {
  std::string out;
  for (const Subset& b : cover.blocks()) {
    if (!out.empty()) out += ';';
    out += format_subset(b);
  }
  return out;
}

std::string format_basis(const MerotopicStructure& structure) {
  std::string out;
  for (const Cover& c : structure.basis()) {
    if (!out.empty()) out += " | ";
    out += format_cover(c);
  }
  return out;
}

MerotopicStructure parse_structure(std::istream& in) {
  int lineno = 0;
  const auto first = next_line(in, lineno);
  if (!first) throw ParseError(lineno + 1, "missing n= line");
  const GroundSet ground(parse_size_line(*first, "n", lineno));
  std::vector<Cover> covers;
  while (const auto line = next_line(in, lineno)) {
    if (line->rfind("cover:", 0) != 0) throw ParseError(lineno, "unrecognized line");
    covers.push_back(canonicalize(parse_blocks(line->substr(6), ground, lineno), ground));
  }
  return generate(ground, covers);
}

MerotopicStructure parse_structure(const std::string& text) {
  std::istringstream in(text);
  return parse_structure(in);
}

std::string serialize_structure(const MerotopicStructure& structure) {
  std::string out = "n=" + std::to_string(structure.ground().size()) + "\n";
  for (const Cover& c : structure.basis()) out += "cover: " + format_cover(c) + "\n";
  return out;
}

SetMap parse_map(std::istream& in) {
  int lineno = 0;
  const auto n_line = next_line(in, lineno);
  if (!n_line) throw ParseError(lineno + 1, "missing n= line");
  const GroundSet domain(parse_size_line(*n_line, "n", lineno));

  const auto m_line = next_line(in, lineno);
  if (!m_line) throw ParseError(lineno + 1, "missing m= line");
  const GroundSet codomain(parse_size_line(*m_line, "m", lineno));

  const auto map_line = next_line(in, lineno);
  if (!map_line) throw ParseError(lineno + 1, "missing map: line");
  if (map_line->rfind("map:", 0) != 0) throw ParseError(lineno, "expected map: line");
  const std::vector<std::string> entries = split(map_line->substr(4), ',');
  if (entries.size() != domain.size())
    throw ParseError(lineno, "map must list every domain element exactly once");
  std::vector<unsigned> images;
  images.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::vector<std::string> pair = split(trim(entries[k]), '-');
    // an entry looks like "3->1", so splitting on '-' gives ["3", ">1"]
    unsigned from = 0;
    unsigned to = 0;
    if (pair.size() != 2 || pair[1].empty() || pair[1][0] != '>' ||
        !parse_uint(trim(pair[0]), from) || !parse_uint(trim(pair[1].substr(1)), to))
      throw ParseError(lineno, "malformed map entry");
    if (from != k) throw ParseError(lineno, "map entries must cover 0..n-1 in order");
    if (to >= codomain.size()) throw ParseError(lineno, "image out of range");
    images.push_back(to);
  }

  if (const auto extra = next_line(in, lineno)) throw ParseError(lineno, "unrecognized line");
  return SetMap(domain, codomain, std::move(images));
}

SetMap parse_map(const std::string& text) {
  std::istringstream in(text);
  return parse_map(in);
}

std::string serialize_map(const SetMap& map) {
  std::string out = "n=" + std::to_string(map.domain().size()) + "\n";
  out += "m=" + std::to_string(map.codomain().size()) + "\n";
  out += "map: ";
  for (unsigned x = 0; x < map.domain().size(); ++x) {
    if (x) out += ',';
    out += std::to_string(x) + "->" + std::to_string(map.apply(x));
  }
  out += "\n";
  return out;
}

}  // namespace mero
