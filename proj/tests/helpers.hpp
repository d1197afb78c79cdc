#pragma once

// Shared test scaffolding: terse constructors for subsets/covers/structures
// and the independent oracles the suites check against.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "mero/covers.hpp"
#include "mero/structures.hpp"

namespace testutil {

inline mero::Subset sub(mero::GroundSet g, std::initializer_list<unsigned> elements) {
  return mero::Subset::of(g, elements);
}

inline mero::Cover cov(mero::GroundSet g,
                       std::initializer_list<std::initializer_list<unsigned>> blocks) {
  std::vector<mero::Subset> bs;
  for (const auto& b : blocks) bs.push_back(mero::Subset::of(g, b));
  return mero::canonicalize(bs, g);
}

// Principal structure spanned by one cover.
inline mero::MerotopicStructure up(mero::GroundSet g,
                                   std::initializer_list<std::initializer_list<unsigned>> blocks) {
  return mero::generate(g, {cov(g, blocks)});
}

inline bool is_partition(const mero::Cover& cover) {
  std::uint32_t seen = 0;
  for (const mero::Subset& b : cover.blocks()) {
    if (seen & b.bits()) return false;
    seen |= b.bits();
  }
  return seen == cover.ground().full_mask();
}

// Partition of the ground set into the connected components of the cover's
// block-overlap graph. For a principal structure this spans its largest
// nearness substructure, which gives an enumeration-free reflection oracle.
inline mero::Cover overlap_component_partition(const mero::Cover& cover) {
  std::vector<std::uint32_t> components;
  for (const mero::Subset& b : cover.blocks()) {
    std::uint32_t current = b.bits();
    std::vector<std::uint32_t> next;
    for (std::uint32_t c : components) {
      if (c & current)
        current |= c;  // disjoint components stay disjoint after one merge pass
      else
        next.push_back(c);
    }
    next.push_back(current);
    components.swap(next);
  }
  std::vector<mero::Subset> parts;
  parts.reserve(components.size());
  for (std::uint32_t c : components) parts.emplace_back(cover.ground(), c);
  return mero::canonicalize(parts, cover.ground());
}

template <typename Rng>
mero::Cover random_cover(mero::GroundSet g, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> mask(1, g.full_mask());
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<mero::Subset> blocks;
  std::uint32_t covered = 0;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const std::uint32_t m = mask(rng);
    blocks.emplace_back(g, m);
    covered |= m;
  }
  if (covered != g.full_mask()) blocks.emplace_back(g, g.full_mask() & ~covered);
  return mero::canonicalize(blocks, g);
}

template <typename Rng>
mero::MerotopicStructure random_structure(mero::GroundSet g, Rng& rng) {
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<mero::Cover> generators;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) generators.push_back(random_cover(g, rng));
  return mero::generate(g, generators);
}

template <typename Rng>
mero::Subset random_subset(mero::GroundSet g, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> mask(0, g.full_mask());
  return mero::Subset(g, mask(rng));
}

}  // namespace testutil
