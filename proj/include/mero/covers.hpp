#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mero/error.hpp"

namespace mero {

// Subsets are fixed-width bitmasks, so ground sets are capped well below the
// mask width. Exhaustive operations gate themselves much lower.
inline constexpr unsigned kMaxGroundSetSize = 30;

// A finite ground set; its elements are the indices 0..size-1.
class GroundSet {
 public:
  explicit GroundSet(unsigned size);

  unsigned size() const { return size_; }
  std::uint32_t full_mask() const { return (1u << size_) - 1u; }

  friend bool operator==(GroundSet a, GroundSet b) { return a.size_ == b.size_; }
  friend bool operator!=(GroundSet a, GroundSet b) { return !(a == b); }

 private:
  unsigned size_;
};

// A subset of a ground set.
class Subset {
 public:
  Subset(GroundSet ground, std::uint32_t bits);

  static Subset empty(GroundSet ground) { return Subset(ground, 0); }
  static Subset full(GroundSet ground) { return Subset(ground, ground.full_mask()); }
  static Subset of(GroundSet ground, std::initializer_list<unsigned> elements);

  GroundSet ground() const { return ground_; }
  std::uint32_t bits() const { return bits_; }
  bool is_empty() const { return bits_ == 0; }
  unsigned count() const;
  bool contains(unsigned element) const { return (bits_ >> element) & 1u; }
  bool subset_of(const Subset& other) const;
  Subset complement() const { return Subset(ground_, ground_.full_mask() & ~bits_); }
  std::vector<unsigned> elements() const;

  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator|(const Subset& a, const Subset& b);
  friend bool operator==(const Subset& a, const Subset& b) {
    return a.ground_ == b.ground_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

  // Canonical order: cardinality first, then ascending-element lexicographic.
  bool operator<(const Subset& other) const;

 private:
  GroundSet ground_;
  std::uint32_t bits_;
};

// A covering of the ground set in canonical form: a non-empty antichain of
// non-empty subsets whose union is the whole set, with blocks sorted in
// canonical subset order. The constructor rejects anything else; build from
// raw families with canonicalize().
class Cover {
 public:
  Cover(GroundSet ground, std::vector<Subset> blocks);

  GroundSet ground() const { return ground_; }
  const std::vector<Subset>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const Cover& a, const Cover& b) { return !(a == b); }

  // Canonical order: block count first, then blockwise subset order.
  bool operator<(const Cover& other) const;

 private:
  GroundSet ground_;
  std::vector<Subset> blocks_;
};

// True iff the family is non-empty and its union is the whole ground set.
// Empty members are permitted; they never contribute to the union.
bool is_cover(const std::vector<Subset>& raw, GroundSet ground);

// Drops empty blocks and blocks contained in a distinct block. The result is
// refinement-equivalent to the input. Throws NotACover if the input does not
// cover the ground set.
Cover canonicalize(const std::vector<Subset>& raw, GroundSet ground);

// True iff every block of `finer` lies inside some block of `coarser`.
bool refines(const Cover& finer, const Cover& coarser);

// Pairwise intersections, canonicalized: the meet in the refinement order.
Cover wedge(const Cover& a, const Cover& b);

// The refinement-minimal members of a family, deduplicated and sorted.
std::vector<Cover> minimal_antichain(const std::vector<Cover>& covers);

// A total map between two ground sets.
class SetMap {
 public:
  SetMap(GroundSet domain, GroundSet codomain, std::vector<unsigned> images);

  static SetMap identity(GroundSet ground);
  static SetMap constant(GroundSet domain, GroundSet codomain, unsigned value);

  GroundSet domain() const { return domain_; }
  GroundSet codomain() const { return codomain_; }
  unsigned apply(unsigned element) const { return images_[element]; }
  const std::vector<unsigned>& images() const { return images_; }
  Subset preimage(const Subset& target) const;

  friend SetMap compose(const SetMap& outer, const SetMap& inner);
  friend bool operator==(const SetMap& a, const SetMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.images_ == b.images_;
  }

 private:
  GroundSet domain_;
  GroundSet codomain_;
  std::vector<unsigned> images_;
};

SetMap compose(const SetMap& outer, const SetMap& inner);

// Blockwise preimages, canonicalized. Always a cover of the map's domain.
Cover preimage_cover(const SetMap& map, const Cover& cover);

}  // namespace mero
