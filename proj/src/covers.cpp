#include "mero/covers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mero {

GroundSet::GroundSet(unsigned size) : size_(size) {
  if (size == 0) throw Error("ground set must have at least one element");
  if (size > kMaxGroundSetSize)
    throw GroundSetTooLarge("ground set size " + std::to_string(size) +
                            " exceeds the supported maximum " + std::to_string(kMaxGroundSetSize));
}

Subset::Subset(GroundSet ground, std::uint32_t bits) : ground_(ground), bits_(bits) {
  if (bits & ~ground.full_mask()) throw Error("subset reaches outside its ground set");
}

Subset Subset::of(GroundSet ground, std::initializer_list<unsigned> elements) {
  std::uint32_t bits = 0;
  for (unsigned e : elements) {
    if (e >= ground.size()) throw Error("element " + std::to_string(e) + " out of range");
    bits |= 1u << e;
  }
  return Subset(ground, bits);
}

unsigned Subset::count() const { return static_cast<unsigned>(std::popcount(bits_)); }

bool Subset::subset_of(const Subset& other) const {
  if (ground_ != other.ground_) throw GroundSetMismatch("subsets live on different ground sets");
  return (bits_ & ~other.bits_) == 0;
}

std::vector<unsigned> Subset::elements() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < ground_.size(); ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

Subset operator&(const Subset& a, const Subset& b) {
  if (a.ground_ != b.ground_) throw GroundSetMismatch("subsets live on different ground sets");
  return Subset(a.ground_, a.bits_ & b.bits_);
}

Subset operator|(const Subset& a, const Subset& b) {
  if (a.ground_ != b.ground_) throw GroundSetMismatch("subsets live on different ground sets");
  return Subset(a.ground_, a.bits_ | b.bits_);
}

bool Subset::operator<(const Subset& other) const {
  const unsigned ca = count();
  const unsigned cb = other.count();
  if (ca != cb) return ca < cb;
  // Equal sizes: ascending-element lists differ first at the smallest element
  // of the symmetric difference, and the list owning it comes first.
  const std::uint32_t diff = bits_ ^ other.bits_;
  return (bits_ & (diff & (~diff + 1u))) != 0;
}

Cover::Cover(GroundSet ground, std::vector<Subset> blocks)
    : ground_(ground), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw NotACover("a cover needs at least one block");
  std::uint32_t covered = 0;
  for (const Subset& b : blocks_) {
    if (b.ground() != ground_) throw GroundSetMismatch("block over the wrong ground set");
    if (b.is_empty()) throw NotACover("canonical covers have no empty blocks");
    covered |= b.bits();
  }
  if (covered != ground_.full_mask()) throw NotACover("blocks do not cover the ground set");
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::size_t j = 0; j < blocks_.size(); ++j)
      if (i != j && blocks_[i].subset_of(blocks_[j]))
        throw NotACover("blocks must form an antichain");
  if (!std::is_sorted(blocks_.begin(), blocks_.end()))
    throw NotACover("blocks must be listed in canonical order");
}

bool Cover::operator<(const Cover& other) const {
  if (blocks_.size() != other.blocks_.size()) return blocks_.size() < other.blocks_.size();
  return std::lexicographical_compare(blocks_.begin(), blocks_.end(), other.blocks_.begin(),
                                      other.blocks_.end());
}

bool is_cover(const std::vector<Subset>& raw, GroundSet ground) {
  if (raw.empty()) return false;
  std::uint32_t covered = 0;
  for (const Subset& b : raw) {
    if (b.ground() != ground) throw GroundSetMismatch("block over the wrong ground set");
    covered |= b.bits();
  }
  return covered == ground.full_mask();
}

Cover canonicalize(const std::vector<Subset>& raw, GroundSet ground) {
  if (!is_cover(raw, ground)) throw NotACover("family does not cover the ground set");
  std::vector<Subset> keep;
  for (const Subset& b : raw) {
    if (b.is_empty()) continue;
    bool absorbed = false;
    for (const Subset& c : raw)
      if (c.bits() != b.bits() && b.subset_of(c)) {
        absorbed = true;
        break;
      }
    if (absorbed) continue;
    if (std::none_of(keep.begin(), keep.end(), [&](const Subset& k) { return k == b; }))
      keep.push_back(b);
  }
  std::sort(keep.begin(), keep.end());
  return Cover(ground, std::move(keep));
}

bool refines(const Cover& finer, const Cover& coarser) {
  if (finer.ground() != coarser.ground())
    throw GroundSetMismatch("covers live on different ground sets");
  for (const Subset& a : finer.blocks()) {
    bool inside = false;
    for (const Subset& b : coarser.blocks())
      if (a.subset_of(b)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

Cover wedge(const Cover& a, const Cover& b) {
  if (a.ground() != b.ground()) throw GroundSetMismatch("covers live on different ground sets");
  std::vector<Subset> meets;
  meets.reserve(a.blocks().size() * b.blocks().size());
  for (const Subset& x : a.blocks())
    for (const Subset& y : b.blocks()) meets.push_back(x & y);
  return canonicalize(meets, a.ground());
}

std::vector<Cover> minimal_antichain(const std::vector<Cover>& covers) {
  std::vector<Cover> out;
  for (const Cover& c : covers) {
    bool minimal = true;
    for (const Cover& d : covers)
      if (!(d == c) && refines(d, c)) {
        minimal = false;
        break;
      }
    if (minimal && std::none_of(out.begin(), out.end(), [&](const Cover& k) { return k == c; }))
      out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetMap::SetMap(GroundSet domain, GroundSet codomain, std::vector<unsigned> images)
    : domain_(domain), codomain_(codomain), images_(std::move(images)) {
  if (images_.size() != domain_.size()) throw Error("map must assign an image to every element");
  for (unsigned v : images_)
    if (v >= codomain_.size()) throw Error("image " + std::to_string(v) + " out of range");
}

SetMap SetMap::identity(GroundSet ground) {
  std::vector<unsigned> images(ground.size());
  std::iota(images.begin(), images.end(), 0u);
  return SetMap(ground, ground, std::move(images));
}

SetMap SetMap::constant(GroundSet domain, GroundSet codomain, unsigned value) {
  return SetMap(domain, codomain, std::vector<unsigned>(domain.size(), value));
}

Subset SetMap::preimage(const Subset& target) const {
  if (target.ground() != codomain_) throw GroundSetMismatch("preimage target over the wrong ground set");
  std::uint32_t bits = 0;
  for (unsigned x = 0; x < domain_.size(); ++x)
    if (target.contains(images_[x])) bits |= 1u << x;
  return Subset(domain_, bits);
}

SetMap compose(const SetMap& outer, const SetMap& inner) {
  if (inner.codomain_ != outer.domain_) throw GroundSetMismatch("maps do not compose");
  std::vector<unsigned> images(inner.domain_.size());
  for (unsigned x = 0; x < images.size(); ++x) images[x] = outer.images_[inner.images_[x]];
  return SetMap(inner.domain_, outer.codomain_, std::move(images));
}

Cover preimage_cover(const SetMap& map, const Cover& cover) {
  if (cover.ground() != map.codomain()) throw GroundSetMismatch("cover over the wrong ground set");
  std::vector<Subset> pre;
  pre.reserve(cover.blocks().size());
  for (const Subset& b : cover.blocks()) pre.push_back(map.preimage(b));
  return canonicalize(pre, map.domain());
}

}  // namespace mero
