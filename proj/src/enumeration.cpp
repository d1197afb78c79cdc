#include "mero/enumeration.hpp"

#include <algorithm>
#include <bit>

#include "mero/reflection.hpp"

namespace mero {

namespace {

// All non-empty subset masks in canonical subset order.
std::vector<std::uint32_t> ordered_masks(GroundSet ground) {
  std::vector<std::uint32_t> masks;
  masks.reserve(ground.full_mask());
  for (std::uint32_t m = 1; m <= ground.full_mask(); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    const std::uint32_t diff = a ^ b;
    return (a & (diff & (~diff + 1u))) != 0;
  });
  return masks;
}

// Grow antichains of subset masks block by block (in canonical block order)
// and record every one whose union covers the ground set.
void cover_dfs(const std::vector<std::uint32_t>& masks, std::size_t next,
               std::vector<std::uint32_t>& chosen, std::uint32_t covered, GroundSet ground,
               std::vector<Cover>& out) {
  if (covered == ground.full_mask()) {
    std::vector<Subset> blocks;
    blocks.reserve(chosen.size());
    for (std::uint32_t m : chosen) blocks.emplace_back(ground, m);
    out.emplace_back(ground, std::move(blocks));
  }
  for (std::size_t i = next; i < masks.size(); ++i) {
    const std::uint32_t m = masks[i];
    bool comparable = false;
    for (std::uint32_t c : chosen)
      if ((c & ~m) == 0 || (m & ~c) == 0) {
        comparable = true;
        break;
      }
    if (comparable) continue;
    chosen.push_back(m);
    cover_dfs(masks, i + 1, chosen, covered | m, ground, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Cover> enumerate_canonical_covers(GroundSet ground) {
  if (ground.size() > kMaxCoverEnumerationSize)
    throw GroundSetTooLarge("cover enumeration is limited to ground sets of size " +
                            std::to_string(kMaxCoverEnumerationSize));
  const std::vector<std::uint32_t> masks = ordered_masks(ground);
  std::vector<Cover> out;
  std::vector<std::uint32_t> chosen;
  cover_dfs(masks, 0, chosen, 0, ground, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cover> enumerate_covers_naive(GroundSet ground) {
  if (ground.size() > kMaxNaiveEnumerationSize)
    throw GroundSetTooLarge("naive cover enumeration is limited to ground sets of size " +
                            std::to_string(kMaxNaiveEnumerationSize));
  // Walk every family of non-empty subsets; a family is encoded by one bit per
  // subset mask 1..full. Keep exactly the already-canonical covers.
  const unsigned subsets = ground.full_mask();
  std::vector<Cover> out;
  for (std::uint64_t family = 1; family < (std::uint64_t(1) << subsets); ++family) {
    std::vector<std::uint32_t> members;
    std::uint32_t covered = 0;
    for (unsigned k = 0; k < subsets; ++k)
      if ((family >> k) & 1) {
        members.push_back(k + 1);
        covered |= k + 1;
      }
    if (covered != ground.full_mask()) continue;
    bool antichain = true;
    for (std::size_t i = 0; i < members.size() && antichain; ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        if (i != j && (members[i] & ~members[j]) == 0) {
          antichain = false;
          break;
        }
    if (!antichain) continue;
    std::vector<Subset> blocks;
    blocks.reserve(members.size());
    for (std::uint32_t m : members) blocks.emplace_back(ground, m);
    std::sort(blocks.begin(), blocks.end());
    out.emplace_back(ground, std::move(blocks));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoverUniverse::CoverUniverse(GroundSet ground)
    : ground_(ground), covers_(enumerate_canonical_covers(ground)) {
  // bit m of contained[j] says: subset mask m lies inside some block of
  // covers_[j]. The enumeration gate keeps every mask below 32.
  std::vector<std::uint32_t> contained(covers_.size(), 0);
  for (std::size_t j = 0; j < covers_.size(); ++j)
    for (const Subset& b : covers_[j].blocks()) {
      std::uint32_t s = b.bits();
      for (;;) {
        contained[j] |= 1u << s;
        if (s == 0) break;
        s = (s - 1) & b.bits();
      }
    }
  matrix_.assign(covers_.size() * covers_.size(), false);
  for (std::size_t i = 0; i < covers_.size(); ++i)
    for (std::size_t j = 0; j < covers_.size(); ++j) {
      bool all = true;
      for (const Subset& b : covers_[i].blocks())
        if (!((contained[j] >> b.bits()) & 1u)) {
          all = false;
          break;
        }
      matrix_[i * covers_.size() + j] = all;
    }
}

std::size_t CoverUniverse::index_of(const Cover& cover) const {
  if (cover.ground() != ground_) throw GroundSetMismatch("cover over the wrong ground set");
  const auto it = std::lower_bound(covers_.begin(), covers_.end(), cover);
  if (it == covers_.end() || !(*it == cover)) throw Error("cover not in universe");
  return static_cast<std::size_t>(it - covers_.begin());
}

namespace {

// Grow antichains in the refinement order and keep the wedge-closed ones;
// those are exactly the bases of merotopic structures.
void basis_dfs(const CoverUniverse& universe, std::size_t next, std::vector<std::size_t>& chosen,
               std::vector<MerotopicStructure>& out) {
  if (!chosen.empty()) {
    std::vector<Cover> basis;
    basis.reserve(chosen.size());
    for (std::size_t i : chosen) basis.push_back(universe.covers()[i]);
    bool closed = true;
    for (std::size_t a = 0; a < basis.size() && closed; ++a)
      for (std::size_t b = a; b < basis.size(); ++b) {
        const Cover w = wedge(basis[a], basis[b]);
        if (std::none_of(basis.begin(), basis.end(),
                         [&](const Cover& c) { return refines(c, w); })) {
          closed = false;
          break;
        }
      }
    if (closed) out.push_back(MerotopicStructure::from_basis(universe.ground(), basis));
  }
  for (std::size_t i = next; i < universe.size(); ++i) {
    bool comparable = false;
    for (std::size_t c : chosen)
      if (universe.refines_at(c, i) || universe.refines_at(i, c)) {
        comparable = true;
        break;
      }
    if (comparable) continue;
    chosen.push_back(i);
    basis_dfs(universe, i + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<MerotopicStructure> enumerate_structures(GroundSet ground) {
  if (ground.size() > kMaxStructureEnumerationSize)
    throw GroundSetTooLarge("structure enumeration is limited to ground sets of size " +
                            std::to_string(kMaxStructureEnumerationSize));
  const CoverUniverse universe(ground);
  std::vector<MerotopicStructure> out;
  std::vector<std::size_t> chosen;
  basis_dfs(universe, 0, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MerotopicStructure> enumerate_structures_exhaustive(GroundSet ground) {
  if (ground.size() > kMaxStructureEnumerationSize)
    throw GroundSetTooLarge("structure enumeration is limited to ground sets of size " +
                            std::to_string(kMaxStructureEnumerationSize));
  const CoverUniverse universe(ground);
  const std::size_t n = universe.size();
  std::vector<std::size_t> wedge_index(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      wedge_index[i * n + j] = universe.index_of(wedge(universe.covers()[i], universe.covers()[j]));
  std::vector<MerotopicStructure> out;
  for (std::uint32_t family = 1; family < (1u << n); ++family) {
    const auto member = [&](std::size_t k) { return ((family >> k) & 1u) != 0; };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!member(i)) continue;
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (universe.refines_at(i, j) && !member(j)) ok = false;  // not up-closed
        if (member(j) && !member(wedge_index[i * n + j])) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Cover> basis;
    for (std::size_t i = 0; i < n; ++i) {
      if (!member(i)) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && member(j) && universe.refines_at(j, i)) {
          minimal = false;
          break;
        }
      if (minimal) basis.push_back(universe.covers()[i]);
    }
    out.push_back(MerotopicStructure::from_basis(ground, std::move(basis)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MerotopicStructure> enumerate_nearness_substructures(
    const MerotopicStructure& structure) {
  std::vector<MerotopicStructure> out;
  for (const MerotopicStructure& s : enumerate_structures(structure.ground()))
    if (is_nearness(s) && s.subset_of(structure)) out.push_back(s);
  return out;
}

std::vector<SetMap> enumerate_maps(GroundSet domain, GroundSet codomain) {
  std::size_t total = 1;
  for (unsigned i = 0; i < domain.size(); ++i) {
    total *= codomain.size();
    if (total > kMapEnumerationBudget)
      throw MapBudgetExceeded("map enumeration is limited to " +
                              std::to_string(kMapEnumerationBudget) + " maps");
  }
  std::vector<SetMap> out;
  out.reserve(total);
  std::vector<unsigned> images(domain.size(), 0);
  for (;;) {
    out.emplace_back(domain, codomain, images);
    std::size_t k = images.size();
    while (k > 0) {
      if (++images[k - 1] < codomain.size()) break;
      images[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

bool membership_oracle(const std::vector<Cover>& basis, const Cover& cover,
                       const CoverUniverse& universe) {
  if (basis.empty()) throw EmptyGenerators("membership oracle needs a non-empty basis");
  std::vector<char> in(universe.size(), 0);
  for (const Cover& b : basis) in[universe.index_of(b)] = 1;
  // Explicit closure under refinement and wedge inside the universe.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (!in[i]) continue;
      for (std::size_t j = 0; j < universe.size(); ++j) {
        if (universe.refines_at(i, j) && !in[j]) {
          in[j] = 1;
          changed = true;
        }
        if (in[j]) {
          const std::size_t w =
              universe.index_of(wedge(universe.covers()[i], universe.covers()[j]));
          if (!in[w]) {
            in[w] = 1;
            changed = true;
          }
        }
      }
    }
  }
  return in[universe.index_of(cover)] != 0;
}

std::optional<CounterexampleWitness> find_counterexample(GroundSet ground) {
  if (ground.size() > kMaxStructureEnumerationSize)
    throw GroundSetTooLarge("counterexample search is limited to ground sets of size " +
                            std::to_string(kMaxStructureEnumerationSize));
  for (unsigned m = 1; m <= ground.size(); ++m) {
    const GroundSet codomain(m);
    for (const MerotopicStructure& nu : enumerate_structures(codomain)) {
      if (is_nearness(nu)) continue;
      for (const SetMap& f : enumerate_maps(ground, codomain)) {
        MerotopicStructure pullback = initial_structure(f, nu);
        if (!is_nearness(pullback))
          return CounterexampleWitness{f, nu, std::move(pullback)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace mero
