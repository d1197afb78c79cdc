#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mero/structures.hpp"

namespace mero {

// Exhaustive enumeration gates. The cover universe grows like the Dedekind
// numbers, so anything that walks it stops at small ground sets.
inline constexpr unsigned kMaxCoverEnumerationSize = 5;
inline constexpr unsigned kMaxNaiveEnumerationSize = 4;
inline constexpr unsigned kMaxStructureEnumerationSize = 3;
inline constexpr std::size_t kMapEnumerationBudget = 27;

// All canonical covers of the ground set in canonical order. Throws
// GroundSetTooLarge above kMaxCoverEnumerationSize.
std::vector<Cover> enumerate_canonical_covers(GroundSet ground);

// Same list by brute force: filter every family of subsets for "canonical
// cover" directly. Deliberately independent of the antichain search; gated at
// kMaxNaiveEnumerationSize.
std::vector<Cover> enumerate_covers_naive(GroundSet ground);

// The full cover universe of one ground set plus its refinement matrix,
// so structure-level sweeps don't recompute block inclusions.
class CoverUniverse {
 public:
  explicit CoverUniverse(GroundSet ground);

  GroundSet ground() const { return ground_; }
  const std::vector<Cover>& covers() const { return covers_; }
  std::size_t size() const { return covers_.size(); }

  // refines(covers()[i], covers()[j])
  bool refines_at(std::size_t i, std::size_t j) const { return matrix_[i * covers_.size() + j]; }

  std::size_t index_of(const Cover& cover) const;  // throws Error if absent

 private:
  GroundSet ground_;
  std::vector<Cover> covers_;
  std::vector<bool> matrix_;
};

// All merotopic structures on the ground set in canonical order, by walking
// candidate bases. Throws GroundSetTooLarge above kMaxStructureEnumerationSize.
std::vector<MerotopicStructure> enumerate_structures(GroundSet ground);

// Same list by testing every up-closed, wedge-closed subset of the cover
// universe. Deliberately independent of the basis walk.
std::vector<MerotopicStructure> enumerate_structures_exhaustive(GroundSet ground);

// The nearness structures among the substructures of `structure`, in
// canonical order. Used by the join-of-all-nearness-substructures reflector.
std::vector<MerotopicStructure> enumerate_nearness_substructures(const MerotopicStructure& structure);

// All maps domain -> codomain in lexicographic image order (last coordinate
// fastest). Throws MapBudgetExceeded if there are more than
// kMapEnumerationBudget of them.
std::vector<SetMap> enumerate_maps(GroundSet domain, GroundSet codomain);

// Decides membership of a cover in the structure spanned by `basis` by
// explicit closure inside the cover universe, without touching
// MerotopicStructure::contains. Used to cross-check it.
bool membership_oracle(const std::vector<Cover>& basis, const Cover& cover,
                       const CoverUniverse& universe);

// A witness that the initial-structure construction can leave the nearness
// class: a map f, a nearness structure on the codomain, and the induced
// structure on the domain, which is merotopic but not nearness.
struct CounterexampleWitness {
  SetMap map;
  MerotopicStructure codomain_structure;
  MerotopicStructure pullback;
};

// Deterministic sweep over codomain sizes 1..|X|, structures, and maps; first
// witness wins. Empty if every pullback of a nearness structure is nearness
// (so for |X| <= 2).
std::optional<CounterexampleWitness> find_counterexample(GroundSet ground);

}  // namespace mero
