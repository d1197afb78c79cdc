#pragma once

#include <vector>

#include "mero/covers.hpp"

namespace mero {

// A merotopic structure on a finite ground set: an up-set of covers in the
// refinement order that is closed under wedge. Stored as its basis, the
// antichain of refinement-minimal members; membership means being refined by
// some basis cover.
class MerotopicStructure {
 public:
  // Basis covers as given, reduced to a minimal antichain. Throws NotACover /
  // GroundSetMismatch on malformed input and EmptyGenerators on an empty
  // family; throws Error if the reduced antichain is not wedge-closed (the
  // up-set it spans would not be a merotopic structure).
  static MerotopicStructure from_basis(GroundSet ground, std::vector<Cover> basis);

  GroundSet ground() const { return ground_; }
  const std::vector<Cover>& basis() const { return basis_; }

  bool contains(const Cover& cover) const;

  // True iff every member of this structure is a member of `other`.
  bool subset_of(const MerotopicStructure& other) const;

  friend bool operator==(const MerotopicStructure& a, const MerotopicStructure& b) {
    return a.ground_ == b.ground_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const MerotopicStructure& a, const MerotopicStructure& b) {
    return !(a == b);
  }

  // Canonical order: lexicographic on the basis (shorter basis first when one
  // is a prefix of the other).
  bool operator<(const MerotopicStructure& other) const;

 private:
  MerotopicStructure(GroundSet ground, std::vector<Cover> basis)
      : ground_(ground), basis_(std::move(basis)) {}

  GroundSet ground_;
  std::vector<Cover> basis_;
};

// Smallest merotopic structure containing every generator: the up-set of the
// wedge of all of them. Throws EmptyGenerators on an empty family.
MerotopicStructure generate(GroundSet ground, const std::vector<Cover>& generators);

// The two extremes: basis {{X}} and basis {partition into singletons}.
MerotopicStructure indiscrete(GroundSet ground);
MerotopicStructure discrete(GroundSet ground);

// Interior of `set`: the points x with {set, X minus x} a member.
Subset interior(const MerotopicStructure& structure, const Subset& set);

// Blockwise interiors of a cover's blocks, in block order. Not canonicalized
// and not necessarily a cover.
std::vector<Subset> interior_image(const MerotopicStructure& structure, const Cover& cover);

// A structure is a nearness structure when for every member the family of
// blockwise interiors is again a member.
bool is_nearness(const MerotopicStructure& structure);

// f : (X, mu) -> (Y, nu) is uniformly continuous when preimages of members of
// the codomain structure are members of the domain structure.
bool uniformly_continuous(const SetMap& map, const MerotopicStructure& domain_structure,
                          const MerotopicStructure& codomain_structure);

}  // namespace mero
