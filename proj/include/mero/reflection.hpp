#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mero/structures.hpp"

namespace mero {

// Thrown when the two reflection algorithms disagree; carries both results.
class AlgorithmDisagreement : public Error {
 public:
  AlgorithmDisagreement(MerotopicStructure iterative, MerotopicStructure maximal);

  const MerotopicStructure& iterative() const { return iterative_; }
  const MerotopicStructure& maximal() const { return maximal_; }

 private:
  MerotopicStructure iterative_;
  MerotopicStructure maximal_;
};

// Join of two structures on the same ground set: the smallest merotopic
// structure containing both. A cover belongs to it iff it is refined by a
// wedge of one member from each side.
MerotopicStructure join(const MerotopicStructure& a, const MerotopicStructure& b);

// Initial structure along f : X -> (Y, nu): generated by the preimage covers
// of the members of nu. The coarsest structure on X making f uniformly
// continuous.
MerotopicStructure initial_structure(const SetMap& map,
                                     const MerotopicStructure& codomain_structure);

enum class ReflectAlgorithm { kIterative, kMaximal, kBoth };

// Largest nearness structure contained in the input, by iterated filtering:
// keep the members whose blockwise-interior family (taken in the current
// stage) is again a cover and a member, until nothing is dropped.
MerotopicStructure reflect_iterative(const MerotopicStructure& structure);

// The same structure as the join of all nearness substructures. Exhaustive;
// gated like structure enumeration.
MerotopicStructure reflect_maximal(const MerotopicStructure& structure);

// Dispatch on algorithm; kBoth runs both and throws AlgorithmDisagreement if
// they differ.
MerotopicStructure reflect(const MerotopicStructure& structure, ReflectAlgorithm algorithm);

namespace detail {

// reflect_iterative plus the number of filter passes made, counting the final
// pass that confirms the fixpoint. A nearness input takes exactly one pass.
std::pair<MerotopicStructure, int> reflect_iterative_rounds(const MerotopicStructure& structure);

// reflect_iterative with the stage-membership scan done in a seeded shuffled
// order. The result must not depend on the order; tests exercise this.
MerotopicStructure reflect_iterative_shuffled(const MerotopicStructure& structure,
                                              std::uint64_t seed);

}  // namespace detail

// One clause of the reflection's universal property, checked over a finite
// sweep of codomains.
struct UniversalPropertyCheck {
  std::string clause;
  bool passed = false;
  std::string witness;  // description of the first failure, empty when passed
};

struct ReflectionReport {
  MerotopicStructure input;
  MerotopicStructure reflection;
  int iterations = 0;
  std::vector<UniversalPropertyCheck> checks;
};

// Reflect `structure` and verify, exhaustively over codomains of size 1 up to
// `codomain_bound`, that the result is the bireflection: it is a nearness
// substructure, the identity into the input is uniformly continuous, and
// every uniformly continuous map to a nearness structure factors through it.
ReflectionReport verify_bireflection(const MerotopicStructure& structure,
                                     unsigned codomain_bound);

}  // namespace mero
