#include "mero/structures.hpp"

#include <algorithm>

namespace mero {

MerotopicStructure MerotopicStructure::from_basis(GroundSet ground, std::vector<Cover> basis) {
  if (basis.empty()) throw EmptyGenerators("a structure needs at least one basis cover");
  for (const Cover& c : basis)
    if (c.ground() != ground) throw GroundSetMismatch("basis cover over the wrong ground set");
  MerotopicStructure out(ground, minimal_antichain(basis));
  // Axiom check: the spanned up-set must be wedge-closed.
  for (std::size_t i = 0; i < out.basis_.size(); ++i)
    for (std::size_t j = i; j < out.basis_.size(); ++j)
      if (!out.contains(wedge(out.basis_[i], out.basis_[j])))
        throw Error("basis does not span a wedge-closed family");
  return out;
}

bool MerotopicStructure::contains(const Cover& cover) const {
  if (cover.ground() != ground_) throw GroundSetMismatch("cover over the wrong ground set");
  return std::any_of(basis_.begin(), basis_.end(),
                     [&](const Cover& b) { return refines(b, cover); });
}

bool MerotopicStructure::subset_of(const MerotopicStructure& other) const {
  if (ground_ != other.ground_) throw GroundSetMismatch("structures live on different ground sets");
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Cover& b) { return other.contains(b); });
}

bool MerotopicStructure::operator<(const MerotopicStructure& other) const {
  return std::lexicographical_compare(basis_.begin(), basis_.end(), other.basis_.begin(),
                                      other.basis_.end());
}

MerotopicStructure generate(GroundSet ground, const std::vector<Cover>& generators) {
  if (generators.empty()) throw EmptyGenerators("generate needs at least one cover");
  Cover total = generators.front();
  if (total.ground() != ground) throw GroundSetMismatch("generator over the wrong ground set");
  for (std::size_t i = 1; i < generators.size(); ++i) total = wedge(total, generators[i]);
  // The wedge of all generators refines every partial wedge, so it alone forms
  // the minimal antichain of the generated filter.
  return MerotopicStructure::from_basis(ground, {std::move(total)});
}

MerotopicStructure indiscrete(GroundSet ground) {
  return MerotopicStructure::from_basis(ground, {Cover(ground, {Subset::full(ground)})});
}

MerotopicStructure discrete(GroundSet ground) {
  std::vector<Subset> singletons;
  for (unsigned i = 0; i < ground.size(); ++i) singletons.emplace_back(ground, 1u << i);
  return MerotopicStructure::from_basis(ground, {Cover(ground, std::move(singletons))});
}

Subset interior(const MerotopicStructure& structure, const Subset& set) {
  const GroundSet ground = structure.ground();
  if (set.ground() != ground) throw GroundSetMismatch("subset over the wrong ground set");
  std::uint32_t bits = 0;
  for (unsigned x = 0; x < ground.size(); ++x) {
    if (!set.contains(x)) continue;  // {A, X minus x} misses x, so it is no cover
    const Subset rest(ground, ground.full_mask() & ~(1u << x));
    if (structure.contains(canonicalize({set, rest}, ground))) bits |= 1u << x;
  }
  return Subset(ground, bits);
}

std::vector<Subset> interior_image(const MerotopicStructure& structure, const Cover& cover) {
  if (cover.ground() != structure.ground())
    throw GroundSetMismatch("cover over the wrong ground set");
  std::vector<Subset> out;
  out.reserve(cover.blocks().size());
  for (const Subset& b : cover.blocks()) out.push_back(interior(structure, b));
  return out;
}

bool is_nearness(const MerotopicStructure& structure) {
  // Checking basis covers suffices: interiors are monotone, so the interior
  // image of a basis cover refines the interior image of anything above it.
  for (const Cover& b : structure.basis()) {
    const std::vector<Subset> interiors = interior_image(structure, b);
    if (!is_cover(interiors, structure.ground())) return false;
    if (!structure.contains(canonicalize(interiors, structure.ground()))) return false;
  }
  return true;
}

bool uniformly_continuous(const SetMap& map, const MerotopicStructure& domain_structure,
                          const MerotopicStructure& codomain_structure) {
  if (map.domain() != domain_structure.ground() ||
      map.codomain() != codomain_structure.ground())
    throw GroundSetMismatch("map endpoints do not match the structures");
  for (const Cover& b : codomain_structure.basis())
    if (!domain_structure.contains(preimage_cover(map, b))) return false;
  return true;
}

}  // namespace mero
