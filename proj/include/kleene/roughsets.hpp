//  Copyright 2026 The kleene-workbench Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

/// \file roughsets.hpp
/// Pawlak approximation spaces over small universes (subsets are bitmasks),
/// lower/upper approximations, the rough-set family RS, the generalized
/// family R = D^[2] as a Kleene algebra, the dummy-element saturation that
/// makes RS' = R', and the rough-set representation of Kleene algebras.

#ifndef KLEENE_ROUGHSETS_HPP_
#define KLEENE_ROUGHSETS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kleene/algebra.hpp"
#include "kleene/representation.hpp"

namespace kleene {

using SetMask = std::uint32_t;

/// A universe of named points partitioned into equivalence blocks.
class ApproximationSpace {
 public:
  static constexpr std::size_t kMaxUniverse = 32;

  /// Throws StructureError on duplicate names, empty or overlapping blocks,
  /// unknown names, or blocks that do not cover the universe.
  ApproximationSpace(std::vector<std::string> universe,
                     std::vector<std::vector<std::string>> blocks);

  /// Builds the partition of an equivalence relation given as name pairs.
  /// Throws StructureError unless the relation is reflexive, symmetric and
  /// transitive.
  static ApproximationSpace from_relation(std::vector<std::string> universe,
                                          const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<SetMask>& blocks() const { return blocks_; }
  SetMask universe_mask() const;
  SetMask block_of(std::size_t point) const;
  bool is_definable(SetMask set) const;

  /// Index of a named point; throws StructureError for unknown names.
  std::size_t index_of(const std::string& name) const;
  SetMask set_of(const std::vector<std::string>& names) const;
  /// "{a,b}" with names sorted.
  std::string render(SetMask set) const;
  std::vector<std::string> members(SetMask set) const;

 private:
  std::vector<std::string> names_;
  std::vector<SetMask> blocks_;
};

/// (lower, upper); lower is contained in upper and both are definable.
struct RoughPair {
  SetMask lower = 0;
  SetMask upper = 0;

  friend bool operator==(const RoughPair&, const RoughPair&) = default;
  friend auto operator<=>(const RoughPair&, const RoughPair&) = default;
};

std::string render(const ApproximationSpace& space, const RoughPair& pair);

/// Lower approximation: union of blocks inside `set`; upper: union of
/// blocks meeting it.
RoughPair approximations(const ApproximationSpace& space, SetMask set);

/// RS: the distinct (lower, upper) pairs over all subsets, sorted. Throws
/// SizeError when the universe exceeds max_universe points.
std::vector<RoughPair> rough_set_family(const ApproximationSpace& space,
                                        std::size_t max_universe = 20);

/// All definable sets, indexed by the bitmask of blocks they contain.
std::vector<SetMask> definable_sets(const ApproximationSpace& space);

/// R = D^[2] with componentwise operations and ~(D1,D2) = (D2^c, D1^c).
struct RoughAlgebra {
  ApproximationSpace space;
  std::vector<RoughPair> pairs;
  KleeneAlgebra algebra;

  Elem index_of(const RoughPair& pair) const;
};

RoughAlgebra generalized_family(const ApproximationSpace& space);

/// The saturated space and the correspondence D -> D' of the dummy-element
/// construction. Original points keep their indices; the dummy for point x
/// is appended and named x'.
struct Saturation {
  ApproximationSpace space;
  std::vector<std::size_t> dummy_source;  // dummy_source[k]: original point of dummy k
  std::size_t original_size = 0;

  SetMask map_set(SetMask set) const;
  RoughPair map(const RoughPair& pair) const;
};

/// Throws StructureError when a dummy name collides with an existing point.
Saturation saturate_space(const ApproximationSpace& space);

struct SaturationCheck {
  bool rough_equals_generalized = false;  // RS' = R'
  bool bijective = false;
  HomomorphismReport homomorphism;

  bool ok() const { return rough_equals_generalized && bijective && homomorphism.ok; }
};

/// Verifies that the saturation map R(S) -> RS'(S') is a Kleene isomorphism.
SaturationCheck verify_kleene_iso_saturation(const ApproximationSpace& space);

/// The identity-partition space on the atoms of B, with the verified
/// isomorphisms B -> D and B^[2] -> R.
struct BooleanRoughSpace {
  ApproximationSpace space;
  std::vector<SetMask> definable;  // element of B -> definable set
  IntervalAlgebra interval;
  RoughAlgebra rough;
  CarrierMap interval_to_rough;
};

/// Throws InvariantViolation if either isomorphism fails to verify.
BooleanRoughSpace boolean_to_rough(const BooleanAlgebra& base);

/// K -> (2^n)^[2] -> R(atoms) -> RS'(saturated atoms), verified injective
/// and a Kleene homomorphism.
struct RoughRepresentation {
  IntervalEmbedding embedding;
  BooleanRoughSpace atoms;
  Saturation saturation;
  RoughAlgebra saturated;  // R' of the saturated space, equal to RS'
  CarrierMap map;          // K -> saturated.algebra
};

RoughRepresentation represent_as_rough_sets(const KleeneAlgebra& algebra, std::size_t max_size = 10);

/// Re-verifies a stored representation: images[x] must be a rough set of
/// `space` (clause "range"), the images distinct (clause "injective"), and
/// x -> images[x] a homomorphism into R of the space.
HomomorphismReport verify_rough_map(const KleeneAlgebra& algebra, const ApproximationSpace& space,
                                    const std::vector<RoughPair>& images);

/// Every partition of the points "1".."n" for 1 <= n <= max_universe.
std::vector<ApproximationSpace> enumerate_spaces(std::size_t max_universe);

/// Whether RS is closed under componentwise union, intersection and the
/// rough negation; the first escaping pair is returned in `witness`.
bool rough_family_closed(const ApproximationSpace& space, std::vector<RoughPair>* witness = nullptr);

}  // namespace kleene

#endif  // KLEENE_ROUGHSETS_HPP_
