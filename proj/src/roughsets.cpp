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

#include "kleene/roughsets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "kleene/errors.hpp"

namespace kleene {

namespace {

constexpr SetMask bit(std::size_t i) { return SetMask{1} << i; }

}  // namespace

// --- ApproximationSpace ----------------------------------------------------------

ApproximationSpace::ApproximationSpace(std::vector<std::string> universe,
                                       std::vector<std::vector<std::string>> blocks)
    : names_(std::move(universe)) {
  if (names_.size() > kMaxUniverse)
    throw StructureError("universe has more than " + std::to_string(kMaxUniverse) + " points");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw StructureError("empty point name");
    for (std::size_t k = 0; k < i; ++k)
      if (names_[k] == names_[i]) throw StructureError("duplicate point name " + names_[i]);
  }
  SetMask covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw StructureError("empty block");
    SetMask mask = 0;
    for (const auto& name : block) {
      const SetMask b = bit(index_of(name));
      if ((covered | mask) & b) throw StructureError("point " + name + " lies in two blocks");
      mask |= b;
    }
    covered |= mask;
    blocks_.push_back(mask);
  }
  if (covered != universe_mask()) throw StructureError("blocks do not cover the universe");
}

ApproximationSpace ApproximationSpace::from_relation(
    std::vector<std::string> universe, const std::vector<std::pair<std::string, std::string>>& pairs) {
  ApproximationSpace probe(universe, {universe});  // name validation only
  const std::size_t n = universe.size();
  std::vector<SetMask> related(n, 0);
  for (const auto& [a, b] : pairs) related[probe.index_of(a)] |= bit(probe.index_of(b));
  for (std::size_t i = 0; i < n; ++i) {
    if (!(related[i] & bit(i))) throw StructureError("relation is not reflexive at " + universe[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(related[i] & bit(j))) continue;
      if (!(related[j] & bit(i)))
        throw StructureError("relation is not symmetric at (" + universe[i] + "," + universe[j] + ")");
      if (related[j] & ~related[i])
        throw StructureError("relation is not transitive through (" + universe[i] + "," +
                             universe[j] + ")");
    }
  }
  std::vector<std::vector<std::string>> blocks;
  SetMask seen = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen & bit(i)) continue;
    seen |= related[i];
    std::vector<std::string> block;
    for (std::size_t j = 0; j < n; ++j)
      if (related[i] & bit(j)) block.push_back(universe[j]);
    blocks.push_back(std::move(block));
  }
  return ApproximationSpace(std::move(universe), std::move(blocks));
}

SetMask ApproximationSpace::universe_mask() const {
  return names_.size() == 32 ? ~SetMask{0} : bit(names_.size()) - 1;
}

SetMask ApproximationSpace::block_of(std::size_t point) const {
  for (SetMask b : blocks_)
    if (b & bit(point)) return b;
  throw PreconditionError("point index out of range");
}

bool ApproximationSpace::is_definable(SetMask set) const {
  for (SetMask b : blocks_)
    if ((b & set) != 0 && (b & set) != b) return false;
  return (set & ~universe_mask()) == 0;
}

std::size_t ApproximationSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw StructureError("unknown point " + name);
}

SetMask ApproximationSpace::set_of(const std::vector<std::string>& names) const {
  SetMask set = 0;
  for (const auto& n : names) set |= bit(index_of(n));
  return set;
}

std::vector<std::string> ApproximationSpace::members(SetMask set) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (set & bit(i)) out.push_back(names_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string ApproximationSpace::render(SetMask set) const {
  std::string out = "{";
  bool first = true;
  for (const auto& name : members(set)) {
    out += (first ? "" : ",") + name;
    first = false;
  }
  return out + "}";
}

std::string render(const ApproximationSpace& space, const RoughPair& pair) {
  return "(" + space.render(pair.lower) + ", " + space.render(pair.upper) + ")";
}

// --- approximations ----------------------------------------------------------------

RoughPair approximations(const ApproximationSpace& space, SetMask set) {
  RoughPair result;
  for (SetMask b : space.blocks()) {
    if ((b & set) == b) result.lower |= b;
    if (b & set) result.upper |= b;
  }
  return result;
}

std::vector<RoughPair> rough_set_family(const ApproximationSpace& space, std::size_t max_universe) {
  if (space.size() > max_universe)
    throw SizeError("universe has " + std::to_string(space.size()) +
                    " points; rough set enumeration is bounded by " + std::to_string(max_universe));
  std::set<RoughPair> family;
  const std::uint64_t count = std::uint64_t{1} << space.size();
  for (std::uint64_t s = 0; s < count; ++s) family.insert(approximations(space, static_cast<SetMask>(s)));
  return {family.begin(), family.end()};
}

std::vector<SetMask> definable_sets(const ApproximationSpace& space) {
  const auto& blocks = space.blocks();
  std::vector<SetMask> result(std::size_t{1} << blocks.size(), 0);
  for (std::size_t b = 0; b < result.size(); ++b)
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (b >> i & 1) result[b] |= blocks[i];
  return result;
}

Elem RoughAlgebra::index_of(const RoughPair& pair) const {
  for (Elem x = 0; x < pairs.size(); ++x)
    if (pairs[x] == pair) return x;
  throw PreconditionError(render(space, pair) + " is not a generalized rough set");
}

RoughAlgebra generalized_family(const ApproximationSpace& space) {
  if (space.blocks().size() > 10) throw SizeError("too many blocks for the generalized family");
  const auto defs = definable_sets(space);
  std::vector<RoughPair> pairs;
  for (std::size_t i = 0; i < defs.size(); ++i)
    for (std::size_t j = 0; j < defs.size(); ++j)
      if ((i & ~j) == 0) pairs.push_back({defs[i], defs[j]});

  std::map<RoughPair, Elem> index;
  for (Elem x = 0; x < pairs.size(); ++x) index.emplace(pairs[x], x);
  const std::size_t n = pairs.size();
  const SetMask full = space.universe_mask();
  std::vector<std::uint8_t> leq(n * n);
  std::vector<std::string> labels(n);
  std::vector<Elem> neg(n);
  for (Elem x = 0; x < n; ++x) {
    labels[x] = render(space, pairs[x]);
    for (Elem y = 0; y < n; ++y)
      leq[x * n + y] = (pairs[x].lower & ~pairs[y].lower) == 0 && (pairs[x].upper & ~pairs[y].upper) == 0;
    neg[x] = index.at({full & ~pairs[x].upper, full & ~pairs[x].lower});
  }
  KleeneAlgebra algebra(FiniteLattice::from_order(n, std::move(leq), std::move(labels)),
                        std::move(neg), "R");
  return RoughAlgebra{space, std::move(pairs), std::move(algebra)};
}

// --- saturation -----------------------------------------------------------------------

SetMask Saturation::map_set(SetMask set) const {
  SetMask out = set;
  for (std::size_t k = 0; k < dummy_source.size(); ++k)
    if (set & bit(dummy_source[k])) out |= bit(original_size + k);
  return out;
}

RoughPair Saturation::map(const RoughPair& pair) const {
  return {map_set(pair.lower), map_set(pair.upper)};
}

Saturation saturate_space(const ApproximationSpace& space) {
  std::vector<std::string> universe = space.names();
  std::vector<std::size_t> sources;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.block_of(i) == bit(i)) sources.push_back(i);
  if (space.size() + sources.size() > ApproximationSpace::kMaxUniverse)
    throw SizeError("saturated universe would exceed " +
                    std::to_string(ApproximationSpace::kMaxUniverse) + " points");
  for (std::size_t i : sources) {
    std::string dummy = space.names()[i] + "'";
    if (std::find(universe.begin(), universe.end(), dummy) != universe.end())
      throw StructureError("dummy point name " + dummy + " collides with an existing point");
    universe.push_back(std::move(dummy));
  }
  std::vector<std::vector<std::string>> blocks;
  for (SetMask b : space.blocks()) {
    auto block = space.members(b);
    if (std::popcount(b) == 1) block.push_back(block.front() + "'");
    blocks.push_back(std::move(block));
  }
  return Saturation{ApproximationSpace(std::move(universe), std::move(blocks)), std::move(sources),
                    space.size()};
}

SaturationCheck verify_kleene_iso_saturation(const ApproximationSpace& space) {
  SaturationCheck check;
  const auto sat = saturate_space(space);
  const auto source = generalized_family(space);
  const auto target = generalized_family(sat.space);
  const auto rough = rough_set_family(sat.space);
  std::vector<RoughPair> generalized = target.pairs;
  std::sort(generalized.begin(), generalized.end());
  check.rough_equals_generalized = rough == generalized;

  CarrierMap phi(source.algebra.size());
  for (Elem x = 0; x < phi.size(); ++x) {
    const auto image = sat.map(source.pairs[x]);
    auto it = std::find(target.pairs.begin(), target.pairs.end(), image);
    if (it == target.pairs.end()) {
      check.homomorphism = {false, "range", {x}};
      return check;
    }
    phi[x] = static_cast<Elem>(it - target.pairs.begin());
  }
  check.bijective = is_bijective(phi, target.algebra.size());
  check.homomorphism = verify_homomorphism(phi, source.algebra, target.algebra);
  return check;
}

// --- Boolean algebras as rough sets --------------------------------------------------

BooleanRoughSpace boolean_to_rough(const BooleanAlgebra& base) {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> blocks;
  for (Elem atom : base.atoms()) {
    universe.push_back(base.label(atom));
    blocks.push_back({base.label(atom)});
  }
  ApproximationSpace space(universe, blocks);

  std::vector<SetMask> definable(base.size(), 0);
  for (Elem x = 0; x < base.size(); ++x)
    for (std::size_t i = 0; i < base.atoms().size(); ++i)
      if (base.leq(base.atoms()[i], x)) definable[x] |= bit(i);

  // B -> D: bijective onto the definable sets, order-embedding, complement-preserving.
  std::set<SetMask> images(definable.begin(), definable.end());
  if (images.size() != base.size() || images.size() != definable_sets(space).size())
    throw InvariantViolation("atoms-below map is not a bijection onto the definable sets");
  for (Elem x = 0; x < base.size(); ++x) {
    if (definable[base.complement(x)] != (space.universe_mask() & ~definable[x]))
      throw InvariantViolation("atoms-below map does not preserve complement");
    for (Elem y = 0; y < base.size(); ++y)
      if (base.leq(x, y) != ((definable[x] & ~definable[y]) == 0))
        throw InvariantViolation("atoms-below map is not an order isomorphism");
  }

  auto interval = interval_algebra(base);
  auto rough = generalized_family(space);
  CarrierMap to_rough(interval.algebra.size());
  for (Elem x = 0; x < to_rough.size(); ++x)
    to_rough[x] = rough.index_of({definable[interval.pairs[x].lo], definable[interval.pairs[x].hi]});
  if (!is_bijective(to_rough, rough.algebra.size()))
    throw InvariantViolation("B^[2] -> R is not bijective");
  auto report = verify_homomorphism(to_rough, interval.algebra, rough.algebra);
  if (!report) throw InvariantViolation("B^[2] -> R fails the " + report.clause + " clause");
  return BooleanRoughSpace{std::move(space), std::move(definable), std::move(interval),
                           std::move(rough), std::move(to_rough)};
}

RoughRepresentation represent_as_rough_sets(const KleeneAlgebra& algebra, std::size_t max_size) {
  auto embedding = embed_into_interval(algebra, max_size);
  auto atoms = boolean_to_rough(embedding.boolean());
  auto saturation = saturate_space(atoms.space);
  auto saturated = generalized_family(saturation.space);

  auto rough = rough_set_family(saturation.space);
  auto generalized = saturated.pairs;
  std::sort(generalized.begin(), generalized.end());
  if (rough != generalized) throw InvariantViolation("RS' differs from R' after saturation");

  CarrierMap map(algebra.size());
  for (Elem x = 0; x < algebra.size(); ++x) {
    const Elem in_interval = embedding.map[x];
    const auto& pair = atoms.rough.pairs[atoms.interval_to_rough[in_interval]];
    map[x] = saturated.index_of(saturation.map(pair));
  }
  if (!is_injective(map)) throw InvariantViolation("rough-set representation is not injective");
  auto report = verify_homomorphism(map, algebra, saturated.algebra);
  if (!report)
    throw InvariantViolation("rough-set representation fails the " + report.clause + " clause");
  return RoughRepresentation{std::move(embedding), std::move(atoms), std::move(saturation),
                             std::move(saturated), std::move(map)};
}

HomomorphismReport verify_rough_map(const KleeneAlgebra& algebra, const ApproximationSpace& space,
                                    const std::vector<RoughPair>& images) {
  if (images.size() != algebra.size()) return {false, "range", {}};
  const auto rough = rough_set_family(space);
  const auto family = generalized_family(space);
  CarrierMap map(images.size());
  for (Elem x = 0; x < images.size(); ++x) {
    if (!std::binary_search(rough.begin(), rough.end(), images[x])) return {false, "range", {x}};
    map[x] = family.index_of(images[x]);
  }
  if (!is_injective(map)) return {false, "injective", {}};
  return verify_homomorphism(map, algebra, family.algebra);
}

// --- enumeration helpers --------------------------------------------------------------

namespace {

void partitions(std::size_t n, std::size_t next, std::vector<std::vector<std::string>>& blocks,
                std::vector<ApproximationSpace>& out) {
  if (next == n) {
    std::vector<std::string> universe;
    for (std::size_t i = 0; i < n; ++i) universe.push_back(std::to_string(i + 1));
    out.emplace_back(std::move(universe), blocks);
    return;
  }
  const std::string name = std::to_string(next + 1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(name);
    partitions(n, next + 1, blocks, out);
    blocks[b].pop_back();
  }
  blocks.push_back({name});
  partitions(n, next + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<ApproximationSpace> enumerate_spaces(std::size_t max_universe) {
  std::vector<ApproximationSpace> out;
  for (std::size_t n = 1; n <= max_universe; ++n) {
    std::vector<std::vector<std::string>> blocks;
    partitions(n, 0, blocks, out);
  }
  return out;
}

bool rough_family_closed(const ApproximationSpace& space, std::vector<RoughPair>* witness) {
  const auto family = rough_set_family(space);
  const std::set<RoughPair> members(family.begin(), family.end());
  const SetMask full = space.universe_mask();
  auto escape = [&](const RoughPair& p) {
    if (members.count(p)) return false;
    if (witness) *witness = {p};
    return true;
  };
  for (const auto& a : family) {
    if (escape({full & ~a.upper, full & ~a.lower})) return false;
    for (const auto& b : family) {
      if (escape({a.lower | b.lower, a.upper | b.upper})) return false;
      if (escape({a.lower & b.lower, a.upper & b.upper})) return false;
    }
  }
  return true;
}

}  // namespace kleene
