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

/// \file perp.hpp
/// Compatibility frames: a partial order of worlds with a relation C that is
/// downward monotone in both arguments. Negation is read as
///   x |= ~a  iff  every C-successor of x fails a.
/// Worlds are indices; sets of worlds are bitmasks, so frames are small.

#ifndef KLEENE_PERP_HPP_
#define KLEENE_PERP_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kleene/formula.hpp"

namespace kleene {

using WorldSet = std::uint32_t;

class CompatibilityFrame {
 public:
  static constexpr std::size_t kMaxWorlds = 16;

  /// `leq` is closed reflexively and transitively before validation. Throws
  /// StructureError when the closure is not antisymmetric, when a name is
  /// unknown or duplicated, or when C is not downward monotone (the message
  /// names the witnessing x' <= x, y' <= y, xCy with not x'Cy').
  CompatibilityFrame(std::vector<std::string> worlds,
                     const std::vector<std::pair<std::string, std::string>>& leq,
                     const std::vector<std::pair<std::string, std::string>>& compat);

  /// Same, by index. up[x] holds the worlds above x (x included or not),
  /// succ[x] the C-successors of x.
  static CompatibilityFrame from_masks(std::vector<std::string> worlds, std::vector<WorldSet> up,
                                       std::vector<WorldSet> succ);

  std::size_t size() const { return worlds_.size(); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::string& world(std::size_t x) const { return worlds_[x]; }
  bool leq(std::size_t x, std::size_t y) const { return up_[x] >> y & 1; }
  bool compatible(std::size_t x, std::size_t y) const { return succ_[x] >> y & 1; }
  WorldSet up(std::size_t x) const { return up_[x]; }
  WorldSet successors(std::size_t x) const { return succ_[x]; }
  WorldSet all() const { return (WorldSet{1} << worlds_.size()) - 1; }

  bool is_up_set(WorldSet s) const;
  /// Every up-set, ascending as bitmasks.
  std::vector<WorldSet> up_sets() const;
  std::size_t index_of(const std::string& world) const;
  std::string render(WorldSet s) const;

 private:
  CompatibilityFrame(std::vector<std::string> worlds, std::vector<WorldSet> up,
                     std::vector<WorldSet> succ);

  std::vector<std::string> worlds_;
  std::vector<WorldSet> up_;
  std::vector<WorldSet> succ_;
};

/// Variable -> up-set of worlds.
using HereditaryEvaluation = std::map<std::string, WorldSet>;

/// Throws PreconditionError if some extension is not an up-set.
void check_hereditary(const CompatibilityFrame& frame, const HereditaryEvaluation& e);

/// The worlds forcing phi. Throws PreconditionError for unassigned variables.
WorldSet extension(const CompatibilityFrame& frame, const HereditaryEvaluation& e, const Formula& phi);
bool forces(const CompatibilityFrame& frame, const HereditaryEvaluation& e, std::size_t x,
            const Formula& phi);

struct FrameCountermodel {
  HereditaryEvaluation evaluation;
  std::size_t world = 0;
};

struct FrameVerdict {
  bool valid = true;
  std::optional<FrameCountermodel> witness;

  explicit operator bool() const { return valid; }
};

inline constexpr std::uint64_t kMaxEvaluations = std::uint64_t{1} << 24;

/// Every world forcing lhs forces rhs, under every hereditary evaluation of
/// the consequent's variables. Evaluations are scanned in lexicographic order
/// of up-set lists; the witness world is the lowest index. Throws SizeError
/// when (#up-sets)^|vars| exceeds `max_evaluations`.
FrameVerdict frame_valid(const CompatibilityFrame& frame, const Consequent& c,
                         std::uint64_t max_evaluations = kMaxEvaluations);

struct ConditionResult {
  bool holds = true;
  std::vector<std::size_t> witness;  // worlds refuting the condition

  explicit operator bool() const { return holds; }
};

/// xCy -> yCx. Witness (x, y).
ConditionResult check_condition_dni(const CompatibilityFrame& frame);
/// For all x some y with xCy and every C-successor z of y below x. Witness (x).
ConditionResult check_condition_dne(const CompatibilityFrame& frame);
/// For all x: xCx, or every C-successor of x is below x. Witness (x, y).
ConditionResult check_condition_kleene(const CompatibilityFrame& frame);
bool is_kleene_frame(const CompatibilityFrame& frame);

/// Every compatibility frame with 1..max_worlds worlds, one per isomorphism
/// class. Worlds are named w0, w1, ... Throws SizeError above 4 worlds.
std::vector<CompatibilityFrame> enumerate_frames(std::size_t max_worlds);
std::vector<CompatibilityFrame> enumerate_kleene_frames(std::size_t max_worlds);

struct Countermodel {
  CompatibilityFrame frame;
  HereditaryEvaluation evaluation;
  std::size_t world = 0;
};

/// The first Kleene frame (by size, then enumeration order) refuting c.
/// A search result, not a proof of derivability when nothing is found.
std::optional<Countermodel> countermodel_search(const Consequent& c, std::size_t max_worlds = 4);
std::optional<Countermodel> countermodel_search(const Consequent& c,
                                                const std::vector<CompatibilityFrame>& frames);

}  // namespace kleene

#endif  // KLEENE_PERP_HPP_
