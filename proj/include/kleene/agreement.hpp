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

/// \file agreement.hpp
/// Cross-checks between the three-valued decision procedure and the other
/// semantics: validity in concrete Kleene algebras, in rough-set algebras,
/// and on finite Kleene frames.
///
/// A consequent that decides VALID must hold in every member. One that
/// decides INVALID must fail in every member that is not Boolean: a Boolean
/// algebra validates extra consequents such as p & ~p |- q, while every
/// non-Boolean Kleene algebra contains a copy of the three-element chain.

#ifndef KLEENE_AGREEMENT_HPP_
#define KLEENE_AGREEMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kleene/algebra.hpp"
#include "kleene/formula.hpp"
#include "kleene/perp.hpp"
#include "kleene/semantics.hpp"

namespace kleene {

struct FleetMember {
  std::string name;
  DeMorganAlgebra algebra;
  bool boolean = false;
};

/// Interval algebras of 2^1..2^4, the powers 3^1..3^3, and every enumerated
/// Kleene algebra with 2..8 elements.
std::vector<FleetMember> algebra_fleet();

/// R' = RS' of the saturated spaces over at most max_points points. R' only
/// depends on the number of blocks, so there is one member per block count.
std::vector<FleetMember> rough_fleet(std::size_t max_points = 4);

/// The four-element lattice with a corrupted negation that fixes both
/// middle elements. It is De Morgan but not Kleene.
FleetMember mutant_member();

struct Disagreement {
  std::size_t index = 0;  // consequent number within a run
  std::string consequent;
  std::string source;     // fleet member or frame description
  std::string detail;
};

/// Disagreements between `decision` and validity in each member.
std::vector<Disagreement> check_algebras(const Consequent& c, const Decision& decision,
                                         const std::vector<FleetMember>& members);

/// Soundness on frames: a derivable consequent holds on every frame given.
std::vector<Disagreement> check_frames(const Consequent& c, const Decision& decision,
                                       const std::vector<CompatibilityFrame>& kleene_frames);

struct FuzzOptions {
  std::size_t formulas = 200;
  std::size_t depth = 5;
  std::size_t variables = 3;
  std::uint64_t seed = 20261019;
  std::size_t max_points = 4;
  std::size_t max_worlds = 4;
  bool inject_mutant = false;
};

struct FuzzReport {
  FuzzOptions options;
  std::size_t agreed = 0;
  std::size_t valid = 0;  // consequents deciding VALID
  std::vector<Disagreement> disagreements;

  bool ok() const { return disagreements.empty(); }
};

FuzzReport run_fuzz(const FuzzOptions& options);

/// p, q, r, ... (the first n letters from p on).
std::vector<std::string> variable_names(std::size_t n);

}  // namespace kleene

#endif  // KLEENE_AGREEMENT_HPP_
