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

#include "kleene/agreement.hpp"

#include <random>
#include <set>

#include "kleene/enumerate.hpp"
#include "kleene/errors.hpp"
#include "kleene/roughsets.hpp"

namespace kleene {

std::vector<FleetMember> algebra_fleet() {
  std::vector<FleetMember> fleet;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto interval = interval_algebra(boolean_power(n));
    fleet.push_back({"(2^" + std::to_string(n) + ")^[2]", interval.algebra, false});
  }
  for (std::size_t n = 1; n <= 3; ++n)
    fleet.push_back({"3^" + std::to_string(n), power_algebra(chain3(), n).algebra, false});
  for (auto& k : enumerate_kleene_algebras(8)) {
    const bool boolean = k.is_boolean();
    std::string name = k.name();
    fleet.push_back({std::move(name), std::move(k), boolean});
  }
  return fleet;
}

std::vector<FleetMember> rough_fleet(std::size_t max_points) {
  std::vector<FleetMember> fleet;
  std::set<std::size_t> block_counts;
  for (const auto& space : enumerate_spaces(max_points)) {
    if (!block_counts.insert(space.blocks().size()).second) continue;
    auto saturated = saturate_space(space);
    auto family = generalized_family(saturated.space);
    fleet.push_back({"RS' of " + std::to_string(space.blocks().size()) + "-block space",
                     std::move(family.algebra), false});
  }
  return fleet;
}

FleetMember mutant_member() {
  // The 2x2 lattice whose complement table has been overwritten so that the
  // two atoms are fixed points.
  const auto boolean = boolean_power(2);
  std::vector<Elem> neg = {3, 1, 2, 0};
  return {"mutant", DeMorganAlgebra(boolean.lattice(), std::move(neg), "mutant"), false};
}

std::vector<Disagreement> check_algebras(const Consequent& c, const Decision& decision,
                                         const std::vector<FleetMember>& members) {
  std::vector<Disagreement> out;
  for (const auto& m : members) {
    const Verdict v = entails_algebra(m.algebra, c);
    if (decision.derivable() && !v.valid)
      out.push_back({0, to_string(c), m.name,
                     "decides VALID but fails in the algebra: " + render(v, m.algebra)});
    else if (!decision.derivable() && v.valid && !m.boolean)
      out.push_back({0, to_string(c), m.name,
                     "decides INVALID (" + render(decision.tf, three()) +
                         ") but holds in the non-Boolean algebra"});
  }
  return out;
}

std::vector<Disagreement> check_frames(const Consequent& c, const Decision& decision,
                                       const std::vector<CompatibilityFrame>& kleene_frames) {
  std::vector<Disagreement> out;
  if (!decision.derivable()) return out;
  for (std::size_t i = 0; i < kleene_frames.size(); ++i) {
    const auto verdict = frame_valid(kleene_frames[i], c);
    if (!verdict.valid)
      out.push_back({0, to_string(c), "Kleene frame #" + std::to_string(i),
                     "decides VALID but fails at world " +
                         kleene_frames[i].world(verdict.witness->world)});
  }
  return out;
}

std::vector<std::string> variable_names(std::size_t n) {
  if (n == 0 || n > 11) throw PreconditionError("between 1 and 11 variables are supported");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('p' + i)));
  return out;
}

FuzzReport run_fuzz(const FuzzOptions& options) {
  FuzzReport report{options, 0, 0, {}};
  auto algebras = algebra_fleet();
  if (options.inject_mutant) algebras.push_back(mutant_member());
  const auto rough = rough_fleet(options.max_points);
  const auto frames = enumerate_kleene_frames(options.max_worlds);
  const auto vars = variable_names(options.variables);

  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.formulas; ++i) {
    const Consequent c = random_consequent(rng, vars, options.depth);
    const Decision d = decide(c);
    if (d.derivable()) ++report.valid;
    auto found = check_algebras(c, d, algebras);
    auto more = check_algebras(c, d, rough);
    found.insert(found.end(), more.begin(), more.end());
    more = check_frames(c, d, frames);
    found.insert(found.end(), more.begin(), more.end());
    if (found.empty()) ++report.agreed;
    for (auto& dis : found) {
      dis.index = i;
      report.disagreements.push_back(std::move(dis));
    }
  }
  return report;
}

}  // namespace kleene
