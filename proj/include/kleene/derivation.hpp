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

/// \file derivation.hpp
/// Hilbert-style derivations of consequents. Postulates are numbered 1-15:
///
///   1  a |- a                      9  ~a & ~b |- ~(a | b)
///   2  a |- b, b |- c / a |- c    10  a |- T
///   3  a & b |- a,  a & b |- b    11  F |- a
///   4  a |- b, a |- c / a |- b & c 12  T |- ~F
///   5  a |- c, b |- c / a | b |- c 13  a |- ~~a
///   6  a |- a | b,  b |- a | b    14  ~~a |- a
///   7  a & (b | c) |- (a | b) & (a | c)
///   8  a |- b / ~b |- ~a          15  a & ~a |- b | ~b
///
/// 2, 4, 5 and 8 are rules citing earlier steps (in the order shown above);
/// the rest are axiom schemes matched up to substitution.

#ifndef KLEENE_DERIVATION_HPP_
#define KLEENE_DERIVATION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kleene/formula.hpp"

namespace kleene {

struct Justification {
  enum class Kind { Axiom, Rule };
  Kind kind = Kind::Axiom;
  int postulate = 1;
  std::vector<std::size_t> cites;  // 1-based step numbers
};

struct Step {
  Consequent consequent;
  Justification justification;
};

struct Derivation {
  std::vector<Step> steps;  // step k has number k+1
};

struct DerivationReport {
  bool ok = true;
  std::size_t step = 0;  // 1-based number of the first invalid step
  std::string reason;

  explicit operator bool() const { return ok; }
};

bool is_axiom_postulate(int postulate);
bool is_rule_postulate(int postulate);

/// Whether `c` is an instance of axiom scheme `postulate`.
bool matches_axiom(int postulate, const Consequent& c);

/// Validates every step; an empty derivation is rejected.
DerivationReport check_derivation(const Derivation& d);

/// Numbered lines `N: <lhs> |- <rhs> ; axK` or `; ruleK(i,j)`. Blank lines and
/// lines starting with `#` are skipped. Throws ParseError with the line
/// number in the message and the byte offset within the input.
Derivation parse_derivation(std::string_view text);
std::string to_string(const Derivation& d);

/// A derivation of ~(alpha & beta) |- ~alpha | ~beta from contraposition,
/// double negation elimination, the disjunction axioms and conjunction
/// introduction.
Derivation derive_de_morgan_dual(const Formula& alpha, const Formula& beta);

}  // namespace kleene

#endif  // KLEENE_DERIVATION_HPP_
