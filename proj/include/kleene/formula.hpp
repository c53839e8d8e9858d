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

/// \file formula.hpp
/// Propositional formulas over T, F, variables, &, | and ~; the consequent
/// pair `lhs |- rhs`; parsing, printing and random generation.
///
/// Surface syntax: `~` binds tightest, then `&`, then `|`; both binary
/// operators are left-associative. Identifiers match [a-z][a-z0-9_]*.
/// The Unicode forms ∼ ¬ ∧ ∨ ⊤ ⊥ ⊢ are accepted on input.

#ifndef KLEENE_FORMULA_HPP_
#define KLEENE_FORMULA_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace kleene {

enum class Connective { Top, Bot, Var, And, Or, Neg };

/// Immutable formula tree with shared subterms.
class Formula {
 public:
  static Formula top();
  static Formula bot();
  /// Throws PreconditionError unless `name` is a valid identifier.
  static Formula var(std::string name);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula neg(Formula child);

  Connective kind() const { return node_->kind; }
  /// Variable name; empty for other connectives.
  const std::string& name() const { return node_->name; }
  /// Left operand, or the operand of a negation.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& child() const { return left(); }

  std::size_t depth() const;
  std::size_t size() const;
  /// Distinct variable names, sorted.
  std::vector<std::string> variables() const;
  /// Replaces variables by formulas; unmapped variables stay.
  Formula substitute(const std::map<std::string, Formula>& sigma) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::vector<Formula> operands;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

bool is_identifier(std::string_view name);

/// Throws ParseError with the byte offset of the offending token.
Formula parse_formula(std::string_view text);

/// Minimal parenthesization; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

struct Consequent {
  Formula lhs;
  Formula rhs;

  std::vector<std::string> variables() const;
  Consequent substitute(const std::map<std::string, Formula>& sigma) const;

  friend bool operator==(const Consequent&, const Consequent&) = default;
};

/// `<formula> |- <formula>`.
Consequent parse_consequent(std::string_view text);
std::string to_string(const Consequent& c);

/// Uniformly chosen shapes up to `max_depth` over the given variables, with
/// constants appearing occasionally at the leaves.
Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& variables,
                       std::size_t max_depth);
Consequent random_consequent(std::mt19937_64& rng, const std::vector<std::string>& variables,
                             std::size_t max_depth);

}  // namespace kleene

#endif  // KLEENE_FORMULA_HPP_
