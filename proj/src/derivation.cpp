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

#include "kleene/derivation.hpp"

#include <charconv>
#include <map>
#include <utility>

#include "kleene/errors.hpp"

namespace kleene {

namespace {

// Scheme variables are the pattern's own variables a, b, c.
const std::map<int, std::vector<Consequent>>& schemes() {
  static const auto table = [] {
    std::map<int, std::vector<std::string>> text = {
        {1, {"a |- a"}},
        {3, {"a & b |- a", "a & b |- b"}},
        {6, {"a |- a | b", "b |- a | b"}},
        {7, {"a & (b | c) |- (a | b) & (a | c)"}},
        {9, {"~a & ~b |- ~(a | b)"}},
        {10, {"a |- T"}},
        {11, {"F |- a"}},
        {12, {"T |- ~F"}},
        {13, {"a |- ~~a"}},
        {14, {"~~a |- a"}},
        {15, {"a & ~a |- b | ~b"}},
    };
    std::map<int, std::vector<Consequent>> out;
    for (const auto& [k, forms] : text)
      for (const auto& form : forms) out[k].push_back(parse_consequent(form));
    return out;
  }();
  return table;
}

bool match(const Formula& pattern, const Formula& target, std::map<std::string, Formula>& binding) {
  if (pattern.kind() == Connective::Var) {
    auto [it, inserted] = binding.emplace(pattern.name(), target);
    return inserted || it->second == target;
  }
  if (pattern.kind() != target.kind()) return false;
  switch (pattern.kind()) {
    case Connective::And:
    case Connective::Or:
      return match(pattern.left(), target.left(), binding) &&
             match(pattern.right(), target.right(), binding);
    case Connective::Neg:
      return match(pattern.child(), target.child(), binding);
    default:
      return true;
  }
}

DerivationReport fail(std::size_t step, std::string reason) {
  return {false, step, std::move(reason)};
}

std::string show(const Consequent& c) { return "'" + to_string(c) + "'"; }

}  // namespace

bool is_axiom_postulate(int postulate) { return schemes().count(postulate) != 0; }

bool is_rule_postulate(int postulate) {
  return postulate == 2 || postulate == 4 || postulate == 5 || postulate == 8;
}

bool matches_axiom(int postulate, const Consequent& c) {
  auto it = schemes().find(postulate);
  if (it == schemes().end()) return false;
  for (const auto& scheme : it->second) {
    std::map<std::string, Formula> binding;
    if (match(scheme.lhs, c.lhs, binding) && match(scheme.rhs, c.rhs, binding)) return true;
  }
  return false;
}

DerivationReport check_derivation(const Derivation& d) {
  if (d.steps.empty()) return fail(0, "derivation has no steps");
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const std::size_t number = k + 1;
    const auto& [c, just] = d.steps[k];
    if (just.kind == Justification::Kind::Axiom) {
      if (!is_axiom_postulate(just.postulate))
        return fail(number, "postulate " + std::to_string(just.postulate) + " is not an axiom");
      if (!just.cites.empty()) return fail(number, "axioms cite no steps");
      if (!matches_axiom(just.postulate, c))
        return fail(number, show(c) + " is not an instance of postulate " +
                                std::to_string(just.postulate));
      continue;
    }
    if (!is_rule_postulate(just.postulate))
      return fail(number, "postulate " + std::to_string(just.postulate) + " is not a rule");
    const std::size_t arity = just.postulate == 8 ? 1 : 2;
    if (just.cites.size() != arity)
      return fail(number, "rule " + std::to_string(just.postulate) + " cites " +
                              std::to_string(arity) + " step(s)");
    for (std::size_t cite : just.cites)
      if (cite == 0 || cite >= number)
        return fail(number, "cited step " + std::to_string(cite) + " does not precede step " +
                                std::to_string(number));
    const Consequent& p = d.steps[just.cites[0] - 1].consequent;
    const Consequent* q = arity == 2 ? &d.steps[just.cites[1] - 1].consequent : nullptr;
    bool ok = false;
    switch (just.postulate) {
      case 2:  // a |- b, b |- c / a |- c
        ok = p.rhs == q->lhs && c.lhs == p.lhs && c.rhs == q->rhs;
        break;
      case 4:  // a |- b, a |- c / a |- b & c
        ok = p.lhs == q->lhs && c.lhs == p.lhs && c.rhs == Formula::conj(p.rhs, q->rhs);
        break;
      case 5:  // a |- c, b |- c / a | b |- c
        ok = p.rhs == q->rhs && c.rhs == p.rhs && c.lhs == Formula::disj(p.lhs, q->lhs);
        break;
      case 8:  // a |- b / ~b |- ~a
        ok = c.lhs == Formula::neg(p.rhs) && c.rhs == Formula::neg(p.lhs);
        break;
    }
    if (!ok)
      return fail(number, show(c) + " does not follow by rule " + std::to_string(just.postulate) +
                              " from the cited steps");
  }
  return {};
}

// --- text format -----------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_number(std::string_view s, std::size_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

Justification parse_justification(std::string_view s, std::size_t line, std::size_t offset) {
  s = trim(s);
  auto bad = [&](const std::string& why) -> ParseError {
    return ParseError("line " + std::to_string(line) + ": " + why, offset);
  };
  Justification j;
  std::size_t head;
  if (s.substr(0, 2) == "ax") {
    j.kind = Justification::Kind::Axiom;
    head = 2;
  } else if (s.substr(0, 4) == "rule") {
    j.kind = Justification::Kind::Rule;
    head = 4;
  } else {
    throw bad("justification must be axK or ruleK(...)");
  }
  const auto open = s.find('(');
  std::size_t id = 0;
  if (!parse_number(s.substr(head, open == std::string_view::npos ? s.npos : open - head), id))
    throw bad("missing postulate number");
  j.postulate = static_cast<int>(id);
  if (open != std::string_view::npos) {
    if (s.back() != ')') throw bad("unclosed citation list");
    auto inner = s.substr(open + 1, s.size() - open - 2);
    while (true) {
      const auto comma = inner.find(',');
      std::size_t cite = 0;
      if (!parse_number(inner.substr(0, comma), cite)) throw bad("bad step citation");
      j.cites.push_back(cite);
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
  }
  if (j.kind == Justification::Kind::Rule && j.cites.empty()) throw bad("rule without citations");
  return j;
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  Derivation d;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    const auto end = std::min(text.find('\n', offset), text.size());
    const std::string_view raw = text.substr(offset, end - offset);
    const std::size_t line_offset = offset;
    ++line_no;
    offset = end + 1;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto bad = [&](const std::string& why) {
      return ParseError("line " + std::to_string(line_no) + ": " + why, line_offset);
    };
    const auto colon = line.find(':');
    std::size_t number = 0;
    if (colon == std::string_view::npos || !parse_number(line.substr(0, colon), number))
      throw bad("expected 'N:' step number");
    if (number != d.steps.size() + 1)
      throw bad("step number " + std::to_string(number) + " out of sequence");
    const auto semi = line.rfind(';');
    if (semi == std::string_view::npos || semi < colon) throw bad("missing '; justification'");
    Consequent c = [&] {
      try {
        return parse_consequent(line.substr(colon + 1, semi - colon - 1));
      } catch (const ParseError& e) {
        throw bad(e.what());
      }
    }();
    d.steps.push_back({std::move(c), parse_justification(line.substr(semi + 1), line_no, line_offset)});
  }
  return d;
}

std::string to_string(const Derivation& d) {
  std::string out;
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const auto& [c, j] = d.steps[k];
    out += std::to_string(k + 1) + ": " + to_string(c) + " ; ";
    out += (j.kind == Justification::Kind::Axiom ? "ax" : "rule") + std::to_string(j.postulate);
    if (!j.cites.empty()) {
      out += '(';
      for (std::size_t i = 0; i < j.cites.size(); ++i)
        out += (i ? "," : "") + std::to_string(j.cites[i]);
      out += ')';
    }
    out += '\n';
  }
  return out;
}

Derivation derive_de_morgan_dual(const Formula& alpha, const Formula& beta) {
  using F = Formula;
  const F na = F::neg(alpha);
  const F nb = F::neg(beta);
  const F disj = F::disj(na, nb);
  const F ndisj = F::neg(disj);
  auto ax = [](int k) { return Justification{Justification::Kind::Axiom, k, {}}; };
  auto rule = [](int k, std::vector<std::size_t> cites) {
    return Justification{Justification::Kind::Rule, k, std::move(cites)};
  };
  Derivation d;
  d.steps = {
      {{na, disj}, ax(6)},                                     // 1
      {{ndisj, F::neg(na)}, rule(8, {1})},                     // 2
      {{F::neg(na), alpha}, ax(14)},                           // 3
      {{ndisj, alpha}, rule(2, {2, 3})},                       // 4
      {{nb, disj}, ax(6)},                                     // 5
      {{ndisj, F::neg(nb)}, rule(8, {5})},                     // 6
      {{F::neg(nb), beta}, ax(14)},                            // 7
      {{ndisj, beta}, rule(2, {6, 7})},                        // 8
      {{ndisj, F::conj(alpha, beta)}, rule(4, {4, 8})},        // 9
      {{F::neg(F::conj(alpha, beta)), F::neg(ndisj)}, rule(8, {9})},  // 10
      {{F::neg(ndisj), disj}, ax(14)},                         // 11
      {{F::neg(F::conj(alpha, beta)), disj}, rule(2, {10, 11})},      // 12
  };
  return d;
}

}  // namespace kleene
