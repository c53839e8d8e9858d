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

#include "kleene/formula.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "kleene/errors.hpp"

namespace kleene {

Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(Node{Connective::Top, {}, {}}));
  return t;
}

Formula Formula::bot() {
  static const Formula b(std::make_shared<const Node>(Node{Connective::Bot, {}, {}}));
  return b;
}

Formula Formula::var(std::string name) {
  if (!is_identifier(name)) throw PreconditionError("invalid variable name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Connective::Var, std::move(name), {}}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::And, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Or, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::neg(Formula child) {
  return Formula(std::make_shared<const Node>(Node{Connective::Neg, {}, {std::move(child)}}));
}

const Formula& Formula::left() const {
  if (node_->operands.empty()) throw PreconditionError("atomic formula has no operands");
  return node_->operands[0];
}

const Formula& Formula::right() const {
  if (node_->operands.size() < 2) throw PreconditionError("formula has no right operand");
  return node_->operands[1];
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& op : node_->operands) d = std::max(d, op.depth() + 1);
  return d;
}

std::size_t Formula::size() const {
  std::size_t s = 1;
  for (const auto& op : node_->operands) s += op.size();
  return s;
}

namespace {

void collect(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Var:
      out.insert(f.name());
      break;
    case Connective::And:
    case Connective::Or:
      collect(f.left(), out);
      collect(f.right(), out);
      break;
    case Connective::Neg:
      collect(f.child(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<std::string> Formula::variables() const {
  std::set<std::string> vars;
  collect(*this, vars);
  return {vars.begin(), vars.end()};
}

Formula Formula::substitute(const std::map<std::string, Formula>& sigma) const {
  switch (kind()) {
    case Connective::Var: {
      auto it = sigma.find(name());
      return it == sigma.end() ? *this : it->second;
    }
    case Connective::And:
      return conj(left().substitute(sigma), right().substitute(sigma));
    case Connective::Or:
      return disj(left().substitute(sigma), right().substitute(sigma));
    case Connective::Neg:
      return neg(child().substitute(sigma));
    default:
      return *this;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  const auto& x = a.node_->operands;
  const auto& y = b.node_->operands;
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

bool is_identifier(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

// --- parsing -----------------------------------------------------------------------

namespace {

enum class Tok { LParen, RParen, Neg, And, Or, Top, Bot, Ident, Turnstile, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

struct Alias {
  std::string_view spelling;
  Tok kind;
};

// Longer spellings first so "|-" wins over "|".
constexpr Alias kSymbols[] = {
    {"|-", Tok::Turnstile}, {"⊢", Tok::Turnstile}, {"~", Tok::Neg},
    {"∼", Tok::Neg},   {"¬", Tok::Neg},       {"&", Tok::And},
    {"∧", Tok::And},   {"|", Tok::Or},             {"∨", Tok::Or},
    {"⊤", Tok::Top},   {"⊥", Tok::Bot},       {"(", Tok::LParen},
    {")", Tok::RParen},
};

bool word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& sym : kSymbols) {
      if (text.substr(i, sym.spelling.size()) == sym.spelling) {
        out.push_back({sym.kind, i, std::string(sym.spelling)});
        i += sym.spelling.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (word == "T")
        out.push_back({Tok::Top, i, word});
      else if (word == "F")
        out.push_back({Tok::Bot, i, word});
      else if (is_identifier(word))
        out.push_back({Tok::Ident, i, word});
      else if (word[0] >= 'A' && word[0] <= 'Z')
        throw ParseError("invalid identifier '" + word + "' (only T and F may start uppercase)", i);
      else
        throw ParseError("invalid identifier '" + word + "'", i);
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, text.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula formula() { return disjunction(); }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    const auto& t = peek();
    throw ParseError(message + (t.kind == Tok::End ? " but reached end of input"
                                                   : " but found '" + t.text + "'"),
                     t.pos);
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Or) {
      ++pos_;
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Neg:
        ++pos_;
        return Formula::neg(unary());
      case Tok::Top:
        ++pos_;
        return Formula::top();
      case Tok::Bot:
        ++pos_;
        return Formula::bot();
      case Tok::Ident:
        ++pos_;
        return Formula::var(t.text);
      case Tok::LParen: {
        ++pos_;
        Formula f = disjunction();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        fail("expected a formula");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(Connective k) {
  switch (k) {
    case Connective::Or:
      return 1;
    case Connective::And:
      return 2;
    case Connective::Neg:
      return 3;
    default:
      return 4;
  }
}

void print(const Formula& f, int context, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < context;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::Top:
      out += 'T';
      break;
    case Connective::Bot:
      out += 'F';
      break;
    case Connective::Var:
      out += f.name();
      break;
    case Connective::Neg:
      out += '~';
      print(f.child(), 3, out);
      break;
    case Connective::And:
      print(f.left(), 2, out);
      out += " & ";
      print(f.right(), 3, out);
      break;
    case Connective::Or:
      print(f.left(), 1, out);
      out += " | ";
      print(f.right(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect(Tok::End, "end of input");
  return f;
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

std::vector<std::string> Consequent::variables() const {
  std::set<std::string> vars;
  collect(lhs, vars);
  collect(rhs, vars);
  return {vars.begin(), vars.end()};
}

Consequent Consequent::substitute(const std::map<std::string, Formula>& sigma) const {
  return {lhs.substitute(sigma), rhs.substitute(sigma)};
}

Consequent parse_consequent(std::string_view text) {
  Parser p(text);
  Formula lhs = p.formula();
  p.expect(Tok::Turnstile, "'|-'");
  Formula rhs = p.formula();
  p.expect(Tok::End, "end of input");
  return {std::move(lhs), std::move(rhs)};
}

std::string to_string(const Consequent& c) { return to_string(c.lhs) + " |- " + to_string(c.rhs); }

// --- random generation -----------------------------------------------------------

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& variables,
                       std::size_t max_depth) {
  if (variables.empty()) throw PreconditionError("random_formula needs at least one variable");
  std::uniform_int_distribution<int> percent(0, 99);
  std::uniform_int_distribution<std::size_t> pick_var(0, variables.size() - 1);
  if (max_depth == 0 || percent(rng) < 20) {
    const int r = percent(rng);
    if (r < 5) return Formula::top();
    if (r < 10) return Formula::bot();
    return Formula::var(variables[pick_var(rng)]);
  }
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return Formula::neg(random_formula(rng, variables, max_depth - 1));
    case 1: {
      auto l = random_formula(rng, variables, max_depth - 1);
      return Formula::conj(std::move(l), random_formula(rng, variables, max_depth - 1));
    }
    default: {
      auto l = random_formula(rng, variables, max_depth - 1);
      return Formula::disj(std::move(l), random_formula(rng, variables, max_depth - 1));
    }
  }
}

Consequent random_consequent(std::mt19937_64& rng, const std::vector<std::string>& variables,
                             std::size_t max_depth) {
  auto lhs = random_formula(rng, variables, max_depth);
  return {std::move(lhs), random_formula(rng, variables, max_depth)};
}

}  // namespace kleene
