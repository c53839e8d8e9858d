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

#include "kleene/semantics.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <utility>

#include "kleene/errors.hpp"
#include "kleene/representation.hpp"

namespace kleene {

char to_char(ThreeValue v) {
  switch (v) {
    case ThreeValue::f:
      return 'f';
    case ThreeValue::u:
      return 'u';
    default:
      return 't';
  }
}

const KleeneAlgebra& three() {
  static const KleeneAlgebra algebra = three_valued();
  return algebra;
}

Elem eval(const DeMorganAlgebra& algebra, const Assignment& v, const Formula& phi) {
  switch (phi.kind()) {
    case Connective::Top:
      return algebra.top();
    case Connective::Bot:
      return algebra.bottom();
    case Connective::Var: {
      auto it = v.find(phi.name());
      if (it == v.end()) throw PreconditionError("variable " + phi.name() + " is unassigned");
      if (it->second >= algebra.size())
        throw PreconditionError("value of " + phi.name() + " is outside the algebra");
      return it->second;
    }
    case Connective::And:
      return algebra.meet(eval(algebra, v, phi.left()), eval(algebra, v, phi.right()));
    case Connective::Or:
      return algebra.join(eval(algebra, v, phi.left()), eval(algebra, v, phi.right()));
    case Connective::Neg:
      return algebra.neg(eval(algebra, v, phi.child()));
  }
  return algebra.bottom();
}

std::string render(const Verdict& verdict, const DeMorganAlgebra& algebra) {
  if (verdict.valid) return "VALID";
  std::string out = "INVALID witness:";
  bool first = true;
  for (const auto& [name, value] : verdict.witness) {
    out += (first ? " " : ", ") + name + "=" + algebra.label(value);
    first = false;
  }
  return out;
}

namespace {

// A consequent flattened to a hash-consed instruction list. Each instruction
// records the highest variable position it depends on, so that when only the
// last few variables of an odometer change, only their dependents are
// recomputed.
class Compiled {
 public:
  explicit Compiled(const Consequent& c) : variables_(c.variables()) {
    lhs_ = compile(c.lhs);
    rhs_ = compile(c.rhs);
    // Stable sort by level keeps dependencies ahead of their users.
    std::vector<std::size_t> order(ops_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ops_[a].level < ops_[b].level; });
    std::vector<std::size_t> position(ops_.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    std::vector<Op> sorted;
    for (std::size_t i : order) {
      Op op = ops_[i];
      if (op.kind == Connective::And || op.kind == Connective::Or || op.kind == Connective::Neg)
        op.a = position[op.a];
      if (op.kind == Connective::And || op.kind == Connective::Or) op.b = position[op.b];
      sorted.push_back(op);
    }
    ops_ = std::move(sorted);
    lhs_ = position[lhs_];
    rhs_ = position[rhs_];
    // first_at_level_[k]: first instruction depending on variable position >= k.
    first_at_level_.assign(variables_.size() + 2, ops_.size());
    for (std::size_t i = ops_.size(); i-- > 0;)
      for (std::size_t k = 0; k <= ops_[i].level; ++k) first_at_level_[k] = i;
  }

  const std::vector<std::string>& variables() const { return variables_; }

  // Calls visit(values, lhs, rhs) for every assignment in lexicographic order
  // until it returns false. Returns the assignment that stopped the scan.
  std::optional<std::vector<Elem>> scan(
      const DeMorganAlgebra& algebra,
      const std::function<bool(Elem lhs, Elem rhs)>& accept) const {
    const std::size_t n = variables_.size();
    const auto size = static_cast<Elem>(algebra.size());
    std::vector<Elem> digits(n, 0);
    std::vector<Elem> values(ops_.size(), 0);
    std::size_t changed_from = 0;  // variable position of the most significant change
    while (true) {
      for (std::size_t i = first_at_level_[changed_from]; i < ops_.size(); ++i) {
        const Op& op = ops_[i];
        switch (op.kind) {
          case Connective::Top:
            values[i] = algebra.top();
            break;
          case Connective::Bot:
            values[i] = algebra.bottom();
            break;
          case Connective::Var:
            values[i] = digits[op.a];
            break;
          case Connective::And:
            values[i] = algebra.meet(values[op.a], values[op.b]);
            break;
          case Connective::Or:
            values[i] = algebra.join(values[op.a], values[op.b]);
            break;
          case Connective::Neg:
            values[i] = algebra.neg(values[op.a]);
            break;
        }
      }
      if (!accept(values[lhs_], values[rhs_])) return digits;
      // Odometer: the last variable varies fastest.
      std::size_t k = n;
      while (k > 0) {
        if (++digits[k - 1] < size) break;
        digits[k - 1] = 0;
        --k;
      }
      if (k == 0) return std::nullopt;
      changed_from = k;  // level of variable k-1 is k
    }
  }

  Assignment assignment(const std::vector<Elem>& digits) const {
    Assignment v;
    for (std::size_t i = 0; i < variables_.size(); ++i) v[variables_[i]] = digits[i];
    return v;
  }

 private:
  struct Op {
    Connective kind;
    std::size_t a = 0;  // operand index, or variable position for Var
    std::size_t b = 0;
    std::size_t level = 0;  // 0 for constants, 1 + highest variable position otherwise

    auto key() const { return std::tuple(kind, a, b); }
  };

  std::size_t intern(Op op) {
    auto [it, inserted] = index_.emplace(op.key(), ops_.size());
    if (inserted) ops_.push_back(op);
    return it->second;
  }

  std::size_t compile(const Formula& f) {
    switch (f.kind()) {
      case Connective::Top:
      case Connective::Bot:
        return intern({f.kind(), 0, 0, 0});
      case Connective::Var: {
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(variables_.begin(), variables_.end(), f.name()) - variables_.begin());
        return intern({Connective::Var, pos, 0, pos + 1});
      }
      case Connective::Neg: {
        const auto a = compile(f.child());
        return intern({Connective::Neg, a, 0, ops_[a].level});
      }
      default: {
        const auto a = compile(f.left());
        const auto b = compile(f.right());
        return intern({f.kind(), a, b, std::max(ops_[a].level, ops_[b].level)});
      }
    }
  }

  std::vector<std::string> variables_;
  std::vector<Op> ops_;
  std::map<std::tuple<Connective, std::size_t, std::size_t>, std::size_t> index_;
  std::vector<std::size_t> first_at_level_;
  std::size_t lhs_ = 0;
  std::size_t rhs_ = 0;
};

Verdict run(const DeMorganAlgebra& algebra, const Consequent& c,
            const std::function<bool(Elem, Elem)>& accept) {
  Compiled compiled(c);
  auto failure = compiled.scan(algebra, accept);
  if (!failure) return {};
  return {false, compiled.assignment(*failure)};
}

constexpr Elem kF = static_cast<Elem>(ThreeValue::f);
constexpr Elem kT = static_cast<Elem>(ThreeValue::t);

}  // namespace

Verdict entails_algebra(const DeMorganAlgebra& algebra, const Consequent& c,
                        std::uint64_t max_assignments) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < c.variables().size(); ++i) {
    count *= algebra.size();
    if (count > max_assignments)
      throw SizeError("more than " + std::to_string(max_assignments) + " assignments into " +
                      (algebra.name().empty() ? "the algebra" : algebra.name()));
  }
  return run(algebra, c, [&](Elem l, Elem r) { return algebra.leq(l, r); });
}

Verdict entails_t(const Consequent& c) {
  return run(three(), c, [](Elem l, Elem r) { return l != kT || r == kT; });
}

Verdict entails_f(const Consequent& c) {
  return run(three(), c, [](Elem l, Elem r) { return r != kF || l == kF; });
}

Verdict entails_tf(const Consequent& c) {
  Verdict t = entails_t(c);
  if (!t.valid) return t;
  return entails_f(c);
}

Decision decide(const Consequent& c) {
  Decision d{{}, entails_t(c), entails_f(c)};
  d.tf = !d.t.valid ? d.t : d.f;
  return d;
}

ThreeValue point_value(const IntervalAlgebra& interval, Elem x, std::size_t point) {
  const auto& [lo, hi] = interval.pair(x);
  const Elem bit = Elem{1} << point;
  if (lo & bit) return ThreeValue::t;
  if (hi & bit) return ThreeValue::u;
  return ThreeValue::f;
}

Assignment pointwise_transfer(const IntervalAlgebra& interval, const Assignment& v,
                              std::size_t point) {
  const std::size_t atoms = interval.base.atoms().size();
  if (interval.base.size() != (std::size_t{1} << atoms))
    throw PreconditionError("pointwise transfer needs a power-set interval algebra");
  if (point >= atoms) throw PreconditionError("point outside the universe");
  for (std::size_t i = 0; i < atoms; ++i)
    if (interval.base.atoms()[i] != (Elem{1} << i))
      throw PreconditionError("pointwise transfer needs boolean_power indexing");
  CarrierMap h(interval.algebra.size());
  for (Elem x = 0; x < h.size(); ++x) h[x] = static_cast<Elem>(point_value(interval, x, point));
  auto report = verify_homomorphism(h, interval.algebra, three());
  if (!report) throw InvariantViolation("v_x fails the " + report.clause + " clause");
  Assignment out;
  for (const auto& [name, value] : v) out[name] = h.at(value);
  return out;
}

}  // namespace kleene
