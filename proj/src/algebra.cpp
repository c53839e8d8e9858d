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

#include "kleene/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "kleene/errors.hpp"

namespace kleene {

namespace {

std::string tuple_text(const std::vector<Elem>& w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ')';
  return out.str();
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

void validate_structure(const AlgebraTables& t) {
  const std::size_t n = t.size;
  if (n == 0) throw StructureError("empty carrier");
  if (t.leq.size() != n * n) throw StructureError("order table is not total over the carrier");
  if (t.join.size() != n * n) throw StructureError("join table is not total over the carrier");
  if (t.meet.size() != n * n) throw StructureError("meet table is not total over the carrier");
  if (t.neg.size() != n) throw StructureError("negation table is not total over the carrier");
  auto in_range = [n](Elem e) { return e < n; };
  if (!std::all_of(t.join.begin(), t.join.end(), in_range))
    throw StructureError("join table holds an out-of-range index");
  if (!std::all_of(t.meet.begin(), t.meet.end(), in_range))
    throw StructureError("meet table holds an out-of-range index");
  if (!std::all_of(t.neg.begin(), t.neg.end(), in_range))
    throw StructureError("negation table holds an out-of-range index");
}

// Shared prefix of the Kleene and Boolean checkers: order, lattice, bounds,
// distributivity. Returns the bottom/top if they exist.
std::pair<std::optional<Elem>, std::optional<Elem>> check_lattice_part(const AlgebraTables& t,
                                                                       AxiomReport& report) {
  const std::size_t n = t.size;
  auto le = [&](Elem a, Elem b) { return t.leq[a * n + b] != 0; };
  auto jn = [&](Elem a, Elem b) { return t.join[a * n + b]; };
  auto mt = [&](Elem a, Elem b) { return t.meet[a * n + b]; };

  AxiomCheck order{"partial_order", true, {}};
  for (Elem a = 0; a < n && order.passed; ++a) {
    if (!le(a, a)) order = {"partial_order", false, {a}};
  }
  for (Elem a = 0; a < n && order.passed; ++a)
    for (Elem b = 0; b < n && order.passed; ++b) {
      if (a != b && le(a, b) && le(b, a)) order = {"partial_order", false, {a, b}};
      for (Elem c = 0; c < n && order.passed; ++c)
        if (le(a, b) && le(b, c) && !le(a, c)) order = {"partial_order", false, {a, b, c}};
    }
  report.checks.push_back(order);

  AxiomCheck lattice{"lattice", true, {}};
  for (Elem a = 0; a < n && lattice.passed; ++a)
    for (Elem b = 0; b < n && lattice.passed; ++b) {
      const Elem j = jn(a, b);
      const Elem m = mt(a, b);
      if (!le(a, j) || !le(b, j) || !le(m, a) || !le(m, b)) {
        lattice = {"lattice", false, {a, b}};
        break;
      }
      for (Elem c = 0; c < n; ++c) {
        if ((le(a, c) && le(b, c) && !le(j, c)) || (le(c, a) && le(c, b) && !le(c, m))) {
          lattice = {"lattice", false, {a, b, c}};
          break;
        }
      }
    }
  report.checks.push_back(lattice);

  std::optional<Elem> bottom;
  std::optional<Elem> top;
  for (Elem x = 0; x < n; ++x) {
    bool is_bottom = true;
    bool is_top = true;
    for (Elem y = 0; y < n; ++y) {
      is_bottom = is_bottom && le(x, y);
      is_top = is_top && le(y, x);
    }
    if (is_bottom && !bottom) bottom = x;
    if (is_top && !top) top = x;
  }
  report.checks.push_back({"bounds", bottom.has_value() && top.has_value(), {}});

  AxiomCheck distributive{"distributivity", true, {}};
  for (Elem a = 0; a < n && distributive.passed; ++a)
    for (Elem b = 0; b < n && distributive.passed; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mt(a, jn(b, c)) != jn(mt(a, b), mt(a, c))) {
          distributive = {"distributivity", false, {a, b, c}};
          break;
        }
  report.checks.push_back(distributive);
  return {bottom, top};
}

std::vector<Elem> lattice_negation_witness(const FiniteLattice& l, const std::vector<Elem>& neg,
                                           std::string& failed) {
  const std::size_t n = l.size();
  for (Elem a = 0; a < n; ++a)
    if (neg[a] >= n) {
      failed = "structure";
      return {a};
    }
  for (Elem a = 0; a < n; ++a)
    if (neg[neg[a]] != a) {
      failed = "involution";
      return {a};
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (neg[l.join(a, b)] != l.meet(neg[a], neg[b])) {
        failed = "de_morgan";
        return {a, b};
      }
  return {};
}

std::string describe_failure(const std::string& what, const std::vector<Elem>& witness) {
  return what + " fails with witness " + tuple_text(witness);
}

}  // namespace

// --- AxiomReport ------------------------------------------------------------

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

bool AxiomReport::passed(std::string_view axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return c.passed;
  return false;
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

AxiomReport check_kleene_axioms(const AlgebraTables& t) {
  validate_structure(t);
  AxiomReport report;
  auto [bottom, top] = check_lattice_part(t, report);
  const std::size_t n = t.size;
  auto le = [&](Elem a, Elem b) { return t.leq[a * n + b] != 0; };
  auto jn = [&](Elem a, Elem b) { return t.join[a * n + b]; };
  auto mt = [&](Elem a, Elem b) { return t.meet[a * n + b]; };
  const auto& neg = t.neg;

  AxiomCheck involution{"involution", true, {}};
  for (Elem a = 0; a < n; ++a)
    if (neg[neg[a]] != a) {
      involution = {"involution", false, {a}};
      break;
    }
  report.checks.push_back(involution);

  // ~(a | b) = ~a & ~b, the dual form of the De Morgan law; with involution
  // it also yields ~(a & b) = ~a | ~b and ~0 = 1.
  AxiomCheck de_morgan{"de_morgan", true, {}};
  for (Elem a = 0; a < n && de_morgan.passed; ++a)
    for (Elem b = 0; b < n; ++b)
      if (neg[jn(a, b)] != mt(neg[a], neg[b])) {
        de_morgan = {"de_morgan", false, {a, b}};
        break;
      }
  if (de_morgan.passed && bottom && top && neg[*bottom] != *top)
    de_morgan = {"de_morgan", false, {*bottom}};
  report.checks.push_back(de_morgan);

  AxiomCheck kleene{"kleene", true, {}};
  for (Elem a = 0; a < n && kleene.passed; ++a) {
    const Elem lhs = mt(a, neg[a]);
    for (Elem b = 0; b < n; ++b)
      if (!le(lhs, jn(b, neg[b]))) {
        kleene = {"kleene", false, {a, b}};
        break;
      }
  }
  report.checks.push_back(kleene);
  return report;
}

AxiomReport check_boolean_axioms(const AlgebraTables& t) {
  validate_structure(t);
  AxiomReport report;
  auto [bottom, top] = check_lattice_part(t, report);
  const std::size_t n = t.size;
  AxiomCheck join_c{"complement_join", bottom && top, {}};
  AxiomCheck meet_c{"complement_meet", bottom && top, {}};
  if (bottom && top) {
    for (Elem a = 0; a < n; ++a) {
      if (join_c.passed && t.join[a * n + t.neg[a]] != *top) join_c = {"complement_join", false, {a}};
      if (meet_c.passed && t.meet[a * n + t.neg[a]] != *bottom) meet_c = {"complement_meet", false, {a}};
    }
  }
  report.checks.push_back(join_c);
  report.checks.push_back(meet_c);
  return report;
}

// --- FiniteLattice -----------------------------------------------------------

FiniteLattice FiniteLattice::from_order(std::size_t n, std::vector<std::uint8_t> leq,
                                        std::vector<std::string> labels) {
  if (n == 0) throw StructureError("empty carrier");
  if (leq.size() != n * n) throw StructureError("order table is not total over the carrier");
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw StructureError("label count does not match carrier size");
  auto le = [&](Elem a, Elem b) { return leq[a * n + b] != 0; };
  for (Elem a = 0; a < n; ++a)
    if (!le(a, a)) throw StructureError("order is not reflexive at " + std::to_string(a));

  // up[a] / down[a] as bitsets; transitivity and antisymmetry via bitset ops.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> up(n, std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<std::uint64_t>> down(n, std::vector<std::uint64_t>(words, 0));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (le(a, b)) {
        up[a][b / 64] |= std::uint64_t{1} << (b % 64);
        down[b][a / 64] |= std::uint64_t{1} << (a % 64);
      }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      if (a != b && le(b, a))
        throw StructureError("order is not antisymmetric at (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
      for (std::size_t w = 0; w < words; ++w)
        if ((up[b][w] & ~up[a][w]) != 0)
          throw StructureError("order is not transitive through (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
    }

  std::map<std::vector<std::uint64_t>, Elem> by_up;
  std::map<std::vector<std::uint64_t>, Elem> by_down;
  for (Elem a = 0; a < n; ++a) {
    by_up.emplace(up[a], a);
    by_down.emplace(down[a], a);
  }

  FiniteLattice l;
  l.n_ = n;
  l.leq_ = std::move(leq);
  l.labels_ = std::move(labels);
  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  std::vector<std::uint64_t> scratch(words);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      // The least upper bound is the element whose up-set is exactly the set
      // of common upper bounds.
      for (std::size_t w = 0; w < words; ++w) scratch[w] = up[a][w] & up[b][w];
      auto j = by_up.find(scratch);
      if (j == by_up.end())
        throw StructureError("not a lattice: no join for (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
      for (std::size_t w = 0; w < words; ++w) scratch[w] = down[a][w] & down[b][w];
      auto m = by_down.find(scratch);
      if (m == by_down.end())
        throw StructureError("not a lattice: no meet for (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
      l.join_[a * n + b] = l.join_[b * n + a] = j->second;
      l.meet_[a * n + b] = l.meet_[b * n + a] = m->second;
    }

  l.bottom_ = 0;
  l.top_ = 0;
  for (Elem a = 1; a < n; ++a) {
    l.bottom_ = l.meet(l.bottom_, a);
    l.top_ = l.join(l.top_, a);
  }
  return l;
}

bool FiniteLattice::is_distributive() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      for (Elem c = 0; c < n_; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

std::vector<Elem> FiniteLattice::lower_covers(Elem x) const {
  std::vector<Elem> covers;
  for (Elem y = 0; y < n_; ++y) {
    if (y == x || !leq(y, x)) continue;
    bool covered = true;
    for (Elem z = 0; z < n_ && covered; ++z)
      if (z != x && z != y && leq(y, z) && leq(z, x)) covered = false;
    if (covered) covers.push_back(y);
  }
  return covers;
}

std::optional<Elem> FiniteLattice::find_label(std::string_view label) const {
  for (Elem a = 0; a < n_; ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

// --- DeMorganAlgebra / KleeneAlgebra ------------------------------------------

DeMorganAlgebra::DeMorganAlgebra(FiniteLattice lattice, std::vector<Elem> neg, std::string name)
    : lattice_(std::move(lattice)), neg_(std::move(neg)), name_(std::move(name)) {
  if (neg_.size() != lattice_.size())
    throw StructureError("negation table is not total over the carrier");
  if (!lattice_.is_distributive()) throw AxiomError("distributivity fails");
  std::string failed;
  auto witness = lattice_negation_witness(lattice_, neg_, failed);
  if (failed == "structure") throw StructureError("negation table holds an out-of-range index");
  if (!failed.empty()) throw AxiomError(describe_failure(failed, witness));
}

bool DeMorganAlgebra::is_kleene() const {
  const std::size_t n = size();
  // a & ~a <= b | ~b for all a, b iff every "contradiction" value lies below
  // every "tautology" value.
  for (Elem a = 0; a < n; ++a) {
    const Elem lhs = meet(a, neg(a));
    for (Elem b = 0; b < n; ++b)
      if (!leq(lhs, join(b, neg(b)))) return false;
  }
  return true;
}

bool DeMorganAlgebra::is_boolean() const {
  for (Elem a = 0; a < size(); ++a)
    if (join(a, neg(a)) != top() || meet(a, neg(a)) != bottom()) return false;
  return true;
}

AlgebraTables DeMorganAlgebra::tables() const {
  const std::size_t n = size();
  AlgebraTables t;
  t.size = n;
  t.leq.resize(n * n);
  t.join.resize(n * n);
  t.meet.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      t.leq[a * n + b] = leq(a, b) ? 1 : 0;
      t.join[a * n + b] = join(a, b);
      t.meet[a * n + b] = meet(a, b);
    }
  t.neg = neg_;
  return t;
}

KleeneAlgebra::KleeneAlgebra(DeMorganAlgebra base) : DeMorganAlgebra(std::move(base)) {
  const std::size_t n = size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!leq(meet(a, neg(a)), join(b, neg(b))))
        throw AxiomError(describe_failure("kleene", {a, b}));
}

KleeneAlgebra::KleeneAlgebra(FiniteLattice lattice, std::vector<Elem> neg, std::string name)
    : KleeneAlgebra(DeMorganAlgebra(std::move(lattice), std::move(neg), std::move(name))) {}

// --- BooleanAlgebra -----------------------------------------------------------

BooleanAlgebra::BooleanAlgebra(FiniteLattice lattice, std::vector<Elem> complement,
                               std::string name)
    : lattice_(std::move(lattice)), complement_(std::move(complement)), name_(std::move(name)) {
  if (complement_.size() != lattice_.size())
    throw StructureError("complement table is not total over the carrier");
  for (Elem c : complement_)
    if (c >= lattice_.size()) throw StructureError("complement table holds an out-of-range index");
  if (!lattice_.is_distributive()) throw AxiomError("distributivity fails");
  for (Elem a = 0; a < lattice_.size(); ++a) {
    if (lattice_.join(a, complement_[a]) != lattice_.top())
      throw AxiomError(describe_failure("complement_join", {a}));
    if (lattice_.meet(a, complement_[a]) != lattice_.bottom())
      throw AxiomError(describe_failure("complement_meet", {a}));
  }
  for (Elem a = 0; a < lattice_.size(); ++a) {
    auto covers = lattice_.lower_covers(a);
    if (covers.size() == 1 && covers.front() == lattice_.bottom()) atoms_.push_back(a);
  }
}

std::vector<Elem> BooleanAlgebra::atoms_below(Elem x) const {
  std::vector<Elem> below;
  for (Elem a : atoms_)
    if (leq(a, x)) below.push_back(a);
  return below;
}

KleeneAlgebra BooleanAlgebra::as_kleene() const { return KleeneAlgebra(lattice_, complement_, name_); }

std::optional<BooleanAlgebra> as_boolean(const DeMorganAlgebra& algebra) {
  if (!algebra.is_boolean()) return std::nullopt;
  return BooleanAlgebra(algebra.lattice(), algebra.negation_table(), algebra.name());
}

// --- Standard algebras ---------------------------------------------------------

namespace {

FiniteLattice chain_lattice(std::size_t n, std::vector<std::string> labels) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) leq[a * n + b] = 1;
  return FiniteLattice::from_order(n, std::move(leq), std::move(labels));
}

std::vector<Elem> reversal(std::size_t n) {
  std::vector<Elem> neg(n);
  for (Elem a = 0; a < n; ++a) neg[a] = static_cast<Elem>(n - 1 - a);
  return neg;
}

}  // namespace

KleeneAlgebra chain2() { return KleeneAlgebra(chain_lattice(2, {"0", "1"}), reversal(2), "2"); }

KleeneAlgebra chain3() {
  return KleeneAlgebra(chain_lattice(3, {"0", "a", "1"}), reversal(3), "3");
}

KleeneAlgebra three_valued() {
  return KleeneAlgebra(chain_lattice(3, {"f", "u", "t"}), reversal(3), "3");
}

KleeneAlgebra chain(std::size_t n) {
  if (n == 0) throw PreconditionError("chain length must be positive");
  return KleeneAlgebra(chain_lattice(n, {}), reversal(n), "chain" + std::to_string(n));
}

DeMorganAlgebra de_morgan_four() {
  // 0 = f, 1 = n, 2 = b, 3 = t
  std::vector<std::uint8_t> leq = {1, 1, 1, 1,  //
                                   0, 1, 0, 1,  //
                                   0, 0, 1, 1,  //
                                   0, 0, 0, 1};
  return DeMorganAlgebra(FiniteLattice::from_order(4, std::move(leq), {"f", "n", "b", "t"}),
                         {3, 1, 2, 0}, "4");
}

BooleanAlgebra boolean_power(std::size_t n) {
  if (n > 16) throw SizeError("boolean_power supports at most 16 atoms");
  const std::size_t size = std::size_t{1} << n;
  const Elem full = static_cast<Elem>(size - 1);
  std::vector<std::uint8_t> leq(size * size, 0);
  std::vector<std::string> labels(size);
  std::vector<Elem> complement(size);
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) leq[a * size + b] = (a & ~b) == 0 ? 1 : 0;
    complement[a] = full & ~a;
    if (a == 0) {
      labels[a] = "0";
    } else if (a == full) {
      labels[a] = "1";
    } else {
      for (std::size_t i = 0; i < n; ++i)
        if (a & (Elem{1} << i)) labels[a] += static_cast<char>('a' + i);
    }
  }
  return BooleanAlgebra(FiniteLattice::from_order(size, std::move(leq), std::move(labels)),
                        std::move(complement), "2^" + std::to_string(n));
}

Elem IntervalAlgebra::index_of(IntervalElement p) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p, [](const auto& x, const auto& y) {
    return std::pair(x.lo, x.hi) < std::pair(y.lo, y.hi);
  });
  if (it == pairs.end() || !(*it == p))
    throw PreconditionError("(" + std::to_string(p.lo) + "," + std::to_string(p.hi) +
                            ") is not an interval element");
  return static_cast<Elem>(it - pairs.begin());
}

IntervalAlgebra interval_algebra(const BooleanAlgebra& base) {
  std::vector<IntervalElement> pairs;
  for (Elem lo = 0; lo < base.size(); ++lo)
    for (Elem hi = 0; hi < base.size(); ++hi)
      if (base.leq(lo, hi)) pairs.push_back({lo, hi});

  const std::size_t n = pairs.size();
  std::vector<std::uint8_t> leq(n * n);
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    labels[x] = "(" + base.label(pairs[x].lo) + "," + base.label(pairs[x].hi) + ")";
    for (Elem y = 0; y < n; ++y)
      leq[x * n + y] = base.leq(pairs[x].lo, pairs[y].lo) && base.leq(pairs[x].hi, pairs[y].hi);
  }
  auto lattice = FiniteLattice::from_order(n, std::move(leq), std::move(labels));

  // Lexicographic order of `pairs` lets index_of binary-search.
  auto find = [&](Elem lo, Elem hi) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), IntervalElement{lo, hi},
                               [](const auto& x, const auto& y) {
                                 return std::pair(x.lo, x.hi) < std::pair(y.lo, y.hi);
                               });
    return static_cast<Elem>(it - pairs.begin());
  };
  std::vector<Elem> neg(n);
  for (Elem x = 0; x < n; ++x)
    neg[x] = find(base.complement(pairs[x].hi), base.complement(pairs[x].lo));

  KleeneAlgebra algebra(std::move(lattice), std::move(neg), base.name() + "^[2]");
  return IntervalAlgebra{base, std::move(pairs), std::move(algebra)};
}

std::vector<Elem> PowerAlgebra::coordinates(Elem x) const {
  std::vector<Elem> coords(arity);
  const auto b = static_cast<Elem>(base.size());
  for (std::size_t i = 0; i < arity; ++i) {
    coords[i] = x % b;
    x /= b;
  }
  return coords;
}

Elem PowerAlgebra::index_of(std::span<const Elem> coords) const {
  if (coords.size() != arity) throw PreconditionError("coordinate count does not match arity");
  Elem x = 0;
  for (std::size_t i = arity; i-- > 0;) x = x * static_cast<Elem>(base.size()) + coords[i];
  return x;
}

PowerAlgebra power_algebra(const KleeneAlgebra& base, std::size_t n, std::size_t max_size) {
  if (n == 0) throw PreconditionError("power_algebra needs a positive index size");
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= base.size();
    if (size > max_size)
      throw SizeError("power algebra would have more than " + std::to_string(max_size) +
                      " elements");
  }
  PowerAlgebra shell{base, n, base};
  std::vector<std::vector<Elem>> coords(size);
  std::vector<std::string> labels(size);
  for (Elem x = 0; x < size; ++x) {
    coords[x] = shell.coordinates(x);
    if (n == 1) {
      labels[x] = base.label(coords[x][0]);
    } else {
      labels[x] = "(";
      for (std::size_t i = 0; i < n; ++i) labels[x] += (i ? "," : "") + base.label(coords[x][i]);
      labels[x] += ")";
    }
  }
  std::vector<std::uint8_t> leq(size * size);
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y) {
      bool le = true;
      for (std::size_t i = 0; i < n && le; ++i) le = base.leq(coords[x][i], coords[y][i]);
      leq[x * size + y] = le;
    }
  std::vector<Elem> neg(size);
  std::vector<Elem> image(n);
  for (Elem x = 0; x < size; ++x) {
    for (std::size_t i = 0; i < n; ++i) image[i] = base.neg(coords[x][i]);
    neg[x] = shell.index_of(image);
  }
  std::string name = base.name() + "^" + std::to_string(n);
  return PowerAlgebra{
      base, n,
      KleeneAlgebra(FiniteLattice::from_order(size, std::move(leq), std::move(labels)),
                    std::move(neg), std::move(name))};
}

}  // namespace kleene
