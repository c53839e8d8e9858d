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

/// \file algebra.hpp
/// Finite bounded lattices and the negation algebras built on them
/// (De Morgan, Kleene, Boolean), together with the table-level axiom checker
/// and the standard constructions: chains, the four-element De Morgan
/// lattice, powers, and interval algebras B^[2].
///
/// Elements are identified by index into the carrier. Every algebra is
/// immutable once built, so join/meet tables are precomputed.

#ifndef KLEENE_ALGEBRA_HPP_
#define KLEENE_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kleene {

using Elem = std::uint32_t;

/// Raw operation tables for a candidate algebra. Nothing is assumed about
/// them; check_kleene_axioms() is the gatekeeper.
struct AlgebraTables {
  std::size_t size = 0;
  std::vector<std::uint8_t> leq;  // row-major size*size, leq[a*size+b] iff a <= b
  std::vector<Elem> join;         // row-major size*size
  std::vector<Elem> meet;         // row-major size*size
  std::vector<Elem> neg;          // size
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::vector<Elem> witness;  // first violating tuple, empty when passed
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  bool passed(std::string_view axiom) const;
  const AxiomCheck* first_failure() const;
};

/// Checks partial order, lattice, bounds, distributivity, involution,
/// De Morgan and the Kleene property in that order. Throws StructureError if
/// the tables are not total over the carrier or hold out-of-range indices.
AxiomReport check_kleene_axioms(const AlgebraTables& tables);

/// Same as check_kleene_axioms() but with `neg` read as a Boolean complement:
/// the last two checks are x | x^c = 1 and x & x^c = 0.
AxiomReport check_boolean_axioms(const AlgebraTables& tables);

class FiniteLattice {
 public:
  /// Builds a lattice from an order relation (row-major n*n matrix); join and
  /// meet are derived. Throws StructureError when the relation is not a
  /// partial order or some pair lacks a least upper / greatest lower bound.
  static FiniteLattice from_order(std::size_t n, std::vector<std::uint8_t> leq,
                                  std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  bool leq(Elem a, Elem b) const { return leq_[a * n_ + b] != 0; }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_distributive() const;
  std::vector<Elem> lower_covers(Elem x) const;
  std::optional<Elem> find_label(std::string_view label) const;

 private:
  FiniteLattice() = default;

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<std::string> labels_;
};

/// Distributive lattice with an involutive, order-reversing negation.
class DeMorganAlgebra {
 public:
  /// Throws AxiomError naming the failed law and its witness.
  DeMorganAlgebra(FiniteLattice lattice, std::vector<Elem> neg, std::string name = {});

  const FiniteLattice& lattice() const { return lattice_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return lattice_.size(); }
  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem join(Elem a, Elem b) const { return lattice_.join(a, b); }
  Elem meet(Elem a, Elem b) const { return lattice_.meet(a, b); }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem bottom() const { return lattice_.bottom(); }
  Elem top() const { return lattice_.top(); }
  const std::string& label(Elem a) const { return lattice_.label(a); }
  const std::vector<Elem>& negation_table() const { return neg_; }

  bool is_kleene() const;
  /// True when the negation is a lattice complement.
  bool is_boolean() const;
  AlgebraTables tables() const;

 private:
  FiniteLattice lattice_;
  std::vector<Elem> neg_;
  std::string name_;
};

class KleeneAlgebra : public DeMorganAlgebra {
 public:
  /// Throws AxiomError with the witness pair if a & ~a <= b | ~b fails.
  explicit KleeneAlgebra(DeMorganAlgebra base);
  KleeneAlgebra(FiniteLattice lattice, std::vector<Elem> neg, std::string name = {});
};

class BooleanAlgebra {
 public:
  /// Throws AxiomError when `complement` is not a complement on a
  /// distributive lattice.
  BooleanAlgebra(FiniteLattice lattice, std::vector<Elem> complement, std::string name = {});

  const FiniteLattice& lattice() const { return lattice_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return lattice_.size(); }
  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem join(Elem a, Elem b) const { return lattice_.join(a, b); }
  Elem meet(Elem a, Elem b) const { return lattice_.meet(a, b); }
  Elem complement(Elem a) const { return complement_[a]; }
  Elem bottom() const { return lattice_.bottom(); }
  Elem top() const { return lattice_.top(); }
  const std::string& label(Elem a) const { return lattice_.label(a); }

  /// Minimal nonzero elements, ascending.
  const std::vector<Elem>& atoms() const { return atoms_; }
  std::vector<Elem> atoms_below(Elem x) const;

  KleeneAlgebra as_kleene() const;

 private:
  FiniteLattice lattice_;
  std::vector<Elem> complement_;
  std::vector<Elem> atoms_;
  std::string name_;
};

/// The Boolean algebra carried by a De Morgan algebra whose negation is a
/// complement, or nullopt.
std::optional<BooleanAlgebra> as_boolean(const DeMorganAlgebra& algebra);

// --- Standard algebras -----------------------------------------------------

/// 0 < 1 with ~0 = 1.
KleeneAlgebra chain2();
/// 0 < a < 1 with ~a = a, labelled 0, a, 1.
KleeneAlgebra chain3();
/// The same chain labelled f, u, t.
KleeneAlgebra three_valued();
/// n-element chain with order-reversing negation.
KleeneAlgebra chain(std::size_t n);
/// f < n, b < t with n and b both fixed by negation (not Kleene). Labels
/// f, n, b, t.
DeMorganAlgebra de_morgan_four();
/// Power set of n atoms. Element index is the bitmask (bit i = atom i);
/// atoms are labelled a, b, c, ... and subsets by concatenation, with 0 and 1
/// for the bounds.
BooleanAlgebra boolean_power(std::size_t n);

struct IntervalElement {
  Elem lo = 0;
  Elem hi = 0;
  friend bool operator==(const IntervalElement&, const IntervalElement&) = default;
};

/// B^[2]: pairs lo <= hi with componentwise lattice operations and
/// ~(lo,hi) = (hi^c, lo^c). Pairs are indexed in lexicographic (lo, hi) order.
struct IntervalAlgebra {
  BooleanAlgebra base;
  std::vector<IntervalElement> pairs;
  KleeneAlgebra algebra;

  Elem index_of(IntervalElement p) const;
  const IntervalElement& pair(Elem x) const { return pairs[x]; }
};

IntervalAlgebra interval_algebra(const BooleanAlgebra& base);

/// base^n with pointwise operations. Element index is the base-|base| number
/// whose digit i is coordinate i (coordinate 0 least significant).
struct PowerAlgebra {
  KleeneAlgebra base;
  std::size_t arity = 0;
  KleeneAlgebra algebra;

  std::vector<Elem> coordinates(Elem x) const;
  Elem index_of(std::span<const Elem> coords) const;
};

/// Throws PreconditionError for n = 0 and SizeError when |base|^n exceeds
/// `max_size`.
PowerAlgebra power_algebra(const KleeneAlgebra& base, std::size_t n, std::size_t max_size = 4096);

}  // namespace kleene

#endif  // KLEENE_ALGEBRA_HPP_
