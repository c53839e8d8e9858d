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

/// \file representation.hpp
/// Join-irreducible structure of finite lattices and the machinery that
/// turns an order isomorphism between join-irreducibles into an algebra
/// isomorphism: the j* pairing, the canonical map J(3^n) -> J((2^n)^[2]),
/// its join-extension, homomorphism checks, and the embedding of an
/// arbitrary finite Kleene algebra into some B^[2].
///
/// All carriers are finite, so "completely join irreducible" means "has a
/// unique lower cover" and join density always holds. Bottom is never listed
/// as join-irreducible.

#ifndef KLEENE_REPRESENTATION_HPP_
#define KLEENE_REPRESENTATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "kleene/algebra.hpp"

namespace kleene {

/// A total map between carriers, by index.
using CarrierMap = std::vector<Elem>;

/// Nonzero elements with exactly one lower cover, ascending.
std::vector<Elem> join_irreducibles(const FiniteLattice& lattice);

/// J(x): the join-irreducibles below x, ascending. Throws InvariantViolation
/// if their join is not x.
std::vector<Elem> join_decompose(const FiniteLattice& lattice, Elem x);

/// j* = meet of { x : x not <= ~j }. Throws PreconditionError unless j is
/// join-irreducible, InvariantViolation if the result is not.
Elem star(const DeMorganAlgebra& algebra, Elem j);

/// Bijection domain[i] -> codomain[i] between join-irreducible lists.
struct OrderIso {
  std::vector<Elem> domain;
  std::vector<Elem> codomain;

  /// Throws PreconditionError if x is not in the domain.
  Elem operator()(Elem x) const;
};

bool is_order_iso(const OrderIso& phi, const FiniteLattice& source, const FiniteLattice& target);

/// phi(j*) = phi(j)* for every j in the domain.
bool preserves_star(const OrderIso& phi, const DeMorganAlgebra& source,
                    const DeMorganAlgebra& target);

struct CanonicalIso {
  PowerAlgebra three_power;   // 3^n
  IntervalAlgebra interval;   // (2^n)^[2]
  OrderIso phi;               // f_i^a -> (0, g_i), f_i^1 -> (g_i, g_i)
};

/// The order isomorphism between the join-irreducibles of 3^n and
/// (2^n)^[2]; coordinate i of 3^n corresponds to atom i of 2^n.
CanonicalIso canonical_iso_3I(std::size_t n);

/// Phi(x) = join of phi(J(x)). Throws PreconditionError when phi is not an
/// order isomorphism between the full join-irreducible sets.
CarrierMap extend_iso(const OrderIso& phi, const FiniteLattice& source, const FiniteLattice& target);

struct HomomorphismReport {
  bool ok = true;
  std::string clause;  // "bottom", "top", "join", "meet", "neg" or "range"
  std::vector<Elem> witness;

  explicit operator bool() const { return ok; }
};

/// Checks f(0)=0, f(1)=1, then join, meet and negation preservation in
/// index order; reports the first violating instance.
HomomorphismReport verify_homomorphism(const CarrierMap& f, const DeMorganAlgebra& source,
                                       const DeMorganAlgebra& target);

bool is_injective(const CarrierMap& f);
bool is_bijective(const CarrierMap& f, std::size_t target_size);

/// Every De Morgan homomorphism source -> target, in lexicographic order of
/// image tables. Backtracking with propagation through joins, meets and
/// negation.
std::vector<CarrierMap> enumerate_homomorphisms(const DeMorganAlgebra& source,
                                                const DeMorganAlgebra& target);

struct IntervalEmbedding {
  std::vector<CarrierMap> coordinates;  // the homomorphisms K -> 3 used
  CanonicalIso iso;                     // 3^n and (2^n)^[2]
  CarrierMap into_power;                // K -> 3^n
  CarrierMap extension;                 // Phi: 3^n -> (2^n)^[2]
  CarrierMap map;                       // K -> (2^n)^[2]

  const BooleanAlgebra& boolean() const { return iso.interval.base; }
  const IntervalAlgebra& interval() const { return iso.interval; }
};

/// Embeds K into (2^n)^[2] through the product of homomorphisms K -> 3,
/// dropping coordinates that are not needed to separate points. The result
/// is verified to be an injective homomorphism. Throws SizeError when
/// |K| > max_size, PreconditionError for the one-element algebra.
IntervalEmbedding embed_into_interval(const KleeneAlgebra& algebra, std::size_t max_size = 10);

}  // namespace kleene

#endif  // KLEENE_REPRESENTATION_HPP_
