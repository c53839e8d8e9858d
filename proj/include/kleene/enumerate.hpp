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

#ifndef KLEENE_ENUMERATE_HPP_
#define KLEENE_ENUMERATE_HPP_

#include <cstddef>
#include <vector>

#include "kleene/algebra.hpp"

namespace kleene {

/// Finite distributive lattices with at most max_size elements, one per
/// isomorphism class, built as down-set lattices of finite posets.
std::vector<FiniteLattice> enumerate_distributive_lattices(std::size_t max_size);

/// Nontrivial (0 != 1) Kleene algebras with at most max_size elements, one
/// per isomorphism class, ordered by size.
std::vector<KleeneAlgebra> enumerate_kleene_algebras(std::size_t max_size);

/// Same, for De Morgan algebras (Kleene or not).
std::vector<DeMorganAlgebra> enumerate_de_morgan_algebras(std::size_t max_size);

}  // namespace kleene

#endif  // KLEENE_ENUMERATE_HPP_
