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

/// \file io.hpp
/// JSON documents for algebras, approximation spaces and frames.
///
///   algebra: {"name": "3", "labels": ["0","a","1"], "size": 3,
///             "leq": [[0,1],[1,2]], "neg": [[0,2],[1,1],[2,0]]}
///   space:   {"universe": ["x","y"], "blocks": [["x","y"]]}
///            or {"universe": [...], "relation": [["x","y"], ...]}
///   frame:   {"worlds": ["x","y"], "leq": [["x","y"]], "C": [["y","x"]]}
///
/// `leq` is closed reflexively and transitively on load; join and meet are
/// always derived. Every loader throws StructureError on malformed input.

#ifndef KLEENE_IO_HPP_
#define KLEENE_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "kleene/algebra.hpp"
#include "kleene/perp.hpp"
#include "kleene/roughsets.hpp"

namespace kleene {

/// An algebra document whose order is a lattice; the negation is unchecked.
struct AlgebraDocument {
  std::string name;
  FiniteLattice lattice;
  std::vector<Elem> neg;

  AlgebraTables tables() const;
  /// Throws AxiomError (with a witness) unless the document is a Kleene algebra.
  KleeneAlgebra kleene() const;
};

AlgebraDocument parse_algebra(std::string_view json_text);
std::string algebra_to_json(const DeMorganAlgebra& algebra);

ApproximationSpace parse_space(std::string_view json_text);
std::string space_to_json(const ApproximationSpace& space);

CompatibilityFrame parse_frame(std::string_view json_text);
std::string frame_to_json(const CompatibilityFrame& frame);

/// Throws StructureError when the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace kleene

#endif  // KLEENE_IO_HPP_
