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

/// \file semantics.hpp
/// Algebraic valuations of formulas, consequence in a fixed finite algebra,
/// and the three-valued relations (truth preservation, falsity preservation
/// and both) that decide derivability.

#ifndef KLEENE_SEMANTICS_HPP_
#define KLEENE_SEMANTICS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kleene/algebra.hpp"
#include "kleene/formula.hpp"

namespace kleene {

/// Element indices of three_valued().
enum class ThreeValue : Elem { f = 0, u = 1, t = 2 };

char to_char(ThreeValue v);

/// Variable name -> element index of some algebra.
using Assignment = std::map<std::string, Elem>;

/// Throws PreconditionError naming the first unassigned variable met.
Elem eval(const DeMorganAlgebra& algebra, const Assignment& v, const Formula& phi);

struct Verdict {
  bool valid = true;
  Assignment witness;  // first failing assignment when !valid

  explicit operator bool() const { return valid; }
};

/// "VALID" or "INVALID witness: p=t, q=f" using the algebra's labels.
std::string render(const Verdict& verdict, const DeMorganAlgebra& algebra);

/// Default bound on |K|^|vars|.
inline constexpr std::uint64_t kMaxAssignments = std::uint64_t{1} << 26;

/// v(lhs) <= v(rhs) for every assignment of the consequent's variables.
/// Assignments are scanned in lexicographic order (variables by name, values
/// by index) and the first failure is the witness. Throws SizeError above
/// `max_assignments`.
Verdict entails_algebra(const DeMorganAlgebra& algebra, const Consequent& c,
                        std::uint64_t max_assignments = kMaxAssignments);

/// Truth preservation over {f, u, t}: v(lhs) = t implies v(rhs) = t.
Verdict entails_t(const Consequent& c);
/// Falsity preservation: v(rhs) = f implies v(lhs) = f.
Verdict entails_f(const Consequent& c);
/// Both; the witness is the truth-preservation one when that fails.
Verdict entails_tf(const Consequent& c);

struct Decision {
  Verdict tf;
  Verdict t;
  Verdict f;

  bool derivable() const { return tf.valid; }
};

Decision decide(const Consequent& c);

/// The three-valued algebra the relations above are stated over.
const KleeneAlgebra& three();

/// Value at `point` of an element of P(U)^[2] (the interval algebra of
/// boolean_power(|U|)): t inside the lower set, u in upper minus lower, f
/// outside the upper set.
ThreeValue point_value(const IntervalAlgebra& interval, Elem x, std::size_t point);

/// The valuation v_x into three values. Verifies first that x -> v_x is a
/// homomorphism P(U)^[2] -> 3 and throws InvariantViolation otherwise.
Assignment pointwise_transfer(const IntervalAlgebra& interval, const Assignment& v, std::size_t point);

}  // namespace kleene

#endif  // KLEENE_SEMANTICS_HPP_
