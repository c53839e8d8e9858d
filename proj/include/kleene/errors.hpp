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

#ifndef KLEENE_ERRORS_HPP_
#define KLEENE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kleene {

// Malformed input: non-total tables, out-of-range indices, relations that are
// not partial orders / equivalences, unparsable files.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed tables that violate an algebraic law the caller required.
class AxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An enumeration would exceed its configured bound.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a result that the theory guarantees fails to verify.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kleene

#endif  // KLEENE_ERRORS_HPP_
