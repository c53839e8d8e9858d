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


#include <gtest/gtest.h>

#include <string>

#include "kleene/errors.hpp"
#include "kleene/io.hpp"

namespace kleene {
namespace {

constexpr const char* kThree = R"({"name": "3", "size": 3, "labels": ["0", "a", "1"],
  "leq": [["0", "a"], ["a", "1"]], "neg": [["0", "1"], ["a", "a"], ["1", "0"]]})";

TEST(AlgebraFile, ParsesLabelsAndClosesTheOrder) {
  const auto doc = parse_algebra(kThree);
  EXPECT_EQ(doc.name, "3");
  EXPECT_TRUE(doc.lattice.leq(0, 2));
  const auto k = doc.kleene();
  EXPECT_EQ(k.neg(1), 1u);
  EXPECT_FALSE(k.is_boolean());
}

TEST(AlgebraFile, IndicesWorkWithoutLabels) {
  const auto doc = parse_algebra(R"({"size": 2, "leq": [[0, 1]], "neg": [[0, 1], [1, 0]]})");
  EXPECT_TRUE(doc.kleene().is_boolean());
  EXPECT_EQ(doc.lattice.label(1), "1");
}

TEST(AlgebraFile, RoundTrip) {
  for (const auto& k : {chain3(), boolean_power(2).as_kleene(), chain(5)}) {
    const auto again = parse_algebra(algebra_to_json(k)).kleene();
    ASSERT_EQ(again.size(), k.size());
    for (Elem a = 0; a < k.size(); ++a) {
      EXPECT_EQ(again.label(a), k.label(a));
      EXPECT_EQ(again.neg(a), k.neg(a));
      for (Elem b = 0; b < k.size(); ++b) EXPECT_EQ(again.leq(a, b), k.leq(a, b));
    }
  }
}

TEST(AlgebraFile, NonKleeneDocumentsParseButDoNotConvert) {
  const auto doc = parse_algebra(R"({"size": 4, "labels": ["f", "n", "b", "t"],
    "leq": [["f", "n"], ["f", "b"], ["n", "t"], ["b", "t"]],
    "neg": [["f", "t"], ["n", "n"], ["b", "b"], ["t", "f"]]})");
  EXPECT_FALSE(check_kleene_axioms(doc.tables()).all_passed());
  EXPECT_THROW(doc.kleene(), AxiomError);
}

TEST(AlgebraFile, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_algebra("{"), StructureError);
  EXPECT_THROW(parse_algebra(R"({"size": 0, "leq": [], "neg": []})"), StructureError);
  EXPECT_THROW(parse_algebra(R"({"size": 2, "leq": [[0, 1]], "neg": [[0, 1]]})"), StructureError);
  EXPECT_THROW(parse_algebra(R"({"size": 2, "leq": [[0, 1]], "neg": [[0, 1], [0, 0], [1, 0]]})"),
               StructureError);
  EXPECT_THROW(parse_algebra(R"({"size": 2, "leq": [[0, 5]], "neg": [[0, 1], [1, 0]]})"), StructureError);
  EXPECT_THROW(parse_algebra(R"({"size": 2, "leq": [[0, 1], [1, 0]], "neg": [[0, 1], [1, 0]]})"),
               StructureError);
  EXPECT_THROW(parse_algebra(R"({"size": 2, "labels": ["x"], "leq": [], "neg": []})"), StructureError);
}

TEST(SpaceFile, BlocksAndRelations) {
  const auto s = parse_space(R"({"universe": ["1", "2", "3"], "blocks": [["1", "2"], ["3"]]})");
  EXPECT_EQ(s.blocks().size(), 2u);
  const auto r = parse_space(R"({"universe": ["a", "b"], "relation": [["a", "a"], ["b", "b"]]})");
  EXPECT_EQ(r.blocks().size(), 2u);
  const auto again = parse_space(space_to_json(s));
  EXPECT_EQ(again.names(), s.names());
  EXPECT_EQ(again.blocks(), s.blocks());
  EXPECT_THROW(parse_space(R"({"universe": ["a"]})"), StructureError);
  EXPECT_THROW(parse_space(R"({"universe": ["a", "b"], "blocks": [["a"]]})"), StructureError);
}

TEST(FrameFile, RoundTripAndMonotonicity) {
  const auto f = parse_frame(R"({"worlds": ["x", "y"], "leq": [["x", "y"]], "C": [["x", "x"]]})");
  EXPECT_TRUE(f.leq(0, 1));
  EXPECT_TRUE(f.compatible(0, 0));
  const auto again = parse_frame(frame_to_json(f));
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) {
      EXPECT_EQ(again.leq(x, y), f.leq(x, y));
      EXPECT_EQ(again.compatible(x, y), f.compatible(x, y));
    }
  EXPECT_THROW(parse_frame(R"({"worlds": ["x", "y"], "leq": [["x", "y"]], "C": [["y", "y"]]})"),
               StructureError);
  EXPECT_THROW(parse_frame(R"({"worlds": ["x"]})"), StructureError);
}

TEST(Files, MissingFileIsAStructureError) {
  EXPECT_THROW(read_file("/nonexistent/kleene/file.json"), StructureError);
}

}  // namespace
}  // namespace kleene
