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

#include <random>
#include <string>
#include <vector>

#include "kleene/agreement.hpp"
#include "kleene/enumerate.hpp"
#include "kleene/errors.hpp"
#include "kleene/representation.hpp"
#include "kleene/semantics.hpp"
#include "oracles.hpp"

namespace kleene {
namespace {

constexpr Elem F = 0, U = 1, T = 2;

Consequent c(const char* text) { return parse_consequent(text); }

TEST(Eval, ContradictionAtTheMiddleValue) {
  EXPECT_EQ(eval(three(), {{"p", U}}, parse_formula("p & ~p")), U);
}

TEST(Eval, FixpointOfTheTwoPointInterval) {
  const auto interval = interval_algebra(boolean_power(1));
  const Elem mid = interval.index_of({0, 1});
  EXPECT_EQ(eval(interval.algebra, {{"p", mid}}, parse_formula("~p")), mid);
}

TEST(Eval, TopIsAUnitForMeet) {
  for (Elem x = 0; x < 3; ++x) EXPECT_EQ(eval(three(), {{"p", x}}, parse_formula("T & p")), x);
  EXPECT_EQ(eval(three(), {}, parse_formula("F | ~F")), T);
}

TEST(Eval, UnassignedVariableIsNamed) {
  try {
    eval(three(), {{"p", T}}, parse_formula("p & q"));
    FAIL() << "expected an error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("q"), std::string::npos);
  }
}

TEST(Eval, AgreesWithNaiveRecursionOnTheFleet) {
  std::mt19937_64 rng(5);
  const auto fleet = algebra_fleet();
  for (int i = 0; i < 300; ++i) {
    const Formula f = random_formula(rng, {"p", "q", "r"}, 5);
    const auto& k = fleet[rng() % fleet.size()].algebra;
    Assignment v{{"p", static_cast<Elem>(rng() % k.size())},
                 {"q", static_cast<Elem>(rng() % k.size())},
                 {"r", static_cast<Elem>(rng() % k.size())}};
    EXPECT_EQ(eval(k, v, f), oracle::eval(k, v, f));
  }
}

TEST(EntailsAlgebra, KalmanIsValidInThree) {
  EXPECT_TRUE(entails_algebra(three(), c("p & ~p |- q | ~q")).valid);
}

TEST(EntailsAlgebra, FirstWitnessForAtomicConsequent) {
  const auto v = entails_algebra(three(), c("p |- q"));
  ASSERT_FALSE(v.valid);
  // Lexicographically first failure; (t, f) also fails.
  EXPECT_EQ(v.witness, (Assignment{{"p", U}, {"q", F}}));
  EXPECT_EQ(render(v, three()), "INVALID witness: p=u, q=f");
  EXPECT_FALSE(three().leq(eval(three(), {{"p", T}, {"q", F}}, parse_formula("p")),
                           eval(three(), {{"p", T}, {"q", F}}, parse_formula("q"))));
}

TEST(EntailsAlgebra, FourElementDeMorganBreaksKalman) {
  const auto four = de_morgan_four();
  const auto v = entails_algebra(four, c("p & ~p |- q | ~q"));
  ASSERT_FALSE(v.valid);
  EXPECT_EQ(four.label(v.witness.at("p")), "n");
  EXPECT_EQ(four.label(v.witness.at("q")), "b");
  EXPECT_EQ(render(v, four), "INVALID witness: p=n, q=b");
}

TEST(EntailsAlgebra, ConstantOnlyConsequents) {
  EXPECT_TRUE(entails_algebra(three(), c("F |- T")).valid);
  const auto v = entails_algebra(three(), c("T |- F"));
  EXPECT_FALSE(v.valid);
  EXPECT_TRUE(v.witness.empty());
}

TEST(EntailsAlgebra, BoundIsEnforced) {
  EXPECT_THROW(entails_algebra(three(), c("p & q & r |- p"), 26), SizeError);
  EXPECT_NO_THROW(entails_algebra(three(), c("p & q & r |- p"), 27));
}

TEST(EntailsAlgebra, MatchesBruteForceOnTheFleet) {
  std::mt19937_64 rng(17);
  const auto fleet = algebra_fleet();
  for (int i = 0; i < 200; ++i) {
    const Consequent k = random_consequent(rng, {"p", "q"}, 3);
    for (const auto& member : fleet) {
      if (member.algebra.size() > 27) continue;
      EXPECT_EQ(entails_algebra(member.algebra, k).valid, oracle::valid_in(member.algebra, k))
          << member.name << " " << to_string(k);
    }
  }
}

TEST(ThreeValued, Separations) {
  const auto left = decide(c("p & ~p |- q"));
  EXPECT_TRUE(left.t.valid);
  ASSERT_FALSE(left.f.valid);
  EXPECT_EQ(left.f.witness, (Assignment{{"p", U}, {"q", F}}));
  EXPECT_FALSE(left.derivable());

  const auto right = decide(c("q |- p | ~p"));
  EXPECT_TRUE(right.f.valid);
  EXPECT_FALSE(right.t.valid);
  EXPECT_FALSE(right.derivable());

  const auto same = decide(c("p |- p"));
  EXPECT_TRUE(same.t.valid && same.f.valid && same.tf.valid);
}

TEST(ThreeValued, ExcludedMiddleDoesNotTransfer) {
  const auto d = decide(c("p | ~p |- q | ~q"));
  EXPECT_FALSE(d.derivable());
  EXPECT_FALSE(d.t.valid);
  EXPECT_TRUE(d.f.valid);
  // The reported witness is the first failure; (t, u) also fails.
  EXPECT_EQ(d.tf.witness, d.t.witness);
  EXPECT_EQ(oracle::eval3({{"p", T}, {"q", U}}, parse_formula("q | ~q")), 1);
}

TEST(ThreeValued, DoubleNegationIsDerivable) { EXPECT_TRUE(decide(c("~~p |- p")).derivable()); }

TEST(ThreeValued, EveryPostulateInstanceIsDerivable) {
  const char* axioms[] = {"p |- p", "p & q |- p", "p & q |- q", "p |- p | q", "q |- p | q",
                          "p & (q | r) |- (p | q) & (p | r)", "~p & ~q |- ~(p | q)", "p |- T",
                          "F |- p", "T |- ~F", "p |- ~~p", "~~p |- p", "p & ~p |- q | ~q"};
  for (const char* a : axioms) EXPECT_TRUE(decide(c(a)).derivable()) << a;
}

TEST(ThreeValued, RulesPreserveValidity) {
  std::mt19937_64 rng(23);
  const std::vector<std::string> vars{"p", "q"};
  auto valid = [](const Consequent& k) { return entails_tf(k).valid; };
  for (int i = 0; i < 400; ++i) {
    const Formula a = random_formula(rng, vars, 3), b = random_formula(rng, vars, 3),
                  d = random_formula(rng, vars, 3);
    if (valid({a, b}) && valid({b, d})) {
      EXPECT_TRUE(valid({a, d}));
    }
    if (valid({a, b}) && valid({a, d})) {
      EXPECT_TRUE(valid({a, Formula::conj(b, d)}));
    }
    if (valid({a, d}) && valid({b, d})) {
      EXPECT_TRUE(valid({Formula::disj(a, b), d}));
    }
    if (valid({a, b})) {
      EXPECT_TRUE(valid({Formula::neg(b), Formula::neg(a)}));
    }
  }
}

TEST(ThreeValued, MatchesTheOracle) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    const Consequent k = random_consequent(rng, {"p", "q", "r"}, 5);
    const bool t = oracle::truth_preserving(k), f = oracle::falsity_preserving(k);
    EXPECT_EQ(entails_t(k).valid, t);
    EXPECT_EQ(entails_f(k).valid, f);
    EXPECT_EQ(entails_tf(k).valid, t && f);
    if (entails_tf(k).valid) {
      EXPECT_TRUE(entails_t(k).valid && entails_f(k).valid);
    }
  }
}

TEST(ThreeValued, ThreeValuedValidityAgreesWithEveryNonBooleanMember) {
  std::mt19937_64 rng(31);
  const auto fleet = algebra_fleet();
  for (int i = 0; i < 60; ++i) {
    const Consequent k = random_consequent(rng, {"p", "q", "r"}, 4);
    const bool derivable = entails_tf(k).valid;
    for (const auto& member : fleet) {
      const bool holds = entails_algebra(member.algebra, k).valid;
      if (derivable) {
        EXPECT_TRUE(holds) << member.name << " " << to_string(k);
      }
      if (!member.boolean) {
        EXPECT_EQ(holds, derivable) << member.name << " " << to_string(k);
      }
    }
  }
}

TEST(ThreeValued, BooleanAlgebrasValidateExplosion) {
  // Boolean members are Kleene but satisfy more consequents than the logic.
  EXPECT_TRUE(entails_algebra(boolean_power(2).as_kleene(), c("p & ~p |- q")).valid);
  EXPECT_FALSE(decide(c("p & ~p |- q")).derivable());
}

TEST(Transfer, MonotoneAlongEmbeddings) {
  std::mt19937_64 rng(37);
  for (const auto& k : enumerate_kleene_algebras(6)) {
    const auto emb = embed_into_interval(k);
    const auto& target = emb.interval().algebra;
    for (int i = 0; i < 30; ++i) {
      const Consequent q = random_consequent(rng, {"p", "q"}, 3);
      // Pull every source valuation forward along the embedding.
      if (!entails_algebra(target, q).valid) continue;
      EXPECT_TRUE(entails_algebra(k, q).valid) << k.name() << " " << to_string(q);
      oracle::for_each_assignment(q.variables(), k.size(), [&](const Assignment& v) {
        Assignment moved;
        for (const auto& [name, x] : v) moved[name] = emb.map[x];
        EXPECT_EQ(emb.map[eval(k, v, q.lhs)], eval(target, moved, q.lhs));
        return true;
      });
    }
  }
}

TEST(PointwiseTransfer, BoundaryPointIsUndetermined) {
  const auto interval = interval_algebra(boolean_power(2));
  const Elem x = interval.index_of({0, 3});
  for (std::size_t point = 0; point < 2; ++point)
    EXPECT_EQ(pointwise_transfer(interval, {{"p", x}}, point).at("p"), U);
}

TEST(PointwiseTransfer, SplitsBetweenPoints) {
  const auto interval = interval_algebra(boolean_power(2));
  const Elem x = interval.index_of({1, 3});  // lower {x}, upper {x, y}
  EXPECT_EQ(pointwise_transfer(interval, {{"p", x}}, 0).at("p"), T);
  EXPECT_EQ(pointwise_transfer(interval, {{"p", x}}, 1).at("p"), U);
  EXPECT_EQ(point_value(interval, interval.index_of({0, 2}), 0), ThreeValue::f);
}

TEST(PointwiseTransfer, CommutesWithEvaluation) {
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto interval = interval_algebra(boolean_power(n));
    for (int i = 0; i < 200; ++i) {
      const Formula f = random_formula(rng, {"p", "q", "r"}, 5);
      Assignment v;
      for (const char* name : {"p", "q", "r"}) v[name] = static_cast<Elem>(rng() % interval.algebra.size());
      const Elem value = eval(interval.algebra, v, f);
      for (std::size_t point = 0; point < n; ++point) {
        const Assignment vx = pointwise_transfer(interval, v, point);
        EXPECT_EQ(eval(three(), vx, f), static_cast<Elem>(point_value(interval, value, point)));
        const Elem neg = eval(interval.algebra, v, Formula::neg(f));
        EXPECT_EQ(static_cast<Elem>(point_value(interval, neg, point)),
                  three().neg(static_cast<Elem>(point_value(interval, value, point))));
      }
    }
  }
}

TEST(PointwiseTransfer, RejectsPointsOutsideTheUniverse) {
  const auto interval = interval_algebra(boolean_power(2));
  EXPECT_THROW(pointwise_transfer(interval, {}, 2), PreconditionError);
}

}  // namespace
}  // namespace kleene
