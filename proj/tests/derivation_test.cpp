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

#include <map>
#include <random>
#include <string>
#include <vector>

#include "kleene/derivation.hpp"
#include "kleene/errors.hpp"
#include "kleene/semantics.hpp"
#include "oracles.hpp"

namespace kleene {
namespace {

Derivation parse(const char* text) { return parse_derivation(text); }

// Axiom schemes written with metavariables a, b, c.
const std::map<int, std::vector<const char*>> kSchemes = {
    {1, {"a |- a"}},
    {3, {"a & b |- a", "a & b |- b"}},
    {6, {"a |- a | b", "b |- a | b"}},
    {7, {"a & (b | c) |- (a | b) & (a | c)"}},
    {9, {"~a & ~b |- ~(a | b)"}},
    {10, {"a |- T"}},
    {11, {"F |- a"}},
    {12, {"T |- ~F"}},
    {13, {"a |- ~~a"}},
    {14, {"~~a |- a"}},
    {15, {"a & ~a |- b | ~b"}},
};

TEST(CheckDerivation, KalmanStepIsAccepted) {
  const auto d = parse("1: p & ~p |- q | ~q ; ax15");
  EXPECT_TRUE(check_derivation(d).ok);
}

TEST(CheckDerivation, ContrapositionOfWeakening) {
  const auto d = parse(
      "1: p |- p | q ; ax6\n"
      "2: ~(p | q) |- ~p ; rule8(1)\n");
  EXPECT_TRUE(check_derivation(d).ok);
}

TEST(CheckDerivation, NonInstanceOfIdentityFails) {
  const auto report = check_derivation(parse("1: q |- p ; ax1"));
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.step, 1u);
  EXPECT_NE(report.reason.find("not an instance of postulate 1"), std::string::npos);
}

TEST(CheckDerivation, EveryRuleOnceInOneProof) {
  const auto d = parse(
      "1: p & q |- p ; ax3\n"
      "2: p & q |- q ; ax3\n"
      "3: p & q |- q & p ; rule4(2,1)\n"
      "4: q & p |- q ; ax3\n"
      "5: p & q |- q ; rule2(3,4)\n"
      "6: r |- r ; ax1\n"
      "7: q |- q | r ; ax6\n"
      "8: r |- q | r ; ax6\n"
      "9: q | r |- q | r ; rule5(7,8)\n");
  const auto report = check_derivation(d);
  EXPECT_TRUE(report.ok) << report.step << ": " << report.reason;
}

TEST(CheckDerivation, RejectsStructuralMistakes) {
  // Rule cites a later step.
  auto r1 = check_derivation(parse("1: p |- p ; ax1\n2: ~p |- ~p ; rule8(3)\n3: p |- p ; ax1"));
  EXPECT_FALSE(r1.ok);
  EXPECT_EQ(r1.step, 2u);
  // Wrong arity.
  EXPECT_FALSE(check_derivation(parse("1: p |- p ; ax1\n2: p |- p ; rule2(1)")).ok);
  // Rule used as axiom and axiom used as rule.
  EXPECT_FALSE(check_derivation(parse("1: p |- p ; ax2")).ok);
  EXPECT_FALSE(check_derivation(parse("1: p |- p ; ax1\n2: p |- p ; rule1(1)")).ok);
  // Conclusion does not follow.
  auto r2 = check_derivation(parse("1: p |- p | q ; ax6\n2: ~p |- ~(p | q) ; rule8(1)"));
  EXPECT_FALSE(r2.ok);
  EXPECT_EQ(r2.step, 2u);
  // Empty derivation.
  EXPECT_FALSE(check_derivation(Derivation{}).ok);
  // Unknown postulate number.
  EXPECT_FALSE(check_derivation(parse("1: p |- p ; ax16")).ok);
}

TEST(CheckDerivation, DistributivityAsPrintedAndNotOtherwise) {
  EXPECT_TRUE(check_derivation(parse("1: p & (q | r) |- (p | q) & (p | r) ; ax7")).ok);
  EXPECT_FALSE(check_derivation(parse("1: p & (q | r) |- p & q | p & r ; ax7")).ok);
}

TEST(DeMorganDual, AcceptedForTheListedInstances) {
  const std::vector<std::pair<Formula, Formula>> cases = {
      {Formula::var("p"), Formula::var("q")},
      {Formula::var("p"), Formula::var("p")},
      {Formula::top(), Formula::bot()},
      {parse_formula("~(p | q)"), parse_formula("r & ~p")},
  };
  for (const auto& [a, b] : cases) {
    const auto d = derive_de_morgan_dual(a, b);
    const auto report = check_derivation(d);
    EXPECT_TRUE(report.ok) << report.step << ": " << report.reason;
    const Consequent goal{Formula::neg(Formula::conj(a, b)), Formula::disj(Formula::neg(a), Formula::neg(b))};
    EXPECT_EQ(d.steps.back().consequent, goal);
  }
}

TEST(DeMorganDual, TextRoundTrip) {
  const auto d = derive_de_morgan_dual(Formula::var("p"), Formula::var("q"));
  const auto again = parse_derivation(to_string(d));
  ASSERT_EQ(again.steps.size(), d.steps.size());
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    EXPECT_EQ(again.steps[i].consequent, d.steps[i].consequent);
    EXPECT_EQ(again.steps[i].justification.postulate, d.steps[i].justification.postulate);
    EXPECT_EQ(again.steps[i].justification.cites, d.steps[i].justification.cites);
  }
}

TEST(Axioms, InstancesClosedUnderSubstitution) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"p", "q", "r"};
  for (const auto& [postulate, schemes] : kSchemes) {
    for (const char* scheme : schemes) {
      const Consequent pattern = parse_consequent(scheme);
      for (int trial = 0; trial < 40; ++trial) {
        std::map<std::string, Formula> inst{{"a", random_formula(rng, vars, 3)},
                                            {"b", random_formula(rng, vars, 3)},
                                            {"c", random_formula(rng, vars, 3)}};
        const Consequent c = pattern.substitute(inst);
        ASSERT_TRUE(matches_axiom(postulate, c)) << postulate << ": " << to_string(c);
        std::map<std::string, Formula> sigma;
        for (const auto& v : vars) sigma.emplace(v, random_formula(rng, vars, 2));
        const Consequent moved = c.substitute(sigma);
        EXPECT_TRUE(matches_axiom(postulate, moved)) << postulate << ": " << to_string(moved);
      }
    }
  }
}

TEST(Axioms, EverySchemeIsThreeValuedValid) {
  for (const auto& [postulate, schemes] : kSchemes)
    for (const char* scheme : schemes) {
      const Consequent c = parse_consequent(scheme);
      EXPECT_TRUE(oracle::truth_preserving(c) && oracle::falsity_preserving(c)) << postulate;
    }
}

TEST(Soundness, AcceptedRandomDerivationsEndInValidConsequents) {
  // Grow derivations by random legal steps and check every final consequent.
  std::mt19937_64 rng(3);
  const std::vector<std::string> vars{"p", "q"};
  for (int trial = 0; trial < 150; ++trial) {
    Derivation d;
    for (int k = 0; k < 8; ++k) {
      const std::size_t n = d.steps.size();
      const int choice = n == 0 ? 0 : static_cast<int>(rng() % 4);
      if (choice == 0) {
        auto it = kSchemes.begin();
        std::advance(it, rng() % kSchemes.size());
        const auto& schemes = it->second;
        const Consequent pattern = parse_consequent(schemes[rng() % schemes.size()]);
        const Consequent c = pattern.substitute({{"a", random_formula(rng, vars, 2)},
                                                 {"b", random_formula(rng, vars, 2)},
                                                 {"c", random_formula(rng, vars, 2)}});
        d.steps.push_back({c, {Justification::Kind::Axiom, it->first, {}}});
      } else if (choice == 1) {
        const std::size_t i = rng() % n;
        const auto p = d.steps[i].consequent;
        d.steps.push_back({{Formula::neg(p.rhs), Formula::neg(p.lhs)}, {Justification::Kind::Rule, 8, {i + 1}}});
      } else if (choice == 2) {
        // Weaken the right side of step i through a cut.
        const std::size_t i = rng() % n;
        const auto p = d.steps[i].consequent;
        const Formula extra = random_formula(rng, vars, 1);
        d.steps.push_back({{p.rhs, Formula::disj(p.rhs, extra)}, {Justification::Kind::Axiom, 6, {}}});
        d.steps.push_back({{p.lhs, Formula::disj(p.rhs, extra)}, {Justification::Kind::Rule, 2, {i + 1, n + 1}}});
      } else {
        const std::size_t i = rng() % n, j = rng() % n;
        const auto a = d.steps[i].consequent;
        const auto b = d.steps[j].consequent;
        if (a.rhs == b.lhs)
          d.steps.push_back({{a.lhs, b.rhs}, {Justification::Kind::Rule, 2, {i + 1, j + 1}}});
        else if (a.lhs == b.lhs)
          d.steps.push_back({{a.lhs, Formula::conj(a.rhs, b.rhs)}, {Justification::Kind::Rule, 4, {i + 1, j + 1}}});
        else if (a.rhs == b.rhs)
          d.steps.push_back({{Formula::disj(a.lhs, b.lhs), a.rhs}, {Justification::Kind::Rule, 5, {i + 1, j + 1}}});
      }
    }
    const auto report = check_derivation(d);
    ASSERT_TRUE(report.ok) << report.step << ": " << report.reason;
    for (const auto& step : d.steps)
      EXPECT_TRUE(decide(step.consequent).derivable()) << to_string(step.consequent);
  }
}

TEST(ParseDerivation, CommentsAndBlankLines) {
  const auto d = parse("# weakening\n\n1: p |- p | q ; ax6\n  # done\n");
  ASSERT_EQ(d.steps.size(), 1u);
  EXPECT_EQ(d.steps[0].justification.postulate, 6);
}

TEST(ParseDerivation, ErrorsNameTheLine) {
  auto message = [](const char* text) -> std::string {
    try {
      parse_derivation(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_EQ(message("2: p |- p ; ax1").rfind("line 1:", 0), 0u);
  EXPECT_EQ(message("1: p |- p ; ax1\n1: p |- p ; ax1").rfind("line 2:", 0), 0u);
  EXPECT_NE(message("1: p |- p").find("justification"), std::string::npos);
  EXPECT_NE(message("1: p |- p ; rule8").find("line 1"), std::string::npos);
  EXPECT_NE(message("1: p |- p ; foo").find("line 1"), std::string::npos);
  EXPECT_NE(message("1: p & |- p ; ax1").find("line 1"), std::string::npos);
  EXPECT_NE(message("1: p |- p ; rule8(1").find("unclosed"), std::string::npos);
}

}  // namespace
}  // namespace kleene
