// Copyright 2026 The rdnkbp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "oracles.h"
#include "rdnkbp/featurizer.h"
#include "rdnkbp/logging.h"
#include "rdnkbp/matcher.h"

namespace rdnkbp {
namespace {

FactStore Store(const char* text) {
  FactStore store;
  store.LoadText(text);
  return store;
}

std::vector<std::string> Strings(const std::vector<Substitution>& subs) {
  std::vector<std::string> out;
  for (const Substitution& s : subs) out.push_back(s.ToString());
  return out;
}

TEST(Satisfy, Enumerates) {
  const FactStore store = Store("p(c1).\np(c2).\n");
  EXPECT_EQ(Strings(SatisfyAll(ParseConjunction("p(A)"), store)),
            (std::vector<std::string>{"{A=c1}", "{A=c2}"}));
}

TEST(Satisfy, NegationAsFailure) {
  const FactStore store = Store("p(c1).\np(c2).\nq(c1).\n");
  EXPECT_EQ(Strings(SatisfyAll(ParseConjunction("p(A), \\+ q(A)"), store)),
            (std::vector<std::string>{"{A=c2}"}));
}

FactStore SharonFacts() {
  return Store(
      "entityType(m1,\"PER\").\nentityType(m2,\"NUM\").\nnextWord(m1,t2).\n"
      "word(t2,\",\").\nnextWord(t2,m2).\n");
}

const char* kRuleOne =
    "entityType(A,\"PER\"), entityType(B,\"NUM\"), nextWord(A,C), word(C,\",\"), "
    "nextWord(C,B)";

TEST(Satisfy, SharonRule) {
  const auto subs = SatisfyAll(ParseConjunction(kRuleOne), SharonFacts());
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_EQ(subs[0].ToString(), "{A=m1, B=m2, C=t2}");
}

TEST(Exists, Examples) {
  EXPECT_TRUE(Exists(ParseConjunction("p(A)"), Store("p(c1).")));
  EXPECT_FALSE(Exists(ParseConjunction("p(A)"), FactStore()));
  const Substitution seed{{Symbol::Intern("A"), Symbol::Intern("m1")},
                          {Symbol::Intern("B"), Symbol::Intern("m2")}};
  EXPECT_TRUE(Exists(ParseConjunction(kRuleOne), SharonFacts(), seed));
  const Substitution wrong{{Symbol::Intern("A"), Symbol::Intern("m2")},
                           {Symbol::Intern("B"), Symbol::Intern("m1")}};
  EXPECT_FALSE(Exists(ParseConjunction(kRuleOne), SharonFacts(), wrong));
}

TEST(Satisfy, UnknownPredicateWarns) {
  ScopedWarningCapture capture;
  EXPECT_TRUE(SatisfyAll(ParseConjunction("nosuch(A)"), Store("p(a).")).empty());
  EXPECT_TRUE(capture.Contains("nosuch"));
}

TEST(Satisfy, NumericComparison) {
  const FactStore store = Store(
      "similarWords(\"father\",\"dad\",0.9000).\n"
      "similarWords(\"father\",\"cat\",0.3000).\n");
  EXPECT_EQ(Strings(SatisfyAll(
                ParseConjunction("similarWords(\"father\",W,S), S >= 0.5"), store)),
            (std::vector<std::string>{"{S=0.9000, W=\"dad\"}"}));
}

TEST(Satisfy, DeterministicOrder) {
  const FactStore store = Store("q(a,b).\nq(b,c).\nq(a,c).\nq(c,a).\n");
  const auto subs = SatisfyAll(ParseConjunction("q(A,B), q(B,C)"), store);
  EXPECT_EQ(Strings(subs), (std::vector<std::string>{"{A=a, B=b, C=c}",
                                                     "{A=b, B=c, C=a}",
                                                     "{A=a, B=c, C=a}",
                                                     "{A=c, B=a, C=b}",
                                                     "{A=c, B=a, C=c}"}));
  EXPECT_EQ(Strings(subs), Strings(SatisfyAll(ParseConjunction("q(A,B), q(B,C)"), store)));
}

TEST(SatisfyProperty, MatchesBruteForce) {
  ScopedWarningCapture quiet;
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const oracle::MatchInstance m = oracle::RandomMatchInstance(rng);
    std::set<oracle::Binding> got;
    const auto subs = SatisfyAll(m.body, m.store);
    for (const Substitution& s : subs) got.insert(s.Sorted());
    EXPECT_EQ(got.size(), subs.size()) << "duplicate substitution, case " << i;
    EXPECT_EQ(got, oracle::Groundings(m.body, m.store, m.domain, {}))
        << "case " << i << ": " << ToString(m.body);
  }
}

TEST(SatisfyProperty, SeedRestrictsEnumeration) {
  ScopedWarningCapture quiet;
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const oracle::MatchInstance m = oracle::RandomMatchInstance(rng);
    const Symbol a = Symbol::Intern("A");
    const Symbol c = m.domain[rng.Below(m.domain.size())];
    std::set<oracle::Binding> got;
    for (const Substitution& s : SatisfyAll(m.body, m.store, Substitution{{a, c}})) {
      got.insert(s.Sorted());
    }
    std::set<oracle::Binding> want;
    for (const auto& b : oracle::Groundings(m.body, m.store, m.domain, {{"A", c}})) {
      want.insert(b);
    }
    // The oracle always binds A; drop substitutions where A is not in the body.
    bool has_a = false;
    for (const Literal& lit : m.body) {
      for (Symbol v : lit.Variables()) has_a = has_a || v == a;
    }
    if (has_a) EXPECT_EQ(got, want) << ToString(m.body);
  }
}

TEST(SatisfyProperty, ExistsAgreesWithSatisfy) {
  ScopedWarningCapture quiet;
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const oracle::MatchInstance m = oracle::RandomMatchInstance(rng);
    EXPECT_EQ(Exists(m.body, m.store), !SatisfyAll(m.body, m.store).empty());
  }
}

}  // namespace
}  // namespace rdnkbp
