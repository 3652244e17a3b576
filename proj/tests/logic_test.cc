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
#include "rdnkbp/error.h"
#include "rdnkbp/fact_store.h"
#include "rdnkbp/logic.h"

namespace rdnkbp {
namespace {

TEST(ParseFact, BareConstants) {
  const Fact f = ParseFact("wordLemma(w5, father).");
  EXPECT_EQ(f.predicate.str(), "wordLemma");
  ASSERT_EQ(f.arity(), 2u);
  EXPECT_EQ(f.args[0], Term::Bare("w5"));
  EXPECT_EQ(f.args[1], Term::Bare("father"));
  EXPECT_EQ(f.ToString(), "wordLemma(w5,father)");
}

TEST(ParseFact, QuotedTypeConstant) {
  const Fact f = ParseFact("entityType(m1, \"PER\").");
  EXPECT_EQ(f.args[1], Term::Quoted("PER"));
  EXPECT_TRUE(f.args[1].is_quoted());
  EXPECT_EQ(f.args[1].text(), "PER");
  EXPECT_NE(f.args[1], Term::Bare("per"));
}

TEST(ParseFact, VariableIsRejected) {
  EXPECT_THROW(ParseFact("age(Obama, 54)."), DataError);
}

TEST(ParseFact, SyntaxErrorReportsPosition) {
  try {
    ParseFact("p(a,,b).");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(ParseClause, TableRuleTwo) {
  const Clause c = ParseClause(
      "entityType(A,\"PER\"), entityType(B,\"NUM\"), prevLemma(B,\"age\") -> age(A,B)");
  EXPECT_EQ(c.body.size(), 3u);
  EXPECT_EQ(c.head.ToString(), "age(A,B)");
}

TEST(ParseClause, UnicodeArrow) {
  EXPECT_EQ(ParseClause("p(A,B) → age(A,B)").head.ToString(), "age(A,B)");
}

TEST(ParseClause, RangeRestriction) {
  EXPECT_THROW(ParseClause("-> age(A,B)"), DataError);
  EXPECT_THROW(ParseClause("p(A) -> age(A,B)"), DataError);
}

TEST(ParseClause, NegatedLiteral) {
  const Clause c = ParseClause("p(A), \\+ q(A) -> r(A)");
  ASSERT_EQ(c.body.size(), 2u);
  EXPECT_FALSE(c.body[0].negated);
  EXPECT_TRUE(c.body[1].negated);
  EXPECT_EQ(c.body[1].atom.ToString(), "q(A)");
  EXPECT_EQ(c.head.ToString(), "r(A)");
}

TEST(ParseClause, UnsafeNegation) {
  EXPECT_THROW(ParseClause("\\+ q(A), p(A) -> r(A)"), DataError);
}

TEST(FactStore, InsertionIsIdempotent) {
  FactStore store;
  store.LoadText("p(a,b).\n% comment\n\nq(c).\n");
  const size_t n = store.size();
  store.LoadText("p(a,b).\nq(c).\n");
  EXPECT_EQ(store.size(), n);
  EXPECT_EQ(n, 2u);
}

TEST(FactStore, ArityConflict) {
  FactStore store;
  store.Add(ParseFact("p(a,b)"));
  EXPECT_THROW(store.Add(ParseFact("p(a)")), DataError);
  store.DeclareArity(Symbol::Intern("z"), 1);
  EXPECT_THROW(store.Add(ParseFact("z(a,b)")), DataError);
}

TEST(FactStore, IndexMatchesScan) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const oracle::MatchInstance m = oracle::RandomMatchInstance(rng);
    for (Symbol pred : m.store.Predicates()) {
      for (size_t pos = 0; pos < static_cast<size_t>(m.store.Arity(pred)); ++pos) {
        for (Symbol c : m.domain) {
          EXPECT_EQ(m.store.Lookup(pred, pos, c), m.store.Scan(pred, pos, c));
        }
      }
    }
  }
}

TEST(CanonicalPrint, FactRoundTrip) {
  Rng rng(12);
  for (int i = 0; i < 30; ++i) {
    const oracle::MatchInstance m = oracle::RandomMatchInstance(rng);
    for (size_t k = 0; k < m.store.size(); ++k) {
      const Fact f = m.store.fact(k);
      EXPECT_EQ(ParseFact(f.ToString()), f);
    }
  }
  for (const char* text : {"w(\"He said \\\"hi\\\"\")", "x(\"a b\",3.5,-2)",
                           "y(\"été\")"}) {
    const Fact f = ParseFact(text);
    EXPECT_EQ(ParseFact(f.ToString()), f) << text;
  }
}

TEST(CanonicalPrint, ClauseRoundTrip) {
  for (const char* text :
       {"entityType(A,\"PER\"), nextWord(A,C), word(C,\",\"), nextWord(C,B) -> age(A,B)",
        "p(A), \\+ q(A,b) -> r(A)", "similarWords(\"father\",W,S), S >= 0.5 -> t(W)"}) {
    const Clause c = ParseClause(text);
    EXPECT_EQ(ParseClause(c.ToString()), c) << text;
  }
}

TEST(Term, NumericValue) {
  EXPECT_EQ(NumericValue(Term::Bare("0.9000")), 0.9);
  EXPECT_EQ(NumericValue(Term::Quoted("42")), std::nullopt);
  EXPECT_EQ(NumericValue(Term::Bare("abc")), std::nullopt);
}

TEST(FactStore, TextRoundTripPreservesFingerprint) {
  FactStore a;
  a.LoadText("p(a,\"B c\").\nq(1).\n");
  FactStore b;
  b.LoadText(a.ToText());
  EXPECT_EQ(a.Fingerprint(), b.Fingerprint());
}

}  // namespace
}  // namespace rdnkbp
