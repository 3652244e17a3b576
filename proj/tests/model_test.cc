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

#include <cmath>
#include <string>

#include "oracles.h"
#include "rdnkbp/error.h"
#include "rdnkbp/fact_store.h"
#include "rdnkbp/matcher.h"
#include "rdnkbp/model.h"

namespace rdnkbp {
namespace {

RegressionTree Stump(const std::string& test, double yes, double no) {
  RegressionTree t;
  t.nodes.resize(3);
  t.nodes[0].test = ParseConjunction(test);
  t.nodes[0].true_child = 1;
  t.nodes[0].false_child = 2;
  t.nodes[1].value = yes;
  t.nodes[2].value = no;
  return t;
}

const Symbol kA = Symbol::Intern("a1");
const Symbol kB = Symbol::Intern("b1");

TEST(Potential, EmptyModelIsZero) {
  EXPECT_EQ(BoostedModel().Potential(FactStore(), kA, kB), 0.0);
}

TEST(Potential, StumpRouting) {
  FactStore store;
  store.LoadText("cue(a1).\n");
  BoostedModel m;
  m.trees.push_back(Stump("cue(A)", 1, -1));
  EXPECT_EQ(m.Potential(store, kA, kB), 1.0);
  EXPECT_EQ(m.Potential(store, kB, kA), -1.0);
}

TEST(Potential, SumOfTrees) {
  FactStore store;
  store.LoadText("cue(a1).\nlink(a1,c).\nlink(c,b1).\n");
  BoostedModel m;
  m.psi0 = 0.25;
  m.trees.push_back(Stump("cue(A)", 0.5, -0.5));
  m.trees.push_back(Stump("link(A,X), link(X,B)", 2, -2));
  m.trees.push_back(Stump("cue(B)", 4, -4));
  double want = m.psi0;
  for (const RegressionTree& t : m.trees) {
    const bool holds = Exists(t.nodes[0].test, store, TargetSeed(kA, kB));
    want += t.nodes[holds ? 1 : 2].value;
  }
  EXPECT_EQ(want, 0.25 + 0.5 + 2 - 4);
  EXPECT_DOUBLE_EQ(m.Potential(store, kA, kB), want);
}

TEST(RegressionTree, NestedTestsIncludeTrueAncestors) {
  // Root binds X; the child test reuses it.
  RegressionTree t;
  t.nodes.resize(5);
  t.nodes[0].test = ParseConjunction("link(A,X)");
  t.nodes[0].true_child = 1;
  t.nodes[0].false_child = 4;
  t.nodes[1].test = ParseConjunction("cue(X)");
  t.nodes[1].true_child = 2;
  t.nodes[1].false_child = 3;
  t.nodes[2].value = 3;
  t.nodes[3].value = 2;
  t.nodes[4].value = 1;
  FactStore store;
  store.LoadText("link(a1,c).\nlink(a1,d).\ncue(d).\nlink(b1,c).\n");
  EXPECT_EQ(t.Evaluate(store, TargetSeed(kA, kB)), 3);
  EXPECT_EQ(t.Evaluate(store, TargetSeed(kB, kA)), 2);
  EXPECT_EQ(t.Evaluate(store, TargetSeed(Symbol::Intern("zz"), kA)), 1);
  EXPECT_EQ(t.Depth(), 2);
}

BoostedModel SampleModel() {
  BoostedModel m;
  m.relation = "per:parents";
  m.psi0 = 0.1;
  m.config.n_trees = 2;
  m.config.alpha = 0.3;
  m.config.rng_seed = 12345678901234ULL;
  m.config.joint = true;
  m.trees.push_back(Stump("lemmaBetween(A,B,\"father\"), wordString(X1,\"a \\\"b\\\"\")",
                          1.0 / 3.0, -std::sqrt(2.0)));
  m.trees.push_back(Stump("similarWords(\"father\",W,S), S >= 0.75, \\+ siblings(A,B)",
                          1e-300, -7.125e12));
  return m;
}

TEST(Serialization, RoundTripIsExact) {
  const BoostedModel m = SampleModel();
  const std::string text = m.Serialize();
  const BoostedModel back = BoostedModel::Parse(text);
  EXPECT_EQ(back.Serialize(), text);
  EXPECT_EQ(back.relation, m.relation);
  EXPECT_EQ(back.psi0, m.psi0);
  EXPECT_EQ(back.config, m.config);
  ASSERT_EQ(back.trees.size(), 2u);
  EXPECT_EQ(back.trees[0].nodes[1].value, 1.0 / 3.0);
  EXPECT_EQ(back.trees[0].nodes[2].value, -std::sqrt(2.0));
  EXPECT_EQ(back.trees[1].nodes[0].test, m.trees[1].nodes[0].test);
  EXPECT_TRUE(back.UsesPredicate(Symbol::Intern("siblings")));
}

TEST(SerializationProperty, RandomValuesRoundTrip) {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    BoostedModel m;
    m.relation = "per:age";
    m.psi0 = (rng.Uniform() - 0.5) * std::pow(10.0, rng.Below(20));
    for (size_t k = rng.Below(4); k > 0; --k) {
      m.trees.push_back(Stump("cue(A)", rng.Uniform() - 0.5, std::ldexp(rng.Uniform(), -40)));
    }
    const BoostedModel back = BoostedModel::Parse(m.Serialize());
    EXPECT_EQ(back.psi0, m.psi0);
    for (size_t k = 0; k < m.trees.size(); ++k) {
      EXPECT_EQ(back.trees[k].nodes[1].value, m.trees[k].nodes[1].value);
      EXPECT_EQ(back.trees[k].nodes[2].value, m.trees[k].nodes[2].value);
    }
  }
}

TEST(Serialization, MalformedInput) {
  const std::string good = SampleModel().Serialize();
  EXPECT_THROW(BoostedModel::Parse(""), DataError);
  EXPECT_THROW(BoostedModel::Parse(good.substr(0, good.size() / 2)), DataError);
  std::string bad_version = good;
  bad_version.replace(good.find(' ') + 1, 1, "9");
  EXPECT_THROW(BoostedModel::Parse(bad_version), DataError);
}

TEST(TrainConfig, Validate) {
  TrainConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.n_trees = 0;
  EXPECT_THROW(c.Validate(), DataError);
  c = TrainConfig();
  c.alpha = 1.5;
  EXPECT_THROW(c.Validate(), DataError);
  c = TrainConfig();
  c.neg_pos_ratio = 0;
  EXPECT_THROW(c.Validate(), DataError);
  EXPECT_EQ(TrainConfig().neg_pos_ratio, 2.0);
}

}  // namespace
}  // namespace rdnkbp
