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
#include <vector>

#include "oracles.h"
#include "rdnkbp/error.h"
#include "rdnkbp/fact_store.h"
#include "rdnkbp/inference.h"
#include "rdnkbp/logging.h"
#include "rdnkbp/matcher.h"

namespace rdnkbp {
namespace {

BoostedModel Constant(const std::string& relation, double psi0) {
  BoostedModel m;
  m.relation = relation;
  m.psi0 = psi0;
  return m;
}

BoostedModel Stump(const std::string& relation, const std::string& test, double yes,
                   double no) {
  BoostedModel m;
  m.relation = relation;
  RegressionTree t;
  t.nodes.resize(3);
  t.nodes[0].test = ParseConjunction(test);
  t.nodes[0].true_child = 1;
  t.nodes[0].false_child = 2;
  t.nodes[1].value = yes;
  t.nodes[2].value = no;
  m.trees.push_back(t);
  return m;
}

CandidatePair Cand(const std::string& relation, int i) {
  return {relation, "d" + std::to_string(i), "s", "m1", "m2"};
}

TEST(PredictIndependent, Examples) {
  const RelationRegistry registry = RelationRegistry::Kbp();
  const FactStore store;
  ModelMap models;
  models["per:age"] = Constant("per:age", 0);
  models["per:spouse"] = Constant("per:spouse", 4);
  const auto p = PredictIndependent(models, {Cand("per:age", 0), Cand("per:spouse", 0)},
                                    store, registry);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].probability, 0.5);
  EXPECT_NEAR(p[1].probability, 0.9820, 5e-5);
  EXPECT_NEAR(p[1].probability, oracle::Logistic(4), 1e-12);
  EXPECT_TRUE(PredictIndependent(models, {}, store, registry).empty());
}

TEST(PredictIndependent, WarnsWhenModelTestsTarget) {
  ModelMap models;
  models["per:parents"] = Stump("per:parents", "siblings(A,B)", 1, -1);
  ScopedWarningCapture capture;
  PredictIndependent(models, {Cand("per:parents", 0)}, FactStore(),
                     RelationRegistry::Kbp());
  EXPECT_TRUE(capture.Contains("siblings"));
}

TEST(PredictIndependentProperty, ProbabilityIsSigmoidOfPotential) {
  Rng rng(81);
  FactStore store;
  std::vector<CandidatePair> cands;
  for (int i = 0; i < 200; ++i) {
    cands.push_back(Cand("per:age", i));
    if (rng.Uniform() < 0.5) store.Add(ParseFact("cue(d" + std::to_string(i) + "_s_m1)"));
  }
  ModelMap models;
  models["per:age"] = Stump("per:age", "cue(A)", rng.Uniform() * 10, -rng.Uniform() * 10);
  models["per:age"].psi0 = rng.Uniform();
  for (const Prediction& p :
       PredictIndependent(models, cands, store, RelationRegistry::Kbp())) {
    EXPECT_NEAR(p.probability, oracle::Logistic(p.potential), 1e-12);
    EXPECT_DOUBLE_EQ(p.potential, Potential(models["per:age"], p.candidate, store));
  }
}

GibbsConfig Chain(int burn_in, int samples, uint64_t seed) {
  GibbsConfig c;
  c.burn_in = burn_in;
  c.samples = samples;
  c.seed = seed;
  return c;
}

TEST(GibbsInfer, SaturatedPotential) {
  ModelMap models;
  models["per:age"] = Constant("per:age", 20);
  const auto p = GibbsInfer(models, {Cand("per:age", 0)}, FactStore(),
                            RelationRegistry::Kbp(), Chain(10, 2000, 1));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_GE(p[0].probability, 0.999);
}

TEST(GibbsInfer, DegenerateChainMatchesIndependent) {
  Rng rng(82);
  FactStore store;
  std::vector<CandidatePair> cands;
  for (int i = 0; i < 30; ++i) {
    cands.push_back(Cand("per:age", i));
    if (i % 3 == 0) store.Add(ParseFact("cue(d" + std::to_string(i) + "_s_m1)"));
  }
  ModelMap models;
  // Potentials of +-3 keep the binomial spread of 2000 draws near 0.005.
  models["per:age"] = Stump("per:age", "cue(A)", 3, -3);
  const RelationRegistry registry = RelationRegistry::Kbp();
  const auto indep = PredictIndependent(models, cands, store, registry);
  for (uint64_t seed : {3, 4}) {
    const auto gibbs = GibbsInfer(models, cands, store, registry, Chain(100, 2000, seed));
    for (size_t i = 0; i < cands.size(); ++i) {
      EXPECT_NEAR(gibbs[i].probability, indep[i].probability, 0.02);
      EXPECT_EQ(gibbs[i].potential, indep[i].potential);
    }
  }
}

ModelMap ExclusivePair() {
  ModelMap m;
  m["per:parents"] = Stump("per:parents", "siblings(A,B)", -2, 2);
  m["per:siblings"] = Stump("per:siblings", "parents(A,B)", -2, 2);
  return m;
}

TEST(GibbsInfer, ExclusiveAtomsAreSymmetric) {
  const std::vector<CandidatePair> two = {Cand("per:parents", 0), Cand("per:siblings", 0)};
  const auto p = GibbsInfer(ExclusivePair(), two, FactStore(), RelationRegistry::Kbp(),
                            Chain(100, 50000, 5));
  EXPECT_NEAR(p[0].probability, p[1].probability, 0.03);
  // Stationary marginal of exp(2x + 2y - 4xy), by enumeration.
  double z = 0, x_true = 0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double w = std::exp(2.0 * x + 2.0 * y - 4.0 * x * y);
      z += w;
      if (x) x_true += w;
    }
  }
  EXPECT_NEAR(p[0].probability, x_true / z, 0.03);
  EXPECT_NEAR(p[1].probability, x_true / z, 0.03);
}

TEST(GibbsInfer, ReproducibleAndSeedRobust) {
  const std::vector<CandidatePair> two = {Cand("per:parents", 0), Cand("per:siblings", 0)};
  const RelationRegistry registry = RelationRegistry::Kbp();
  const auto a = GibbsInfer(ExclusivePair(), two, FactStore(), registry, Chain(50, 50000, 7));
  const auto b = GibbsInfer(ExclusivePair(), two, FactStore(), registry, Chain(50, 50000, 7));
  const auto c = GibbsInfer(ExclusivePair(), two, FactStore(), registry, Chain(50, 50000, 8));
  EXPECT_EQ(FormatPredictions(a), FormatPredictions(b));
  for (size_t i = 0; i < 2; ++i) EXPECT_NEAR(a[i].probability, c[i].probability, 0.03);
}

TEST(GibbsInfer, BaseStoreUntouched) {
  FactStore store;
  store.LoadText("cue(d0_s_m1).\nsiblings(d1_s_m1,d1_s_m2).\n");
  const uint64_t before = store.Fingerprint();
  const size_t size = store.size();
  std::vector<CandidatePair> cands;
  for (int i = 0; i < 4; ++i) {
    cands.push_back(Cand("per:parents", i));
    cands.push_back(Cand("per:siblings", i));
  }
  GibbsInfer(ExclusivePair(), cands, store, RelationRegistry::Kbp(), Chain(5, 20, 1));
  EXPECT_EQ(store.Fingerprint(), before);
  EXPECT_EQ(store.size(), size);
}

TEST(GibbsInfer, EmptyAndInvalidConfig) {
  EXPECT_TRUE(GibbsInfer(ExclusivePair(), {}, FactStore(), RelationRegistry::Kbp(),
                         Chain(1, 1, 1))
                  .empty());
  EXPECT_THROW(GibbsInfer(ExclusivePair(), {}, FactStore(), RelationRegistry::Kbp(),
                          Chain(-1, 1, 1)),
               DataError);
  EXPECT_THROW(GibbsInfer(ExclusivePair(), {}, FactStore(), RelationRegistry::Kbp(),
                          Chain(1, 0, 1)),
               DataError);
}

TEST(PredictionFile, RoundTrip) {
  ModelMap models;
  models["per:age"] = Constant("per:age", 0.37);
  const auto p = PredictIndependent(models, {Cand("per:age", 0), Cand("per:age", 1)},
                                    FactStore(), RelationRegistry::Kbp());
  const std::string text = FormatPredictions(p);
  const auto back = ParsePredictions(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].candidate.key(), p[1].candidate.key());
  EXPECT_NEAR(back[1].probability, p[1].probability, 1e-6);
  EXPECT_EQ(FormatPredictions(back), text);
  EXPECT_THROW(ParsePredictions("per:age\td\ts\tm1\n"), DataError);
  EXPECT_THROW(ParsePredictions("per:age\td\ts\tm1\tm2\tlots\n"), DataError);
}

}  // namespace
}  // namespace rdnkbp
