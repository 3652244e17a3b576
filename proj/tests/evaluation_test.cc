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
#include <vector>

#include "oracles.h"
#include "rdnkbp/error.h"
#include "rdnkbp/evaluation.h"

namespace rdnkbp {
namespace {

ScoredSet Set(const std::vector<double>& pos, const std::vector<double>& neg) {
  ScoredSet s;
  for (double p : pos) s.push_back({p, true});
  for (double n : neg) s.push_back({n, false});
  return s;
}

TEST(AucRoc, Examples) {
  EXPECT_EQ(AucRoc(Set({0.9}, {0.1})), 1.0);
  EXPECT_EQ(AucRoc(Set({0.5}, {0.5})), 0.5);
  EXPECT_EQ(AucRoc(Set({0.8, 0.4}, {0.6, 0.2})), 0.75);
  EXPECT_EQ(AucRoc(Set({0.8, 0.4}, {0.6, 0.2})), oracle::PairwiseAuc(Set({0.8, 0.4}, {0.6, 0.2})));
}

TEST(AucRoc, SingleClassThrows) {
  EXPECT_THROW(AucRoc(Set({0.1, 0.2}, {})), DataError);
  EXPECT_THROW(AucRoc(Set({}, {0.3})), DataError);
  EXPECT_THROW(AucRoc({}), DataError);
}

TEST(F1, Examples) {
  EXPECT_EQ(F1(Set({0.9, 0.8}, {0.2, 0.1}), 0.5), 1.0);
  EXPECT_EQ(F1(Set({0.3}, {0.2}), 0.5), 0.0);
  EXPECT_DOUBLE_EQ(F1(Set({0.9, 0.3}, {0.7}), 0.5), 0.5);
  EXPECT_EQ(F1(Set({}, {0.9}), 0.5), 0.0);
}

TEST(RecallAtPrecision, Examples) {
  EXPECT_EQ(RecallAtPrecision(Set({0.9, 0.8}, {0.2, 0.1}), 0.66), 1.0);
  EXPECT_EQ(RecallAtPrecision(Set({0.2, 0.1}, {0.9, 0.8}), 0.66), 0.0);
  // Threshold 0.7 gives P = R = 2/3, but threshold 0.2 reaches P = 3/4 at
  // full recall, so the best qualifying point has recall 1.
  const ScoredSet mixed = Set({0.9, 0.7, 0.2}, {0.8, 0.1});
  EXPECT_EQ(RecallAtPrecision(mixed, 0.66), oracle::SweepRecallAtPrecision(mixed, 0.66));
  EXPECT_EQ(RecallAtPrecision(mixed, 0.66), 1.0);
  EXPECT_DOUBLE_EQ(RecallAtPrecision(mixed, 0.8), 1.0 / 3.0);
}

TEST(SweepThresholds, TiesFormOnePoint) {
  const auto points = SweepThresholds(Set({0.5, 0.5, 0.9}, {0.5, 0.1}));
  ASSERT_EQ(points.size(), 3u);
  EXPECT_EQ(points[0].threshold, 0.9);
  EXPECT_EQ(points[1].threshold, 0.5);
  EXPECT_DOUBLE_EQ(points[1].precision, 0.75);
  EXPECT_EQ(points[1].recall, 1.0);
}

TEST(Aggregate, Examples) {
  const RunAggregate one = Aggregate("auc", {0.8});
  EXPECT_EQ(one.mean, 0.8);
  EXPECT_EQ(one.stddev, 0);
  const RunAggregate two = Aggregate("auc", {0.6, 0.8});
  EXPECT_DOUBLE_EQ(two.mean, 0.7);
  EXPECT_NEAR(two.stddev, std::sqrt(0.02), 1e-12);
  EXPECT_NEAR(two.stddev, 0.1414, 5e-5);
  EXPECT_EQ(Aggregate("auc", {0.3, 0.3, 0.3, 0.3, 0.3}).stddev, 0);
  EXPECT_EQ(two.values, (std::vector<double>{0.6, 0.8}));
  EXPECT_EQ(two.metric, "auc");
}

TEST(EvaluationProperty, AucMatchesPairwiseCount) {
  Rng rng(91);
  for (int trial = 0; trial < 200; ++trial) {
    const ScoredSet s = oracle::RandomScoredSet(rng, 1000, trial % 2 ? 10 : 0);
    EXPECT_NEAR(AucRoc(s), oracle::PairwiseAuc(s), 1e-9);
  }
}

TEST(EvaluationProperty, RecallAtPrecisionMatchesSweep) {
  Rng rng(92);
  for (int trial = 0; trial < 200; ++trial) {
    const ScoredSet s = oracle::RandomScoredSet(rng, 300, trial % 2 ? 7 : 0);
    for (double p : {0.1, 0.5, 0.66, 0.9, 1.0}) {
      EXPECT_EQ(RecallAtPrecision(s, p), oracle::SweepRecallAtPrecision(s, p));
    }
  }
}

TEST(EvaluationProperty, AucInvariantUnderMonotoneTransform) {
  Rng rng(93);
  for (int trial = 0; trial < 200; ++trial) {
    ScoredSet s = oracle::RandomScoredSet(rng, 500, trial % 2 ? 20 : 0);
    const double before = AucRoc(s);
    for (ScoredItem& item : s) item.score = std::exp(3 * item.score) - 7;
    EXPECT_NEAR(AucRoc(s), before, 1e-12);
  }
}

TEST(EvaluationProperty, BestF1DominatesObservedThresholds) {
  Rng rng(94);
  for (int trial = 0; trial < 200; ++trial) {
    const ScoredSet s = oracle::RandomScoredSet(rng, 200, trial % 2 ? 5 : 0);
    const OperatingPoint best = BestF1(s);
    EXPECT_NEAR(best.f1, F1(s, best.threshold), 1e-12);
    for (const ScoredItem& item : s) EXPECT_GE(best.f1, F1(s, item.score) - 1e-12);
  }
}

}  // namespace
}  // namespace rdnkbp
