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

#ifndef RDNKBP_LEARNER_H_
#define RDNKBP_LEARNER_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rdnkbp/fact_store.h"
#include "rdnkbp/featurizer.h"
#include "rdnkbp/labels.h"
#include "rdnkbp/logic.h"
#include "rdnkbp/model.h"
#include "rdnkbp/modes.h"

namespace rdnkbp {

enum class AdvicePolarity { kPreferTrue, kPreferFalse };

// Human advice: when `body` holds for a candidate of `relation` (A and B bound
// to its two mentions), the label should lean towards `polarity`.
struct AdviceRule {
  std::string relation;
  AdvicePolarity polarity = AdvicePolarity::kPreferTrue;
  Conjunction body;

  std::string ToString() const;
};

// `relation :: prefer-true|prefer-false :: body` per line; `%`/`#` comments.
std::vector<AdviceRule> ParseAdvice(std::string_view text,
                                    const RelationRegistry& registry);
std::vector<AdviceRule> LoadAdvice(const std::string& path,
                                   const RelationRegistry& registry);

// Uniform sample without replacement of round(ratio * |positives|) candidates
// that are not positives, sorted by key. Takes the whole pool, with a
// warning, when it is too small.
std::vector<LabeledExample> SampleNegatives(
    const std::vector<LabeledExample>& positives,
    const std::vector<CandidatePair>& candidates, double ratio, uint64_t seed);

struct AdviceCounts {
  int prefer_true = 0;
  int prefer_false = 0;
};

// Advice rules of the example's relation whose bodies hold for it.
AdviceCounts CountAdvice(const CandidatePair& pair,
                         const std::vector<AdviceRule>& advice,
                         const FactView& store);

// alpha * (I - sigmoid(psi)) + (1 - alpha) * clamp(n_t - n_f, -1, 1), or the
// data term alone when alpha == 1 or `has_advice` is false.
double CombineGradient(bool positive, double psi, const AdviceCounts& counts,
                       bool has_advice, double alpha);

// Functional gradient of one example under `model`.
double Gradient(const LabeledExample& example, const BoostedModel& model,
                const std::vector<AdviceRule>& advice, double alpha,
                const FactView& store);

// sum(g) / sum(|g| (1 - |g|)), or the mean when the denominator is < 1e-8.
double LeafValue(const std::vector<double>& gradients);

// Fits one relational regression tree to the gradients of examples whose
// target variables are bound by `seeds`.
RegressionTree LearnTree(const std::vector<Substitution>& seeds,
                         const std::vector<double>& gradients,
                         const FactView& store, const ModeSet& modes,
                         const TrainConfig& config);

struct IterationStats {
  double loss = 0;  // mean negative log-likelihood
  double mean_positive_probability = 0;
};

struct BoostResult {
  BoostedModel model;
  // trace[k] describes the model after k trees.
  std::vector<IterationStats> trace;
};

// Functional gradient boosting for one relation. Throws TrainingError when
// the examples are empty or contain a single class.
BoostResult BoostRelation(const std::string& relation,
                          const std::vector<LabeledExample>& examples,
                          const FactView& store,
                          const std::vector<AdviceRule>& advice,
                          const ModeSet& modes, const TrainConfig& config);

// One model per relation. With config.joint the positive examples of every
// relation are asserted as target facts and other relations' predicates are
// available to the trees; without it they are excluded.
std::map<std::string, BoostedModel> Train(
    const std::vector<std::string>& relations,
    const std::map<std::string, std::vector<LabeledExample>>& examples,
    const FactView& store, const std::vector<AdviceRule>& advice,
    const ModeSet& base_modes, const RelationRegistry& registry,
    const TrainConfig& config);

// Target facts for the positive examples, as asserted by joint training.
std::vector<Fact> PositiveTargetFacts(
    const std::map<std::string, std::vector<LabeledExample>>& examples,
    const RelationRegistry& registry);

}  // namespace rdnkbp

#endif  // RDNKBP_LEARNER_H_
