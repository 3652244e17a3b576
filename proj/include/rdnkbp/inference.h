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

#ifndef RDNKBP_INFERENCE_H_
#define RDNKBP_INFERENCE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rdnkbp/fact_store.h"
#include "rdnkbp/featurizer.h"
#include "rdnkbp/model.h"

namespace rdnkbp {

struct Prediction {
  CandidatePair candidate;
  double probability = 0;
  // Potential of the candidate given the evidence alone (no other target
  // atoms asserted). For independent predictions probability is its sigmoid.
  double potential = 0;
};

using ModelMap = std::map<std::string, BoostedModel>;

double Potential(const BoostedModel& model, const CandidatePair& candidate,
                 const FactView& store);

// sigmoid(potential) per candidate. Warns when a model tests another target
// relation, whose atoms are absent from the evidence.
std::vector<Prediction> PredictIndependent(const ModelMap& models,
                                           const std::vector<CandidatePair>& candidates,
                                           const FactView& store,
                                           const RelationRegistry& registry);

struct GibbsConfig {
  int burn_in = 100;
  int samples = 500;
  uint64_t seed = 0;

  void Validate() const;
};

// Gibbs sampling over one boolean per candidate atom. Each atom starts from
// its independent prediction; a sweep visits atoms in one seeded shuffled
// order and resamples each from sigmoid(potential) with the current values of
// the other atoms asserted in a scratch overlay. The probability is the
// fraction of post-burn-in sweeps in which the atom was true. The base store
// is never modified.
std::vector<Prediction> GibbsInfer(const ModelMap& models,
                                   const std::vector<CandidatePair>& candidates,
                                   const FactView& store,
                                   const RelationRegistry& registry,
                                   const GibbsConfig& config);

// Tab-separated `relation doc_id sent_id arg1 arg2 probability`.
std::string FormatPredictions(const std::vector<Prediction>& predictions);
std::vector<Prediction> ParsePredictions(std::string_view text);

}  // namespace rdnkbp

#endif  // RDNKBP_INFERENCE_H_
