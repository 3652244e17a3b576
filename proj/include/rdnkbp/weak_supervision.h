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

#ifndef RDNKBP_WEAK_SUPERVISION_H_
#define RDNKBP_WEAK_SUPERVISION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdnkbp/document.h"
#include "rdnkbp/fact_store.h"
#include "rdnkbp/featurizer.h"
#include "rdnkbp/labels.h"
#include "rdnkbp/logic.h"

namespace rdnkbp {

// Expert rule `weight :: body -> relation(A, B)` with a positive weight.
struct WeightedClause {
  std::string id;  // r1, r2, ... in file order
  double weight = 0;
  Clause clause;
};

// Parses one `weight :: clause` rule per line (`%`/`#` comments, blank lines
// skipped). The head must be a binary atom over two distinct variables whose
// predicate belongs to a registry relation.
std::vector<WeightedClause> ParseWeightedRules(std::string_view text,
                                               const RelationRegistry& registry);
std::vector<WeightedClause> LoadWeightedRules(const std::string& path,
                                              const RelationRegistry& registry);

struct WeakLabel {
  CandidatePair candidate;
  double score = 0;  // sigmoid of the summed weights of fired rules
  std::vector<std::string> fired_rules;
};

// Fires every rule for the candidate's relation whose body holds with the
// head variables bound to the candidate's mentions. A rule fires at most once
// regardless of its number of groundings. Returns nullopt when nothing fires.
std::optional<WeakLabel> ScoreCandidate(const CandidatePair& candidate,
                                        const std::vector<WeightedClause>& rules,
                                        const FactView& store,
                                        const RelationRegistry& registry);

// Scores all candidates, keeps those with score >= tau, sorts by descending
// score (ties by candidate key) and keeps the first `cap`. The ranking is
// fully determined by the inputs; `seed` is accepted for interface symmetry
// with the other labelers and does not affect the result.
std::vector<LabeledExample> WeakLabelCorpus(
    const std::vector<CandidatePair>& candidates,
    const std::vector<WeightedClause>& rules, const FactView& store,
    const RelationRegistry& registry, double tau, size_t cap, uint64_t seed);

// Entity pairs of one relation from a knowledge-base snapshot.
struct KBPairFile {
  std::string relation;
  std::vector<std::pair<std::string, std::string>> pairs;
};

// Tab-separated `relation entity1 entity2` lines grouped by relation;
// duplicate pairs are dropped with a warning.
std::map<std::string, KBPairFile> ParseKB(std::string_view text);
std::map<std::string, KBPairFile> LoadKB(const std::string& path);

// Same-sentence candidates whose mention texts equal a KB pair
// (case-insensitive, full span) become positive examples with weak(1.0).
std::vector<LabeledExample> DistantLabel(
    const KBPairFile& kb, const std::vector<AnnotatedDocument>& docs,
    const RelationRegistry& registry);

}  // namespace rdnkbp

#endif  // RDNKBP_WEAK_SUPERVISION_H_
