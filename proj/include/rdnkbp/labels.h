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

#ifndef RDNKBP_LABELS_H_
#define RDNKBP_LABELS_H_

#include <string>
#include <string_view>
#include <vector>

#include "rdnkbp/featurizer.h"

namespace rdnkbp {

enum class Provenance { kGold, kWeak, kSampledNegative };

struct LabeledExample {
  CandidatePair pair;
  bool positive = false;
  Provenance provenance = Provenance::kGold;
  double weak_score = 1.0;  // kWeak only

  std::string ProvenanceString() const;
};

// Gold files: tab-separated `relation doc_id sent_id arg1 arg2` per positive
// pair; `#` starts a comment line.
std::vector<CandidatePair> ParseGold(std::string_view text);
std::vector<CandidatePair> LoadGold(const std::string& path);
std::string FormatGold(const std::vector<CandidatePair>& pairs);

// Labeled example files: gold columns plus `label` (pos|neg) and
// `provenance` (gold | weak:<score> | sampled-negative).
std::vector<LabeledExample> ParseExamples(std::string_view text);
std::vector<LabeledExample> LoadExamples(const std::string& path);
std::string FormatExamples(const std::vector<LabeledExample>& examples);

// Positive gold examples for the pairs of `relation`.
std::vector<LabeledExample> GoldExamples(
    const std::vector<CandidatePair>& gold, std::string_view relation);

}  // namespace rdnkbp

#endif  // RDNKBP_LABELS_H_
