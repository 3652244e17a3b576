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

#ifndef RDNKBP_SYNTHETIC_H_
#define RDNKBP_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdnkbp/document.h"
#include "rdnkbp/featurizer.h"

namespace rdnkbp {

// Planted-pattern corpus description. Sentence templates, name pools and
// vocabularies come from a versioned fixture (the built-in one by default).
struct GeneratorSpec {
  int n_sentences = 100;
  // Template name -> fraction of sentences; the rest use the fixture's filler
  // template. Fractions must sum to at most 1.
  std::vector<std::pair<std::string, double>> mix;
  // Probability that the planted label of a template pair is replaced by a
  // fair coin flip.
  double noise = 0;
  uint64_t seed = 0;
  std::string doc_prefix = "syn";
  int sentences_per_document = 5;

  void Validate() const;
};

struct SyntheticCorpus {
  std::vector<AnnotatedDocument> documents;
  std::vector<CandidatePair> gold;
  // Template of every sentence, in document order.
  std::vector<std::string> sentence_templates;
};

// Built-in fixture text and its version.
std::string_view SyntheticFixture();
int SyntheticFixtureVersion(std::string_view fixture = SyntheticFixture());
std::vector<std::string> SyntheticTemplateNames(
    std::string_view fixture = SyntheticFixture());

// Deterministic in (spec, fixture). Template counts are the rounded
// differences of cumulative fractions, so each matches its fraction within
// 1 / n_sentences.
SyntheticCorpus Generate(const GeneratorSpec& spec,
                         std::string_view fixture = SyntheticFixture());

}  // namespace rdnkbp

#endif  // RDNKBP_SYNTHETIC_H_
