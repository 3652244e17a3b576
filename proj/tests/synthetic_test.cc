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
#include <map>
#include <set>
#include <string>

#include "rdnkbp/document.h"
#include "rdnkbp/error.h"
#include "rdnkbp/labels.h"
#include "rdnkbp/rng.h"
#include "rdnkbp/synthetic.h"

namespace rdnkbp {
namespace {

GeneratorSpec Spec(int n, std::vector<std::pair<std::string, double>> mix, double noise,
                   uint64_t seed) {
  GeneratorSpec spec;
  spec.n_sentences = n;
  spec.mix = std::move(mix);
  spec.noise = noise;
  spec.seed = seed;
  return spec;
}

const Sentence& SentenceOf(const SyntheticCorpus& c, const CandidatePair& p) {
  for (const AnnotatedDocument& d : c.documents) {
    if (d.doc_id == p.doc_id) return *d.FindSentence(p.sent_id);
  }
  throw std::runtime_error("missing document " + p.doc_id);
}

TEST(Generate, PureAgePatternWithoutNoise) {
  const SyntheticCorpus c = Generate(Spec(50, {{"age_comma", 1.0}}, 0, 1));
  size_t age = 0;
  for (const CandidatePair& g : c.gold) {
    if (g.relation != "per:age") continue;
    ++age;
    const Sentence& s = SentenceOf(c, g);
    const EntityMention* a = s.FindMention(g.arg1);
    const EntityMention* b = s.FindMention(g.arg2);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->type, "PER");
    EXPECT_EQ(b->type, "NUM");
    EXPECT_EQ(s.token(a->end + 1).word, ",");
    EXPECT_EQ(b->start, a->end + 2);
  }
  EXPECT_EQ(age, 50u);
}

TEST(Generate, FullNoiseDecouplesLabels) {
  const SyntheticCorpus c = Generate(
      Spec(2000, {{"age_comma", 0.5}, {"age_distractor", 0.5}}, 1.0, 2));
  std::map<std::string, int> sentences, positives;
  std::map<std::string, std::string> template_of;
  for (size_t i = 0, k = 0; i < c.documents.size(); ++i) {
    for (const Sentence& s : c.documents[i].sentences) {
      template_of[c.documents[i].doc_id + "|" + s.sent_id] = c.sentence_templates[k];
      ++sentences[c.sentence_templates[k++]];
    }
  }
  for (const CandidatePair& g : c.gold) {
    if (g.relation == "per:age") ++positives[template_of[g.doc_id + "|" + g.sent_id]];
  }
  for (const char* t : {"age_comma", "age_distractor"}) {
    const double rate = static_cast<double>(positives[t]) / sentences[t];
    // Fair coin over 1000 sentences: 5 standard deviations is about 0.08.
    EXPECT_NEAR(rate, 0.5, 0.08) << t;
  }
}

TEST(Generate, SameSeedSameCorpus) {
  const GeneratorSpec spec =
      Spec(60, {{"age_comma", 0.3}, {"parent_father", 0.3}}, 0.1, 9);
  const SyntheticCorpus a = Generate(spec), b = Generate(spec);
  ASSERT_EQ(a.documents.size(), b.documents.size());
  for (size_t i = 0; i < a.documents.size(); ++i) {
    EXPECT_EQ(DocumentToJson(a.documents[i]), DocumentToJson(b.documents[i]));
  }
  EXPECT_EQ(FormatGold(a.gold), FormatGold(b.gold));
  GeneratorSpec other = spec;
  other.seed = 10;
  EXPECT_NE(FormatGold(Generate(other).gold) + DocumentToJson(Generate(other).documents[0]),
            FormatGold(a.gold) + DocumentToJson(a.documents[0]));
}

TEST(Generate, InvalidSpecs) {
  EXPECT_THROW(Generate(Spec(10, {{"age_comma", 0.7}, {"parent_father", 0.4}}, 0, 1)),
               DataError);
  EXPECT_THROW(Generate(Spec(10, {{"age_comma", 0.5}}, 1.5, 1)), DataError);
  EXPECT_THROW(Generate(Spec(10, {{"no_such_template", 0.5}}, 0, 1)), DataError);
  EXPECT_THROW(Generate(Spec(-1, {}, 0, 1)), DataError);
}

TEST(Fixture, VersionAndTemplates) {
  EXPECT_EQ(SyntheticFixtureVersion(), 1);
  const auto names = SyntheticTemplateNames();
  const std::set<std::string> set(names.begin(), names.end());
  for (const char* t : {"age_comma", "age_yearold", "age_distractor", "parent_father",
                        "family_parent", "family_sibling", "unrelated_pair"}) {
    EXPECT_TRUE(set.count(t)) << t;
  }
}

TEST(GenerateProperty, ValidDocumentsAndPrevalence) {
  Rng rng(101);
  const auto names = SyntheticTemplateNames();
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.Below(300));
    std::vector<std::pair<std::string, double>> mix;
    double left = 1;
    for (const std::string& t : names) {
      if (t == "filler" || rng.Uniform() < 0.5) continue;
      const double f = left * rng.Uniform() * 0.6;
      mix.emplace_back(t, f);
      left -= f;
    }
    GeneratorSpec spec = Spec(n, mix, rng.Uniform(), trial);
    spec.sentences_per_document = 1 + static_cast<int>(rng.Below(7));
    const SyntheticCorpus c = Generate(spec);
    ASSERT_EQ(c.sentence_templates.size(), static_cast<size_t>(n));
    for (const AnnotatedDocument& d : c.documents) {
      AnnotatedDocument copy = ParseDocument(DocumentToJson(d));
      EXPECT_NO_THROW(ValidateDocument(copy));
    }
    std::map<std::string, int> count;
    for (const std::string& t : c.sentence_templates) ++count[t];
    for (const auto& [t, f] : mix) {
      EXPECT_LE(std::fabs(static_cast<double>(count[t]) / n - f), 1.0 / n + 1e-12)
          << t << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace rdnkbp
