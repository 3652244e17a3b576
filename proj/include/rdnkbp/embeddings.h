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

#ifndef RDNKBP_EMBEDDINGS_H_
#define RDNKBP_EMBEDDINGS_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdnkbp/logic.h"

namespace rdnkbp {

// Word vectors of one fixed dimension.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(size_t dimension = 0) : dimension_(dimension) {}

  // Inserts or replaces a vector. Throws DataError on a dimension mismatch
  // or a non-finite component.
  void Set(const std::string& word, std::vector<double> vector);

  const std::vector<double>* Find(std::string_view word) const;
  bool Contains(std::string_view word) const { return Find(word) != nullptr; }

  size_t dimension() const { return dimension_; }
  size_t size() const { return vectors_.size(); }
  const std::map<std::string, std::vector<double>, std::less<>>& vectors()
      const {
    return vectors_;
  }

 private:
  size_t dimension_;
  std::map<std::string, std::vector<double>, std::less<>> vectors_;
};

// Text format: `word v1 ... vd` per line. A leading `count dimension` header
// line (word2vec text format) is skipped. Duplicate words keep the last
// vector and produce a warning.
EmbeddingTable LoadEmbeddings(const std::string& path);
EmbeddingTable ParseEmbeddings(std::string_view text);

// dot(u, v) / (|u| |v|), clamped to [-1, 1]. Throws DataError on a zero
// vector or mismatched dimensions.
double Cosine(std::span<const double> u, std::span<const double> v);

struct SimilarityOptions {
  int k = 10;
  double tau = 0.5;
};

struct SimilarPair {
  std::string anchor;
  std::string word;
  double score;  // exact cosine
};

// For every anchor, the k vocabulary words w != anchor with the highest
// cosine(anchor, w) >= tau; ties broken by w. Anchors absent from the table
// are skipped with a warning. Anchors are visited in sorted order.
std::vector<SimilarPair> TopSimilar(const EmbeddingTable& table,
                                    const std::set<std::string>& vocab,
                                    const std::set<std::string>& anchors,
                                    const SimilarityOptions& options);

// similarWords("anchor", "word", score) with the score rounded to 4 decimals.
std::vector<Fact> EmitSimilarityFacts(const EmbeddingTable& table,
                                      const std::set<std::string>& vocab,
                                      const std::set<std::string>& anchors,
                                      const SimilarityOptions& options);

// Score constant printed with exactly 4 decimals, e.g. 0.9000.
Term ScoreConstant(double score);

// One word per line; blank and `#` lines ignored.
std::set<std::string> LoadWordList(const std::string& path);

}  // namespace rdnkbp

#endif  // RDNKBP_EMBEDDINGS_H_
