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

#include "rdnkbp/embeddings.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rdnkbp/error.h"
#include "rdnkbp/logging.h"

namespace rdnkbp {
namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool ParseDouble(std::string_view s, double& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool IsInteger(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace

void EmbeddingTable::Set(const std::string& word, std::vector<double> vector) {
  if (dimension_ == 0) dimension_ = vector.size();
  if (vector.size() != dimension_) {
    throw DataError("inconsistent dimension for '" + word + "': " +
                    std::to_string(vector.size()) + " != " +
                    std::to_string(dimension_));
  }
  for (double x : vector) {
    if (!std::isfinite(x)) {
      throw DataError("non-finite component in vector for '" + word + "'");
    }
  }
  vectors_[word] = std::move(vector);
}

const std::vector<double>* EmbeddingTable::Find(std::string_view word) const {
  auto it = vectors_.find(word);
  return it == vectors_.end() ? nullptr : &it->second;
}

EmbeddingTable ParseEmbeddings(std::string_view text) {
  EmbeddingTable table;
  size_t line_no = 0;
  size_t start = 0;
  bool first_content = true;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (first_content && fields.size() == 2 && IsInteger(fields[0]) &&
        IsInteger(fields[1])) {
      first_content = false;
      continue;  // word2vec header
    }
    first_content = false;
    if (fields.size() < 2) {
      throw DataError("embeddings line " + std::to_string(line_no) +
                      ": expected a word and at least one component");
    }
    std::vector<double> vector(fields.size() - 1);
    for (size_t i = 1; i < fields.size(); ++i) {
      if (!ParseDouble(fields[i], vector[i - 1])) {
        throw DataError("embeddings line " + std::to_string(line_no) +
                        ": unparseable number '" + std::string(fields[i]) +
                        "'");
      }
    }
    const std::string word(fields[0]);
    if (table.Contains(word)) {
      Warn("duplicate embedding for '" + word + "' on line " +
           std::to_string(line_no) + "; keeping the last one");
    }
    try {
      table.Set(word, std::move(vector));
    } catch (const DataError& e) {
      throw DataError("embeddings line " + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return table;
}

EmbeddingTable LoadEmbeddings(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open embeddings " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseEmbeddings(buffer.str());
}

double Cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw DataError("cosine: dimension mismatch " + std::to_string(u.size()) +
                    " vs " + std::to_string(v.size()));
  }
  double dot = 0, uu = 0, vv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0 || vv == 0) throw DataError("cosine: zero vector");
  // sqrt(uu * vv) is symmetric in (u, v), so cosine(u, v) == cosine(v, u).
  const double c = dot / std::sqrt(uu * vv);
  return std::clamp(c, -1.0, 1.0);
}

std::vector<SimilarPair> TopSimilar(const EmbeddingTable& table,
                                    const std::set<std::string>& vocab,
                                    const std::set<std::string>& anchors,
                                    const SimilarityOptions& options) {
  std::vector<SimilarPair> out;
  if (options.k < 1) return out;
  for (const std::string& anchor : anchors) {
    const std::vector<double>* a = table.Find(anchor);
    if (a == nullptr) {
      Warn("anchor word '" + anchor + "' has no embedding; skipped");
      continue;
    }
    std::vector<SimilarPair> scored;
    for (const std::string& w : vocab) {
      if (w == anchor) continue;
      const std::vector<double>* v = table.Find(w);
      if (v == nullptr) continue;
      const double score = Cosine(*a, *v);
      if (score >= options.tau) scored.push_back({anchor, w, score});
    }
    std::sort(scored.begin(), scored.end(),
              [](const SimilarPair& x, const SimilarPair& y) {
                if (x.score != y.score) return x.score > y.score;
                return x.word < y.word;
              });
    if (scored.size() > static_cast<size_t>(options.k)) scored.resize(options.k);
    out.insert(out.end(), scored.begin(), scored.end());
  }
  return out;
}

Term ScoreConstant(double score) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", score);
  // -0.0000 would not parse back as the same token.
  if (std::string_view(buf) == "-0.0000") return Term::Bare("0.0000");
  return Term::Bare(buf);
}

std::vector<Fact> EmitSimilarityFacts(const EmbeddingTable& table,
                                      const std::set<std::string>& vocab,
                                      const std::set<std::string>& anchors,
                                      const SimilarityOptions& options) {
  std::vector<Fact> facts;
  const Symbol predicate = Symbol::Intern("similarWords");
  for (const SimilarPair& p : TopSimilar(table, vocab, anchors, options)) {
    facts.push_back(Fact{predicate,
                         {Term::Quoted(p.anchor), Term::Quoted(p.word),
                          ScoreConstant(p.score)}});
  }
  return facts;
}

std::set<std::string> LoadWordList(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open word list " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto fields = SplitWhitespace(line);
    if (fields.empty() || fields[0][0] == '#') continue;
    words.emplace(fields[0]);
  }
  return words;
}

}  // namespace rdnkbp
