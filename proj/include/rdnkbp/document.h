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

#ifndef RDNKBP_DOCUMENT_H_
#define RDNKBP_DOCUMENT_H_

#include <string>
#include <string_view>
#include <vector>

namespace rdnkbp {

// Pre-annotated text (tokens, lemmas, POS and NER tags, dependency edges and
// entity mentions), as produced by an external NLP toolkit.

struct Token {
  std::string word;
  std::string lemma;
  std::string pos;
  std::string ner = "O";

  bool IsNamedEntity() const { return ner != "O"; }
};

struct DepEdge {
  int head = 0;  // 1-based token position; 0 marks the root edge
  int dep = 0;
  std::string label;
};

struct EntityMention {
  std::string mention_id;
  int start = 0;  // 1-based, inclusive
  int end = 0;
  std::string type;  // PER, ORG, NUM, DATE, LOC or MISC

  // The head token is the last token of the span.
  int head() const { return end; }
};

struct Sentence {
  std::string sent_id;
  std::vector<Token> tokens;
  std::vector<DepEdge> dep_edges;
  std::vector<EntityMention> mentions;

  // parent[p] for token position p (1-based), 0 for the root. Filled in by
  // validation; parent[0] is unused.
  std::vector<int> parent;

  int size() const { return static_cast<int>(tokens.size()); }
  const Token& token(int position) const { return tokens[position - 1]; }
  const EntityMention* FindMention(std::string_view mention_id) const;
  // Words of the mention span joined by single spaces.
  std::string MentionText(const EntityMention& mention) const;
};

struct AnnotatedDocument {
  std::string doc_id;
  std::vector<Sentence> sentences;

  const Sentence* FindSentence(std::string_view sent_id) const;
};

bool IsEntityType(std::string_view type);

// Validates all invariants and fills Sentence::parent. Throws DataError
// naming the document, sentence and field at fault.
void ValidateDocument(AnnotatedDocument& doc);

// Parses and validates one JSON Lines record.
AnnotatedDocument ParseDocument(std::string_view json_line);

// Serializes a document as a single JSON line (no trailing newline).
std::string DocumentToJson(const AnnotatedDocument& doc);

// Reads a JSON Lines corpus; blank lines are skipped. Errors carry the line
// number and, when known, the doc_id.
std::vector<AnnotatedDocument> LoadCorpus(const std::string& path);
std::vector<AnnotatedDocument> ParseCorpus(std::string_view text);

}  // namespace rdnkbp

#endif  // RDNKBP_DOCUMENT_H_
