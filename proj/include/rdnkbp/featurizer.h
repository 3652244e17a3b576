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

#ifndef RDNKBP_FEATURIZER_H_
#define RDNKBP_FEATURIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "rdnkbp/document.h"
#include "rdnkbp/logic.h"
#include "rdnkbp/symbol.h"

namespace rdnkbp {

// Argument types of one target relation, e.g. per:age -> (PER, NUM). The
// logic predicate is the part of the name after the colon (per:age -> age).
struct RelationSignature {
  std::string relation;
  Symbol predicate;
  std::string arg1_type;
  std::string arg2_type;
};

class RelationRegistry {
 public:
  // Adds a relation. Throws DataError on duplicates, unknown entity types or
  // a predicate name clash.
  void Add(const std::string& relation, const std::string& arg1_type,
           const std::string& arg2_type);

  // Tab- or space-separated lines `relation arg1_type arg2_type`; `#` and `%`
  // start comment lines.
  static RelationRegistry Parse(std::string_view text);
  static RelationRegistry Load(const std::string& path);
  // The 14 slot-filling relations with their default signatures.
  static RelationRegistry Kbp();

  const RelationSignature* Find(std::string_view relation) const;
  const RelationSignature& Get(std::string_view relation) const;
  const RelationSignature* FindByPredicate(Symbol predicate) const;

  const std::vector<RelationSignature>& relations() const { return relations_; }
  std::vector<std::string> names() const;
  size_t size() const { return relations_.size(); }

  static Symbol PredicateFor(std::string_view relation);

 private:
  std::vector<RelationSignature> relations_;
};

// A same-sentence ordered mention pair proposed for one relation.
struct CandidatePair {
  std::string relation;
  std::string doc_id;
  std::string sent_id;
  std::string arg1;  // mention ids
  std::string arg2;

  // Stable identity and sort key: relation|doc|sent|arg1|arg2.
  std::string key() const;
  // Target atom predicate(arg1, arg2) over the global mention constants.
  Atom TargetAtom(const RelationRegistry& registry) const;

  friend auto operator<=>(const CandidatePair&, const CandidatePair&) = default;
};

// Global constants for tokens and mentions: `<doc>_<sent>_<position>` and
// `<doc>_<sent>_<mention_id>`, quoted when not valid bare tokens.
Term TokenConstant(std::string_view doc_id, std::string_view sent_id,
                   int position);
Term MentionConstant(std::string_view doc_id, std::string_view sent_id,
                     std::string_view mention_id);
Term MentionConstant(const CandidatePair& pair, bool first);

// Padding constant for next/prev features that run past a sentence boundary.
Term OutOfBounds();

// Token, mention and mention-pair features (surface words, lemmas, POS and NE
// context, tokens between mentions, entity types).
std::vector<Fact> EmitLexicalFacts(const AnnotatedDocument& doc);

// Features of the dependency-path root of every ordered mention pair.
std::vector<Fact> EmitDepPathFacts(const AnnotatedDocument& doc);

// Lexical followed by dependency-path facts.
std::vector<Fact> FeaturizeDocument(const AnnotatedDocument& doc);

// Lowest common ancestor of two tokens in the sentence's dependency tree.
int DependencyPathRoot(const Sentence& sentence, int token_a, int token_b);

// Predicates EmitLexicalFacts/EmitDepPathFacts may produce.
const std::vector<std::string>& FeatureVocabulary();

// Every ordered pair of distinct mentions in a sentence whose entity types
// match a relation signature. `relations` restricts the registry (all when
// empty); an unknown name throws DataError.
std::vector<CandidatePair> CandidatePairs(
    const AnnotatedDocument& doc, const RelationRegistry& registry,
    const std::vector<std::string>& relations = {});

}  // namespace rdnkbp

#endif  // RDNKBP_FEATURIZER_H_
