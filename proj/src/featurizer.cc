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

#include "rdnkbp/featurizer.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "rdnkbp/error.h"

namespace rdnkbp {
namespace {

std::string Lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Fact MakeFact(const char* predicate, std::vector<Term> args) {
  return Fact{Symbol::Intern(predicate), std::move(args)};
}

// Emits facts for one sentence; keeps per-sentence constants at hand.
class SentenceFeaturizer {
 public:
  SentenceFeaturizer(const AnnotatedDocument& doc, const Sentence& sentence,
                     std::vector<Fact>& out)
      : doc_(doc), s_(sentence), out_(out) {}

  Term Tok(int p) const {
    if (p < 1 || p > s_.size()) return OutOfBounds();
    return TokenConstant(doc_.doc_id, s_.sent_id, p);
  }
  Term Mention(const EntityMention& m) const {
    return MentionConstant(doc_.doc_id, s_.sent_id, m.mention_id);
  }
  Term Pos(int p) const {
    if (p < 1 || p > s_.size()) return OutOfBounds();
    return Term::Quoted(s_.token(p).pos);
  }
  Term Lemma(int p) const {
    if (p < 1 || p > s_.size()) return OutOfBounds();
    return Term::Quoted(s_.token(p).lemma);
  }
  bool IsNE(int p) const {
    return p >= 1 && p <= s_.size() && s_.token(p).IsNamedEntity();
  }
  // Token p starts / ends a maximal run of one NER tag.
  bool StartsPhrase(int p) const {
    return IsNE(p) && (p == 1 || s_.token(p - 1).ner != s_.token(p).ner);
  }
  bool EndsPhrase(int p) const {
    return IsNE(p) &&
           (p == s_.size() || s_.token(p + 1).ner != s_.token(p).ner);
  }

  void Emit(const char* predicate, std::vector<Term> args) {
    out_.push_back(MakeFact(predicate, std::move(args)));
  }

  void Lexical() {
    const int n = s_.size();
    for (int p = 1; p <= n; ++p) {
      const Token& t = s_.token(p);
      const Term w = Tok(p);
      Emit("wordString", {w, Term::Quoted(t.word)});
      Emit("word", {w, Term::Quoted(t.word)});
      Emit("wordPosition", {w, Term::Bare(std::to_string(p))});
      Emit("caselessWordString", {w, Term::Quoted(Lowercase(t.word))});
      Emit("wordLemma", {w, Term::Quoted(t.lemma)});
      if (t.IsNamedEntity()) Emit("isNEWord", {w});
      Emit("nextWords", {w, Tok(p + 1), Tok(p + 2)});
      Emit("prevWords", {w, Tok(p - 1), Tok(p - 2)});
      Emit("nextPOS", {w, Pos(p + 1), Pos(p + 2)});
      Emit("prevPOS", {w, Pos(p - 1), Pos(p - 2)});
      Emit("nextLemmas", {w, Lemma(p + 1), Lemma(p + 2)});
      Emit("prevLemmas", {w, Lemma(p - 1), Lemma(p - 2)});
      if (p < n && StartsPhrase(p + 1) && s_.token(p).ner != s_.token(p + 1).ner) {
        Emit("nextNE", {w, Term::Quoted(s_.token(p + 1).ner)});
      }
      if (p > 1 && EndsPhrase(p - 1) && s_.token(p).ner != s_.token(p - 1).ner) {
        Emit("prevNE", {w, Term::Quoted(s_.token(p - 1).ner)});
      }
      if (p < n) Emit("nextWord", {w, Tok(p + 1)});
    }

    for (const EntityMention& m : s_.mentions) {
      const Term mc = Mention(m);
      Emit("entityType", {mc, Term::Quoted(m.type)});
      Emit("mentionHead", {mc, Tok(m.head())});
      if (m.end < n) {
        Emit("nextWord", {mc, Tok(m.end + 1)});
        Emit("nextLemma", {mc, Lemma(m.end + 1)});
      }
      if (m.start > 1) {
        Emit("nextWord", {Tok(m.start - 1), mc});
        Emit("prevLemma", {mc, Lemma(m.start - 1)});
      }
      for (const EntityMention& other : s_.mentions) {
        if (&other != &m && other.start == m.end + 1) {
          Emit("nextWord", {mc, Mention(other)});
        }
      }
    }

    for (const EntityMention& m1 : s_.mentions) {
      for (const EntityMention& m2 : s_.mentions) {
        if (&m1 == &m2) continue;
        int lo = 0, hi = -1;
        if (m1.end < m2.start) {
          lo = m1.end + 1;
          hi = m2.start - 1;
        } else if (m2.end < m1.start) {
          lo = m2.end + 1;
          hi = m1.start - 1;
        }
        const Term a = Mention(m1), b = Mention(m2);
        bool any_ne = false;
        for (int p = lo; p <= hi; ++p) {
          Emit("lemmaBetween", {a, b, Lemma(p)});
        }
        for (int p = lo; p <= hi; ++p) {
          Emit("posBetween", {a, b, Pos(p)});
          any_ne = any_ne || IsNE(p);
        }
        if (any_ne) Emit("neBetween", {a, b});
      }
    }
  }

  void DepPath() {
    for (const EntityMention& m1 : s_.mentions) {
      for (const EntityMention& m2 : s_.mentions) {
        if (&m1 == &m2) continue;
        const int r = DependencyPathRoot(s_, m1.head(), m2.head());
        const Term a = Mention(m1), b = Mention(m2);
        Emit("rootLemma", {a, b, Lemma(r)});
        Emit("rootPOS", {a, b, Pos(r)});
        if (IsNE(r)) Emit("rootNER", {a, b});
        for (int c = 1; c <= s_.size(); ++c) {
          if (s_.parent[c] != r) continue;
          Emit("rootChildLemma", {a, b, Lemma(c)});
          Emit("rootChildPOS", {a, b, Pos(c)});
          if (IsNE(c)) Emit("rootChildNER", {a, b});
        }
      }
    }
  }

 private:
  const AnnotatedDocument& doc_;
  const Sentence& s_;
  std::vector<Fact>& out_;
};

std::string JoinId(std::string_view a, std::string_view b, std::string_view c) {
  std::string out;
  out.reserve(a.size() + b.size() + c.size() + 2);
  out.append(a).append("_").append(b).append("_").append(c);
  return out;
}

}  // namespace

void RelationRegistry::Add(const std::string& relation,
                           const std::string& arg1_type,
                           const std::string& arg2_type) {
  if (relation.empty()) throw DataError("empty relation name");
  if (Find(relation) != nullptr) {
    throw DataError("duplicate relation " + relation);
  }
  for (const std::string& t : {arg1_type, arg2_type}) {
    if (!IsEntityType(t)) {
      throw DataError("relation " + relation + ": unknown entity type '" + t +
                      "'");
    }
  }
  const Symbol predicate = PredicateFor(relation);
  if (!IsPredicateName(predicate.str())) {
    throw DataError("relation " + relation + " does not yield a valid predicate");
  }
  if (FindByPredicate(predicate) != nullptr) {
    throw DataError("relation " + relation + " reuses predicate " +
                    std::string(predicate.str()));
  }
  relations_.push_back({relation, predicate, arg1_type, arg2_type});
}

RelationRegistry RelationRegistry::Parse(std::string_view text) {
  RelationRegistry registry;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == '%') {
      continue;
    }
    std::istringstream fields(line);
    std::string relation, t1, t2, extra;
    if (!(fields >> relation >> t1 >> t2) || (fields >> extra)) {
      throw DataError("relation registry line " + std::to_string(line_no) +
                      ": expected 'relation arg1_type arg2_type'");
    }
    registry.Add(relation, t1, t2);
  }
  return registry;
}

RelationRegistry RelationRegistry::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open relation registry " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

RelationRegistry RelationRegistry::Kbp() {
  RelationRegistry r;
  r.Add("per:age", "PER", "NUM");
  r.Add("per:alternateName", "PER", "PER");
  r.Add("per:children", "PER", "PER");
  r.Add("per:origin", "PER", "LOC");
  r.Add("per:otherFamily", "PER", "PER");
  r.Add("per:parents", "PER", "PER");
  r.Add("per:religion", "PER", "MISC");
  r.Add("per:siblings", "PER", "PER");
  r.Add("per:spouse", "PER", "PER");
  r.Add("per:title", "PER", "MISC");
  r.Add("org:cityHQ", "ORG", "LOC");
  r.Add("org:countryHQ", "ORG", "LOC");
  r.Add("org:dateFounded", "ORG", "DATE");
  r.Add("org:foundedBy", "ORG", "PER");
  return r;
}

const RelationSignature* RelationRegistry::Find(std::string_view relation) const {
  for (const RelationSignature& r : relations_) {
    if (r.relation == relation) return &r;
  }
  return nullptr;
}

const RelationSignature& RelationRegistry::Get(std::string_view relation) const {
  const RelationSignature* r = Find(relation);
  if (r == nullptr) {
    throw DataError("unknown relation " + std::string(relation));
  }
  return *r;
}

const RelationSignature* RelationRegistry::FindByPredicate(Symbol predicate) const {
  for (const RelationSignature& r : relations_) {
    if (r.predicate == predicate) return &r;
  }
  return nullptr;
}

std::vector<std::string> RelationRegistry::names() const {
  std::vector<std::string> out;
  for (const RelationSignature& r : relations_) out.push_back(r.relation);
  return out;
}

Symbol RelationRegistry::PredicateFor(std::string_view relation) {
  const size_t colon = relation.rfind(':');
  return Symbol::Intern(colon == std::string_view::npos
                            ? relation
                            : relation.substr(colon + 1));
}

std::string CandidatePair::key() const {
  return relation + "|" + doc_id + "|" + sent_id + "|" + arg1 + "|" + arg2;
}

Atom CandidatePair::TargetAtom(const RelationRegistry& registry) const {
  return Atom{registry.Get(relation).predicate,
              {MentionConstant(*this, true), MentionConstant(*this, false)}};
}

Term TokenConstant(std::string_view doc_id, std::string_view sent_id,
                   int position) {
  return Term::Constant(JoinId(doc_id, sent_id, std::to_string(position)));
}

Term MentionConstant(std::string_view doc_id, std::string_view sent_id,
                     std::string_view mention_id) {
  return Term::Constant(JoinId(doc_id, sent_id, mention_id));
}

Term MentionConstant(const CandidatePair& pair, bool first) {
  return MentionConstant(pair.doc_id, pair.sent_id,
                         first ? pair.arg1 : pair.arg2);
}

Term OutOfBounds() { return Term::Bare("oob"); }

std::vector<Fact> EmitLexicalFacts(const AnnotatedDocument& doc) {
  std::vector<Fact> out;
  for (const Sentence& s : doc.sentences) {
    SentenceFeaturizer(doc, s, out).Lexical();
  }
  return out;
}

std::vector<Fact> EmitDepPathFacts(const AnnotatedDocument& doc) {
  std::vector<Fact> out;
  for (const Sentence& s : doc.sentences) {
    SentenceFeaturizer(doc, s, out).DepPath();
  }
  return out;
}

std::vector<Fact> FeaturizeDocument(const AnnotatedDocument& doc) {
  std::vector<Fact> out = EmitLexicalFacts(doc);
  std::vector<Fact> deps = EmitDepPathFacts(doc);
  out.insert(out.end(), std::make_move_iterator(deps.begin()),
             std::make_move_iterator(deps.end()));
  return out;
}

int DependencyPathRoot(const Sentence& sentence, int token_a, int token_b) {
  std::vector<char> on_path(sentence.size() + 1, 0);
  for (int p = token_a; p != 0; p = sentence.parent[p]) on_path[p] = 1;
  for (int p = token_b; p != 0; p = sentence.parent[p]) {
    if (on_path[p]) return p;
  }
  return 0;  // unreachable on a validated tree: both paths end at the root
}

const std::vector<std::string>& FeatureVocabulary() {
  static const std::vector<std::string>* vocab = new std::vector<std::string>{
      // Token features.
      "wordString", "wordPosition", "caselessWordString", "wordLemma",
      "isNEWord", "nextWords", "prevWords", "nextPOS", "prevPOS",
      "nextLemmas", "prevLemmas", "nextNE", "prevNE",
      // Between-mention features.
      "lemmaBetween", "neBetween", "posBetween",
      // Dependency-path root features.
      "rootChildLemma", "rootChildNER", "rootChildPOS", "rootLemma",
      "rootNER", "rootPOS",
      // Mention features and token/mention adjacency used by expert rules.
      "entityType", "mentionHead", "word", "nextWord", "nextLemma",
      "prevLemma"};
  return *vocab;
}

std::vector<CandidatePair> CandidatePairs(
    const AnnotatedDocument& doc, const RelationRegistry& registry,
    const std::vector<std::string>& relations) {
  std::vector<const RelationSignature*> selected;
  if (relations.empty()) {
    for (const RelationSignature& r : registry.relations()) selected.push_back(&r);
  } else {
    for (const std::string& name : relations) {
      const RelationSignature* r = registry.Find(name);
      if (r == nullptr) throw DataError("unknown relation " + name);
      selected.push_back(r);
    }
  }
  std::vector<CandidatePair> out;
  for (const Sentence& s : doc.sentences) {
    for (const RelationSignature* r : selected) {
      for (const EntityMention& m1 : s.mentions) {
        if (m1.type != r->arg1_type) continue;
        for (const EntityMention& m2 : s.mentions) {
          if (&m1 == &m2 || m2.type != r->arg2_type) continue;
          out.push_back({r->relation, doc.doc_id, s.sent_id, m1.mention_id,
                         m2.mention_id});
        }
      }
    }
  }
  return out;
}

}  // namespace rdnkbp
