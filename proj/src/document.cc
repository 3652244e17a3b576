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

#include "rdnkbp/document.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rdnkbp/error.h"

namespace rdnkbp {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& doc_id, const std::string& sent_id,
                       const std::string& field, const std::string& message) {
  std::string where = "document " + doc_id;
  if (!sent_id.empty()) where += ", sentence " + sent_id;
  throw DataError(where + ": " + field + ": " + message);
}

std::string GetString(const json& j, const char* key, const std::string& doc,
                      const std::string& sent, const std::string& field) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    Fail(doc, sent, field, std::string("missing string field '") + key + "'");
  }
  return it->get<std::string>();
}

int GetInt(const json& j, const char* key, const std::string& doc,
           const std::string& sent, const std::string& field) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer()) {
    Fail(doc, sent, field, std::string("missing integer field '") + key + "'");
  }
  return it->get<int>();
}

const json& GetArray(const json& j, const char* key, const std::string& doc,
                     const std::string& sent) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) {
    Fail(doc, sent, key, "missing array");
  }
  return *it;
}

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

void ValidateSentence(const std::string& doc_id, Sentence& s) {
  const std::string& sid = s.sent_id;
  const int n = s.size();
  if (n == 0) Fail(doc_id, sid, "tokens", "sentence has no tokens");
  for (int p = 1; p <= n; ++p) {
    const Token& t = s.token(p);
    const std::string field = "tokens[" + std::to_string(p) + "]";
    if (t.word.empty()) Fail(doc_id, sid, field, "empty word");
    if (t.lemma.empty()) Fail(doc_id, sid, field, "empty lemma");
    if (t.ner.empty()) Fail(doc_id, sid, field, "empty ner tag");
  }

  // Dependency edges must form a tree over tokens 1..n with one root edge.
  s.parent.assign(n + 1, -1);
  int roots = 0;
  for (const DepEdge& e : s.dep_edges) {
    if (e.dep < 1 || e.dep > n) {
      Fail(doc_id, sid, "dep_edges",
           "non-tree dependency: dep " + std::to_string(e.dep) +
               " out of range");
    }
    if (e.head < 0 || e.head > n) {
      Fail(doc_id, sid, "dep_edges",
           "non-tree dependency: head " + std::to_string(e.head) +
               " out of range");
    }
    if (s.parent[e.dep] != -1) {
      Fail(doc_id, sid, "dep_edges",
           "non-tree dependency: token " + std::to_string(e.dep) +
               " has more than one head");
    }
    s.parent[e.dep] = e.head;
    if (e.head == 0) ++roots;
  }
  for (int p = 1; p <= n; ++p) {
    if (s.parent[p] == -1) {
      Fail(doc_id, sid, "dep_edges",
           "non-tree dependency: token " + std::to_string(p) + " has no head");
    }
  }
  if (roots != 1) {
    Fail(doc_id, sid, "dep_edges",
         "non-tree dependency: expected exactly one root edge, found " +
             std::to_string(roots));
  }
  for (int p = 1; p <= n; ++p) {
    int steps = 0;
    for (int q = p; q != 0; q = s.parent[q]) {
      if (++steps > n) {
        Fail(doc_id, sid, "dep_edges",
             "non-tree dependency: cycle through token " + std::to_string(p));
      }
    }
  }

  std::set<std::string> ids;
  for (const EntityMention& m : s.mentions) {
    const std::string field = "mentions[" + m.mention_id + "]";
    if (m.mention_id.empty()) Fail(doc_id, sid, "mentions", "empty mention_id");
    if (AllDigits(m.mention_id)) {
      Fail(doc_id, sid, field, "mention_id must not be purely numeric");
    }
    if (!ids.insert(m.mention_id).second) {
      Fail(doc_id, sid, field, "duplicate mention_id");
    }
    if (m.start < 1 || m.end > n || m.start > m.end) {
      Fail(doc_id, sid, field,
           "span out of bounds: [" + std::to_string(m.start) + "," +
               std::to_string(m.end) + "] in a " + std::to_string(n) +
               "-token sentence");
    }
    if (!IsEntityType(m.type)) {
      Fail(doc_id, sid, field, "unknown entity type '" + m.type + "'");
    }
  }
}

}  // namespace

const EntityMention* Sentence::FindMention(std::string_view mention_id) const {
  for (const EntityMention& m : mentions) {
    if (m.mention_id == mention_id) return &m;
  }
  return nullptr;
}

std::string Sentence::MentionText(const EntityMention& mention) const {
  std::string out;
  for (int p = mention.start; p <= mention.end; ++p) {
    if (p > mention.start) out.push_back(' ');
    out.append(token(p).word);
  }
  return out;
}

const Sentence* AnnotatedDocument::FindSentence(std::string_view sent_id) const {
  for (const Sentence& s : sentences) {
    if (s.sent_id == sent_id) return &s;
  }
  return nullptr;
}

bool IsEntityType(std::string_view type) {
  static const char* const kTypes[] = {"PER", "ORG", "NUM",
                                       "DATE", "LOC", "MISC"};
  return std::any_of(std::begin(kTypes), std::end(kTypes),
                     [&](const char* t) { return type == t; });
}

void ValidateDocument(AnnotatedDocument& doc) {
  if (doc.doc_id.empty()) throw DataError("document with empty doc_id");
  std::set<std::string> ids;
  for (Sentence& s : doc.sentences) {
    if (s.sent_id.empty()) Fail(doc.doc_id, "", "sent_id", "empty sent_id");
    if (!ids.insert(s.sent_id).second) {
      Fail(doc.doc_id, s.sent_id, "sent_id", "duplicate sentence id");
    }
    ValidateSentence(doc.doc_id, s);
  }
}

AnnotatedDocument ParseDocument(std::string_view json_line) {
  json j;
  try {
    j = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DataError("document record is not a JSON object");
  AnnotatedDocument doc;
  doc.doc_id = GetString(j, "doc_id", "<unknown>", "", "doc_id");
  for (const json& js : GetArray(j, "sentences", doc.doc_id, "")) {
    Sentence s;
    s.sent_id = GetString(js, "sent_id", doc.doc_id, "", "sent_id");
    const std::string& sid = s.sent_id;
    for (const json& jt : GetArray(js, "tokens", doc.doc_id, sid)) {
      Token t;
      t.word = GetString(jt, "word", doc.doc_id, sid, "tokens");
      t.lemma = GetString(jt, "lemma", doc.doc_id, sid, "tokens");
      t.pos = GetString(jt, "pos", doc.doc_id, sid, "tokens");
      t.ner = GetString(jt, "ner", doc.doc_id, sid, "tokens");
      s.tokens.push_back(std::move(t));
    }
    for (const json& je : GetArray(js, "dep_edges", doc.doc_id, sid)) {
      DepEdge e;
      e.head = GetInt(je, "head", doc.doc_id, sid, "dep_edges");
      e.dep = GetInt(je, "dep", doc.doc_id, sid, "dep_edges");
      if (je.contains("label") && je["label"].is_string()) {
        e.label = je["label"].get<std::string>();
      }
      s.dep_edges.push_back(std::move(e));
    }
    for (const json& jm : GetArray(js, "mentions", doc.doc_id, sid)) {
      EntityMention m;
      m.mention_id = GetString(jm, "mention_id", doc.doc_id, sid, "mentions");
      m.start = GetInt(jm, "start", doc.doc_id, sid, "mentions");
      m.end = GetInt(jm, "end", doc.doc_id, sid, "mentions");
      m.type = GetString(jm, "type", doc.doc_id, sid, "mentions");
      s.mentions.push_back(std::move(m));
    }
    doc.sentences.push_back(std::move(s));
  }
  ValidateDocument(doc);
  return doc;
}

std::string DocumentToJson(const AnnotatedDocument& doc) {
  json j;
  j["doc_id"] = doc.doc_id;
  json sentences = json::array();
  for (const Sentence& s : doc.sentences) {
    json js;
    js["sent_id"] = s.sent_id;
    json tokens = json::array();
    for (const Token& t : s.tokens) {
      tokens.push_back(
          {{"word", t.word}, {"lemma", t.lemma}, {"pos", t.pos}, {"ner", t.ner}});
    }
    json edges = json::array();
    for (const DepEdge& e : s.dep_edges) {
      edges.push_back({{"head", e.head}, {"dep", e.dep}, {"label", e.label}});
    }
    json mentions = json::array();
    for (const EntityMention& m : s.mentions) {
      mentions.push_back({{"mention_id", m.mention_id},
                          {"start", m.start},
                          {"end", m.end},
                          {"type", m.type}});
    }
    js["tokens"] = std::move(tokens);
    js["dep_edges"] = std::move(edges);
    js["mentions"] = std::move(mentions);
    sentences.push_back(std::move(js));
  }
  j["sentences"] = std::move(sentences);
  return j.dump();
}

std::vector<AnnotatedDocument> ParseCorpus(std::string_view text) {
  std::vector<AnnotatedDocument> docs;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      docs.push_back(ParseDocument(line));
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return docs;
}

std::vector<AnnotatedDocument> LoadCorpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseCorpus(buffer.str());
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace rdnkbp
