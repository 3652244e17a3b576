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

#include "rdnkbp/synthetic.h"

#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

#include "rdnkbp/error.h"
#include "rdnkbp/rng.h"
#include "text_util.h"

namespace rdnkbp {
namespace {

using nlohmann::json;

constexpr std::string_view kFixture =
#include "synthetic_fixture.inc"
    ;

struct PoolWord {
  std::string word;
  std::string lemma;
};

struct Pool {
  std::string pos;
  std::string ner = "O";
  std::string type;  // entity type of mentions drawn from the pool
  std::vector<PoolWord> words;
};

struct TokenSpec {
  std::string pool;  // empty for literal tokens
  std::string word, lemma, pos;
  std::string mention;
  int head = 0;
};

struct RelationSpec {
  std::string relation, arg1, arg2;
  bool planted = false;
};

struct TemplateSpec {
  std::vector<TokenSpec> tokens;
  std::vector<RelationSpec> relations;
};

struct Fixture {
  int version = 0;
  std::string filler;
  std::map<std::string, Pool> pools;
  std::map<std::string, TemplateSpec> templates;
};

Fixture ParseFixture(std::string_view text) {
  Fixture f;
  try {
    const json j = json::parse(text);
    f.version = j.at("version").get<int>();
    f.filler = j.at("filler").get<std::string>();
    for (const auto& [name, p] : j.at("pools").items()) {
      Pool pool;
      pool.pos = p.at("pos").get<std::string>();
      pool.ner = p.value("ner", "O");
      pool.type = p.value("type", "");
      if (p.contains("range")) {
        const int lo = p["range"].at(0).get<int>();
        const int hi = p["range"].at(1).get<int>();
        for (int v = lo; v <= hi; ++v) {
          pool.words.push_back({std::to_string(v), std::to_string(v)});
        }
      } else {
        for (const auto& w : p.at("words")) {
          const std::string s = w.get<std::string>();
          const size_t slash = s.find('/');
          if (slash == std::string::npos) {
            pool.words.push_back({s, s});
          } else {
            pool.words.push_back({s.substr(0, slash), s.substr(slash + 1)});
          }
        }
      }
      if (pool.words.empty()) throw DataError("pool " + name + " is empty");
      f.pools[name] = std::move(pool);
    }
    for (const auto& [name, t] : j.at("templates").items()) {
      TemplateSpec spec;
      for (const auto& tok : t.at("tokens")) {
        TokenSpec ts;
        ts.head = tok.at("head").get<int>();
        ts.mention = tok.value("mention", "");
        if (tok.contains("pool")) {
          ts.pool = tok["pool"].get<std::string>();
          if (!f.pools.count(ts.pool)) {
            throw DataError("template " + name + " uses unknown pool " + ts.pool);
          }
          if (!ts.mention.empty() && f.pools[ts.pool].type.empty()) {
            throw DataError("template " + name + ": pool " + ts.pool +
                            " has no entity type");
          }
        } else {
          ts.word = tok.at("w").get<std::string>();
          ts.lemma = tok.value("l", internal::Lowercase(ts.word));
          ts.pos = tok.at("pos").get<std::string>();
          if (!ts.mention.empty()) {
            throw DataError("template " + name + ": literal mention token");
          }
        }
        spec.tokens.push_back(std::move(ts));
      }
      for (const auto& r : t.at("relations")) {
        spec.relations.push_back({r.at(0).get<std::string>(),
                                  r.at(1).get<std::string>(),
                                  r.at(2).get<std::string>(),
                                  r.at(3).get<bool>()});
      }
      f.templates[name] = std::move(spec);
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("synthetic fixture: ") + e.what());
  }
  if (!f.templates.count(f.filler)) {
    throw DataError("synthetic fixture: filler template missing");
  }
  return f;
}

Sentence Realize(const Fixture& fixture, const TemplateSpec& spec,
                 const std::string& sent_id, Rng& rng) {
  Sentence s;
  s.sent_id = sent_id;
  std::map<std::string, std::vector<size_t>> used;  // pool -> drawn indices
  for (size_t i = 0; i < spec.tokens.size(); ++i) {
    const TokenSpec& ts = spec.tokens[i];
    Token tok;
    if (ts.pool.empty()) {
      tok = {ts.word, ts.lemma, ts.pos, "O"};
    } else {
      const Pool& pool = fixture.pools.at(ts.pool);
      std::vector<size_t>& taken = used[ts.pool];
      size_t pick = rng.Below(pool.words.size());
      // Distinct draws within a sentence when the pool allows it.
      while (taken.size() < pool.words.size() &&
             std::find(taken.begin(), taken.end(), pick) != taken.end()) {
        pick = rng.Below(pool.words.size());
      }
      taken.push_back(pick);
      tok = {pool.words[pick].word, pool.words[pick].lemma, pool.pos, pool.ner};
      if (!ts.mention.empty()) {
        const int pos = static_cast<int>(i) + 1;
        s.mentions.push_back({ts.mention, pos, pos, pool.type});
      }
    }
    s.tokens.push_back(std::move(tok));
    s.dep_edges.push_back({ts.head, static_cast<int>(i) + 1,
                           ts.head == 0 ? "root" : "dep"});
  }
  return s;
}

}  // namespace

void GeneratorSpec::Validate() const {
  if (n_sentences < 0) throw DataError("n_sentences must be >= 0");
  if (!(noise >= 0 && noise <= 1)) throw DataError("noise must be in [0, 1]");
  if (sentences_per_document < 1) {
    throw DataError("sentences_per_document must be >= 1");
  }
  double total = 0;
  for (const auto& [name, fraction] : mix) {
    if (!(fraction >= 0)) throw DataError("fraction of " + name + " is negative");
    total += fraction;
  }
  if (total > 1 + 1e-9) throw DataError("pattern fractions sum to more than 1");
}

std::string_view SyntheticFixture() { return kFixture; }

int SyntheticFixtureVersion(std::string_view fixture) {
  return ParseFixture(fixture).version;
}

std::vector<std::string> SyntheticTemplateNames(std::string_view fixture) {
  std::vector<std::string> names;
  for (const auto& [name, t] : ParseFixture(fixture).templates) {
    names.push_back(name);
  }
  return names;
}

SyntheticCorpus Generate(const GeneratorSpec& spec, std::string_view fixture_text) {
  spec.Validate();
  const Fixture fixture = ParseFixture(fixture_text);
  for (const auto& [name, fraction] : spec.mix) {
    if (!fixture.templates.count(name)) {
      throw DataError("unknown synthetic template " + name);
    }
  }

  std::vector<std::string> plan;
  double cumulative = 0;
  long previous = 0;
  for (const auto& [name, fraction] : spec.mix) {
    cumulative += fraction;
    const long upto = std::min<long>(
        spec.n_sentences, std::lround(cumulative * spec.n_sentences));
    for (long k = previous; k < upto; ++k) plan.push_back(name);
    previous = std::max(previous, upto);
  }
  while (static_cast<int>(plan.size()) < spec.n_sentences) {
    plan.push_back(fixture.filler);
  }
  Rng rng(spec.seed);
  rng.Shuffle(plan);

  SyntheticCorpus corpus;
  for (size_t i = 0; i < plan.size(); ++i) {
    const size_t d = i / spec.sentences_per_document;
    if (d == corpus.documents.size()) {
      corpus.documents.push_back({spec.doc_prefix + "_d" + std::to_string(d), {}});
    }
    AnnotatedDocument& doc = corpus.documents.back();
    const std::string sent_id =
        "s" + std::to_string(i % spec.sentences_per_document + 1);
    const TemplateSpec& t = fixture.templates.at(plan[i]);
    doc.sentences.push_back(Realize(fixture, t, sent_id, rng));
    corpus.sentence_templates.push_back(plan[i]);
    for (const RelationSpec& r : t.relations) {
      bool label = r.planted;
      if (rng.Uniform() < spec.noise) label = rng.Uniform() < 0.5;
      if (label) {
        corpus.gold.push_back({r.relation, doc.doc_id, sent_id, r.arg1, r.arg2});
      }
    }
  }
  for (AnnotatedDocument& doc : corpus.documents) ValidateDocument(doc);
  return corpus;
}

}  // namespace rdnkbp
