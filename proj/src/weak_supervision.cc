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

#include "rdnkbp/weak_supervision.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "rdnkbp/error.h"
#include "rdnkbp/logging.h"
#include "rdnkbp/matcher.h"
#include "rdnkbp/numeric.h"
#include "text_util.h"

namespace rdnkbp {

using internal::ForEachContentLine;
using internal::Lowercase;
using internal::SplitOutsideQuotes;
using internal::Trim;

std::vector<WeightedClause> ParseWeightedRules(std::string_view text,
                                               const RelationRegistry& registry) {
  std::vector<WeightedClause> rules;
  ForEachContentLine(text, [&](size_t line_no, std::string_view line) {
    const std::string where = "rule line " + std::to_string(line_no) + ": ";
    const auto parts = SplitOutsideQuotes(line, "::");
    if (parts.size() != 2) {
      throw DataError(where + "expected 'weight :: clause'");
    }
    WeightedClause rule;
    const std::string_view w = Trim(parts[0]);
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), rule.weight);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
      throw DataError(where + "bad weight '" + std::string(w) + "'");
    }
    if (!(rule.weight > 0)) throw DataError(where + "weight must be positive");
    try {
      rule.clause = ParseClause(Trim(parts[1]));
    } catch (const DataError& e) {
      throw DataError(where + e.what());
    }
    const Atom& head = rule.clause.head;
    if (registry.FindByPredicate(head.predicate) == nullptr) {
      throw DataError(where + "head predicate " +
                      std::string(head.predicate.str()) +
                      " is not a registered relation");
    }
    if (head.arity() != 2 || !head.args[0].is_variable() ||
        !head.args[1].is_variable() || head.args[0] == head.args[1]) {
      throw DataError(where + "head must be relation(X, Y) over two variables");
    }
    rule.id = "r" + std::to_string(rules.size() + 1);
    rules.push_back(std::move(rule));
  });
  return rules;
}

std::vector<WeightedClause> LoadWeightedRules(const std::string& path,
                                              const RelationRegistry& registry) {
  return ParseWeightedRules(internal::ReadFile(path), registry);
}

std::optional<WeakLabel> ScoreCandidate(const CandidatePair& candidate,
                                        const std::vector<WeightedClause>& rules,
                                        const FactView& store,
                                        const RelationRegistry& registry) {
  const Symbol predicate = registry.Get(candidate.relation).predicate;
  const Symbol arg1 = MentionConstant(candidate, true).symbol();
  const Symbol arg2 = MentionConstant(candidate, false).symbol();
  WeakLabel label{candidate, 0.0, {}};
  double total = 0;
  for (const WeightedClause& rule : rules) {
    const Atom& head = rule.clause.head;
    if (head.predicate != predicate) continue;
    Substitution seed;
    seed.Bind(head.args[0].symbol(), arg1);
    seed.Bind(head.args[1].symbol(), arg2);
    if (Exists(rule.clause.body, store, seed)) {
      total += rule.weight;
      label.fired_rules.push_back(rule.id);
    }
  }
  if (label.fired_rules.empty()) return std::nullopt;
  label.score = Sigmoid(total);
  return label;
}

std::vector<LabeledExample> WeakLabelCorpus(
    const std::vector<CandidatePair>& candidates,
    const std::vector<WeightedClause>& rules, const FactView& store,
    const RelationRegistry& registry, double tau, size_t cap,
    uint64_t /*seed*/) {
  std::vector<WeakLabel> kept;
  if (cap == 0) return {};
  for (const CandidatePair& c : candidates) {
    std::optional<WeakLabel> label = ScoreCandidate(c, rules, store, registry);
    if (label && label->score >= tau) kept.push_back(std::move(*label));
  }
  std::sort(kept.begin(), kept.end(), [](const WeakLabel& a, const WeakLabel& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.candidate.key() < b.candidate.key();
  });
  if (kept.size() > cap) kept.resize(cap);
  std::vector<LabeledExample> out;
  out.reserve(kept.size());
  for (const WeakLabel& w : kept) {
    out.push_back({w.candidate, true, Provenance::kWeak, w.score});
  }
  return out;
}

std::map<std::string, KBPairFile> ParseKB(std::string_view text) {
  std::map<std::string, KBPairFile> kb;
  std::map<std::string, std::set<std::pair<std::string, std::string>>> seen;
  ForEachContentLine(text, [&](size_t line_no, std::string_view line) {
    const auto fields = SplitOutsideQuotes(line, "\t");
    if (fields.size() != 3) {
      throw DataError("KB line " + std::to_string(line_no) +
                      ": expected relation<TAB>entity1<TAB>entity2");
    }
    const std::string relation(Trim(fields[0]));
    std::pair<std::string, std::string> pair{std::string(Trim(fields[1])),
                                             std::string(Trim(fields[2]))};
    if (!seen[relation].insert(pair).second) {
      Warn("duplicate KB pair on line " + std::to_string(line_no) + " dropped");
      return;
    }
    KBPairFile& file = kb[relation];
    file.relation = relation;
    file.pairs.push_back(std::move(pair));
  });
  return kb;
}

std::map<std::string, KBPairFile> LoadKB(const std::string& path) {
  return ParseKB(internal::ReadFile(path));
}

std::vector<LabeledExample> DistantLabel(
    const KBPairFile& kb, const std::vector<AnnotatedDocument>& docs,
    const RelationRegistry& registry) {
  std::vector<LabeledExample> out;
  if (kb.pairs.empty()) return out;
  registry.Get(kb.relation);
  std::set<std::pair<std::string, std::string>> wanted;
  for (const auto& [e1, e2] : kb.pairs) {
    wanted.emplace(Lowercase(e1), Lowercase(e2));
  }
  for (const AnnotatedDocument& doc : docs) {
    for (const CandidatePair& c : CandidatePairs(doc, registry, {kb.relation})) {
      const Sentence* s = doc.FindSentence(c.sent_id);
      const std::string t1 = Lowercase(s->MentionText(*s->FindMention(c.arg1)));
      const std::string t2 = Lowercase(s->MentionText(*s->FindMention(c.arg2)));
      if (wanted.count({t1, t2}) > 0) {
        out.push_back({c, true, Provenance::kWeak, 1.0});
      }
    }
  }
  return out;
}

}  // namespace rdnkbp
