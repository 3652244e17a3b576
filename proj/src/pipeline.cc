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

#include "rdnkbp/pipeline.h"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "rdnkbp/error.h"
#include "rdnkbp/logging.h"
#include "rdnkbp/rng.h"
#include "text_util.h"

namespace rdnkbp {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Seed counters below a run seed.
constexpr uint64_t kGibbsCounter = uint64_t{1} << 20;
uint64_t TrainNegativeSeed(uint64_t run_seed, size_t relation) {
  return DeriveSeed(run_seed, 2 * relation);
}
uint64_t TestNegativeSeed(uint64_t run_seed, size_t relation) {
  return DeriveSeed(run_seed, 2 * relation + 1);
}

std::string Resolve(const std::string& base, const std::string& path) {
  if (path.empty() || base.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base) / path).lexically_normal().string();
}

void CheckKeys(const json& j, std::initializer_list<const char*> allowed,
               const std::string& where) {
  if (!j.is_object()) throw DataError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw DataError("unknown key '" + key + "' in " + where);
  }
}

GeneratorSpec SpecFromJson(const json& j) {
  CheckKeys(j, {"n_sentences", "mix", "noise", "seed", "doc_prefix",
                "sentences_per_document"},
            "synthetic");
  GeneratorSpec spec;
  spec.n_sentences = j.value("n_sentences", spec.n_sentences);
  spec.noise = j.value("noise", spec.noise);
  spec.seed = j.value("seed", spec.seed);
  spec.doc_prefix = j.value("doc_prefix", spec.doc_prefix);
  spec.sentences_per_document =
      j.value("sentences_per_document", spec.sentences_per_document);
  if (j.contains("mix")) {
    for (const auto& [name, fraction] : j["mix"].items()) {
      spec.mix.emplace_back(name, fraction.get<double>());
    }
  }
  return spec;
}

json SpecToJson(const GeneratorSpec& spec) {
  json mix = json::object();
  for (const auto& [name, fraction] : spec.mix) mix[name] = fraction;
  return {{"n_sentences", spec.n_sentences}, {"mix", mix},
          {"noise", spec.noise},             {"seed", spec.seed},
          {"doc_prefix", spec.doc_prefix},
          {"sentences_per_document", spec.sentences_per_document}};
}

CorpusSource SourceFromJson(const json& j, const std::string& base,
                            const std::string& where) {
  CheckKeys(j, {"corpus", "gold", "synthetic"}, where);
  CorpusSource s;
  s.corpus = Resolve(base, j.value("corpus", ""));
  s.gold = Resolve(base, j.value("gold", ""));
  if (j.contains("synthetic")) s.synthetic = SpecFromJson(j["synthetic"]);
  return s;
}

json SourceToJson(const CorpusSource& s) {
  json j = json::object();
  if (!s.corpus.empty()) j["corpus"] = s.corpus;
  if (!s.gold.empty()) j["gold"] = s.gold;
  if (s.synthetic) j["synthetic"] = SpecToJson(*s.synthetic);
  return j;
}

void RequireFile(const std::string& path, const std::string& what) {
  if (path.empty()) throw DataError(what + " is not set");
  if (!fs::exists(path)) throw DataError(what + " not found: " + path);
}

Dataset LoadDataset(const CorpusSource& source) {
  if (source.synthetic) {
    SyntheticCorpus c = Generate(*source.synthetic);
    return {std::move(c.documents), std::move(c.gold)};
  }
  return {LoadCorpus(source.corpus), LoadGold(source.gold)};
}

std::vector<CandidatePair> RelationCandidates(const Dataset& data,
                                              const RelationRegistry& registry,
                                              const std::string& relation) {
  std::vector<CandidatePair> out;
  for (const AnnotatedDocument& doc : data.documents) {
    for (CandidatePair& c : CandidatePairs(doc, registry, {relation})) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::string FormatFixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

ExperimentConfig ExperimentConfig::FromJson(const std::string& text,
                                            const std::string& base_dir) {
  ExperimentConfig c;
  try {
    const json j = json::parse(text);
    CheckKeys(j,
              {"registry", "relations", "train", "test", "switches",
               "joint_inference", "rules", "kb", "advice", "embeddings",
               "anchors", "train_config", "gibbs", "similarity", "weak_label",
               "test_neg_ratio", "n_runs", "seed", "output_dir"},
              "experiment config");
    c.registry = Resolve(base_dir, j.value("registry", ""));
    if (j.contains("relations")) {
      c.relations = j["relations"].get<std::vector<std::string>>();
    }
    if (j.contains("train")) c.train = SourceFromJson(j["train"], base_dir, "train");
    if (j.contains("test")) c.test = SourceFromJson(j["test"], base_dir, "test");
    if (j.contains("switches")) {
      const json& s = j["switches"];
      CheckKeys(s, {"weak_supervision", "word2vec", "advice", "joint"}, "switches");
      c.switches.weak_supervision = s.value("weak_supervision", false);
      c.switches.word2vec = s.value("word2vec", false);
      c.switches.advice = s.value("advice", false);
      c.switches.joint = s.value("joint", false);
    }
    const std::string mode = j.value("joint_inference", "gibbs");
    if (mode == "gibbs") {
      c.joint_inference = JointInference::kGibbs;
    } else if (mode == "independent") {
      c.joint_inference = JointInference::kIndependent;
    } else {
      throw DataError("joint_inference must be gibbs or independent");
    }
    c.rules = Resolve(base_dir, j.value("rules", ""));
    c.kb = Resolve(base_dir, j.value("kb", ""));
    c.advice = Resolve(base_dir, j.value("advice", ""));
    c.embeddings = Resolve(base_dir, j.value("embeddings", ""));
    c.anchors = Resolve(base_dir, j.value("anchors", ""));
    if (j.contains("train_config")) {
      const json& t = j["train_config"];
      CheckKeys(t, {"n_trees", "max_depth", "max_literals_per_node",
                    "min_examples", "neg_pos_ratio", "alpha"},
                "train_config");
      TrainConfig& tc = c.train_config;
      tc.n_trees = t.value("n_trees", tc.n_trees);
      tc.max_depth = t.value("max_depth", tc.max_depth);
      tc.max_literals_per_node =
          t.value("max_literals_per_node", tc.max_literals_per_node);
      tc.min_examples = t.value("min_examples", tc.min_examples);
      tc.neg_pos_ratio = t.value("neg_pos_ratio", tc.neg_pos_ratio);
      tc.alpha = t.value("alpha", tc.alpha);
    }
    if (j.contains("gibbs")) {
      CheckKeys(j["gibbs"], {"burn_in", "samples"}, "gibbs");
      c.gibbs.burn_in = j["gibbs"].value("burn_in", c.gibbs.burn_in);
      c.gibbs.samples = j["gibbs"].value("samples", c.gibbs.samples);
    }
    if (j.contains("similarity")) {
      CheckKeys(j["similarity"], {"k", "tau"}, "similarity");
      c.similarity.k = j["similarity"].value("k", c.similarity.k);
      c.similarity.tau = j["similarity"].value("tau", c.similarity.tau);
    }
    if (j.contains("weak_label")) {
      CheckKeys(j["weak_label"], {"tau", "cap"}, "weak_label");
      c.weak_tau = j["weak_label"].value("tau", c.weak_tau);
      c.weak_cap = j["weak_label"].value("cap", c.weak_cap);
    }
    c.test_neg_ratio = j.value("test_neg_ratio", c.test_neg_ratio);
    c.n_runs = j.value("n_runs", c.n_runs);
    c.seed = j.value("seed", c.seed);
    c.output_dir = Resolve(base_dir, j.value("output_dir", ""));
  } catch (const json::exception& e) {
    throw DataError(std::string("experiment config: ") + e.what());
  }
  return c;
}

ExperimentConfig ExperimentConfig::Load(const std::string& path) {
  try {
    return FromJson(internal::ReadFile(path),
                    fs::path(path).parent_path().string());
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string ExperimentConfig::ToJson() const {
  json j;
  j["registry"] = registry;
  j["relations"] = relations;
  j["train"] = SourceToJson(train);
  j["test"] = SourceToJson(test);
  j["switches"] = {{"weak_supervision", switches.weak_supervision},
                   {"word2vec", switches.word2vec},
                   {"advice", switches.advice},
                   {"joint", switches.joint}};
  j["joint_inference"] =
      joint_inference == JointInference::kGibbs ? "gibbs" : "independent";
  j["rules"] = rules;
  j["kb"] = kb;
  j["advice"] = advice;
  j["embeddings"] = embeddings;
  j["anchors"] = anchors;
  j["train_config"] = {{"n_trees", train_config.n_trees},
                       {"max_depth", train_config.max_depth},
                       {"max_literals_per_node", train_config.max_literals_per_node},
                       {"min_examples", train_config.min_examples},
                       {"neg_pos_ratio", train_config.neg_pos_ratio},
                       {"alpha", train_config.alpha}};
  j["gibbs"] = {{"burn_in", gibbs.burn_in}, {"samples", gibbs.samples}};
  j["similarity"] = {{"k", similarity.k}, {"tau", similarity.tau}};
  j["weak_label"] = {{"tau", weak_tau}, {"cap", weak_cap}};
  j["test_neg_ratio"] = test_neg_ratio;
  j["n_runs"] = n_runs;
  j["seed"] = seed;
  j["output_dir"] = output_dir;
  return j.dump(2) + "\n";
}

void ExperimentConfig::Validate() const {
  train_config.Validate();
  gibbs.Validate();
  if (n_runs < 1) throw DataError("n_runs must be >= 1");
  if (!(test_neg_ratio > 0)) throw DataError("test_neg_ratio must be > 0");
  if (similarity.k < 1) throw DataError("similarity k must be >= 1");
  if (!(weak_tau > 0.5 && weak_tau < 1)) {
    throw DataError("weak-label tau must be in (0.5, 1)");
  }
  if (!registry.empty()) RequireFile(registry, "relation registry");
  for (const CorpusSource* s : {&train, &test}) {
    const std::string which = s == &train ? "train" : "test";
    if (s->synthetic) {
      s->synthetic->Validate();
    } else {
      RequireFile(s->corpus, which + " corpus");
      RequireFile(s->gold, which + " gold file");
    }
  }
  if (switches.weak_supervision) {
    if (rules.empty() && kb.empty()) {
      throw DataError("weak supervision needs a rules file or a KB file");
    }
    if (!rules.empty()) RequireFile(rules, "rules file");
    if (!kb.empty()) RequireFile(kb, "KB file");
  }
  if (switches.word2vec) {
    RequireFile(embeddings, "embedding file");
    RequireFile(anchors, "anchor word list");
  }
  if (switches.advice) RequireFile(advice, "advice file");
}

std::string ExperimentConfig::SettingName() const {
  std::string name;
  auto add = [&](bool on, const char* part) {
    if (!on) return;
    if (!name.empty()) name += "+";
    name += part;
  };
  add(switches.weak_supervision, "ws");
  add(switches.word2vec, "w2v");
  add(switches.advice, "advice");
  if (switches.joint) {
    add(true, joint_inference == JointInference::kGibbs ? "joint-gibbs"
                                                        : "joint-independent");
  }
  return name.empty() ? "default" : name;
}

ExperimentInputs LoadInputs(const ExperimentConfig& config) {
  config.Validate();
  ExperimentInputs in;
  in.registry = config.registry.empty() ? RelationRegistry::Kbp()
                                        : RelationRegistry::Load(config.registry);
  in.relations = config.relations.empty() ? in.registry.names() : config.relations;
  for (const std::string& r : in.relations) in.registry.Get(r);
  in.train = LoadDataset(config.train);
  in.test = LoadDataset(config.test);
  if (!config.rules.empty()) in.rules = LoadWeightedRules(config.rules, in.registry);
  if (!config.kb.empty()) in.kb = LoadKB(config.kb);
  if (!config.advice.empty()) in.advice = LoadAdvice(config.advice, in.registry);
  if (!config.embeddings.empty()) in.embeddings = LoadEmbeddings(config.embeddings);
  if (!config.anchors.empty()) in.anchors = LoadWordList(config.anchors);
  return in;
}

std::set<std::string> CorpusLemmas(const std::vector<AnnotatedDocument>& docs) {
  std::set<std::string> lemmas;
  for (const AnnotatedDocument& doc : docs) {
    for (const Sentence& s : doc.sentences) {
      for (const Token& t : s.tokens) lemmas.insert(t.lemma);
    }
  }
  return lemmas;
}

FactStore BuildStore(const std::vector<AnnotatedDocument>& documents,
                     const EmbeddingTable* embeddings,
                     const std::set<std::string>& anchors,
                     const SimilarityOptions& options) {
  FactStore store;
  for (const AnnotatedDocument& doc : documents) {
    for (const Fact& f : FeaturizeDocument(doc)) store.Add(f);
  }
  if (embeddings) {
    for (const Fact& f : EmitSimilarityFacts(*embeddings, CorpusLemmas(documents),
                                             anchors, options)) {
      store.Add(f);
    }
  }
  return store;
}

std::vector<LabeledExample> TrainingExamples(
    const std::string& relation, const ExperimentInputs& inputs,
    const FactView& store, const Switches& switches, double weak_tau,
    size_t weak_cap, double neg_ratio, uint64_t seed) {
  std::vector<LabeledExample> positives =
      GoldExamples(inputs.train.gold, relation);
  std::unordered_set<std::string> seen;
  for (const LabeledExample& e : positives) seen.insert(e.pair.key());
  const std::vector<CandidatePair> candidates =
      RelationCandidates(inputs.train, inputs.registry, relation);
  if (switches.weak_supervision) {
    std::vector<LabeledExample> weak =
        WeakLabelCorpus(candidates, inputs.rules, store, inputs.registry,
                        weak_tau, weak_cap, seed);
    auto kb = inputs.kb.find(relation);
    if (kb != inputs.kb.end()) {
      for (LabeledExample& e :
           DistantLabel(kb->second, inputs.train.documents, inputs.registry)) {
        weak.push_back(std::move(e));
      }
    }
    for (LabeledExample& e : weak) {
      if (seen.insert(e.pair.key()).second) positives.push_back(std::move(e));
    }
  }
  std::vector<LabeledExample> examples = positives;
  for (LabeledExample& n : SampleNegatives(positives, candidates, neg_ratio, seed)) {
    examples.push_back(std::move(n));
  }
  return examples;
}

const std::vector<std::string>& ReportMetrics() {
  static const std::vector<std::string> kMetrics = {
      "auc", "f1", "best_f1", "recall@p0.66", "recall@t0.5"};
  return kMetrics;
}

std::map<std::string, double> ComputeMetrics(const ScoredSet& set) {
  std::map<std::string, double> m;
  bool pos = false, neg = false;
  for (const ScoredItem& item : set) (item.positive ? pos : neg) = true;
  if (pos && neg) m["auc"] = AucRoc(set);
  m["f1"] = F1(set, 0.5);
  m["best_f1"] = BestF1(set).f1;
  m["recall@p0.66"] = RecallAtPrecision(set, 0.66);
  double tp = 0, p = 0;
  for (const ScoredItem& item : set) {
    if (!item.positive) continue;
    ++p;
    if (item.score >= 0.5) ++tp;
  }
  m["recall@t0.5"] = p > 0 ? tp / p : 0;
  return m;
}

std::string ExperimentReport::ToTsv() const {
  std::string out = "relation\tsetting\tmetric\tmean\tstd\tn\n";
  for (const ReportRow& row : rows) {
    out += row.relation + "\t" + row.setting + "\t" + row.aggregate.metric +
           "\t" + FormatFixed(row.aggregate.mean) + "\t" +
           FormatFixed(row.aggregate.stddev) + "\t" +
           std::to_string(row.aggregate.values.size()) + "\n";
  }
  return out;
}

const ReportRow* ExperimentReport::Find(const std::string& relation,
                                        const std::string& metric) const {
  for (const ReportRow& row : rows) {
    if (row.relation == relation && row.aggregate.metric == metric) return &row;
  }
  return nullptr;
}

ModelMap TrainModels(const ExperimentConfig& config,
                     const ExperimentInputs& inputs, const FactStore& store,
                     uint64_t run_seed, std::vector<std::string>* log,
                     const std::string& log_prefix) {
  const Switches& sw = config.switches;
  const ModeSet modes = ModeSet::Default(sw.word2vec);
  static const std::vector<AdviceRule> kNoAdvice;
  const std::vector<AdviceRule>& advice = sw.advice ? inputs.advice : kNoAdvice;
  std::map<std::string, std::vector<LabeledExample>> examples;
  for (size_t i = 0; i < inputs.relations.size(); ++i) {
    const std::string& r = inputs.relations[i];
    examples[r] = TrainingExamples(r, inputs, store, sw, config.weak_tau,
                                   config.weak_cap,
                                   config.train_config.neg_pos_ratio,
                                   TrainNegativeSeed(run_seed, i));
  }
  OverlayView world(store);
  if (sw.joint) {
    for (const Fact& f : PositiveTargetFacts(examples, inputs.registry)) {
      world.SetActive(world.AddFact(f), true);
    }
  }
  TrainConfig tc = config.train_config;
  tc.joint = sw.joint;
  tc.rng_seed = run_seed;
  ModelMap models;
  for (const std::string& r : inputs.relations) {
    try {
      models[r] = BoostRelation(r, examples[r], world, advice,
                                LearnerModes(modes, inputs.registry, r, sw.joint),
                                tc)
                      .model;
    } catch (const std::runtime_error& e) {
      const std::string msg = log_prefix + "relation " + r + " failed: " + e.what();
      if (log == nullptr) throw;
      log->push_back(msg);
    }
  }
  return models;
}

std::vector<CandidatePair> AllCandidates(const Dataset& data,
                                         const RelationRegistry& registry,
                                         const std::vector<std::string>& relations) {
  std::vector<CandidatePair> out;
  for (const std::string& r : relations) {
    for (CandidatePair& c : RelationCandidates(data, registry, r)) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Prediction> Predict(const ExperimentConfig& config,
                                const ModelMap& models,
                                const std::vector<CandidatePair>& candidates,
                                const FactView& store,
                                const RelationRegistry& registry,
                                uint64_t run_seed) {
  if (config.switches.joint && config.joint_inference == JointInference::kGibbs) {
    GibbsConfig g = config.gibbs;
    g.seed = DeriveSeed(run_seed, kGibbsCounter);
    return GibbsInfer(models, candidates, store, registry, g);
  }
  return PredictIndependent(models, candidates, store, registry);
}

ExperimentReport RunExperiment(const ExperimentConfig& config,
                               const ExperimentInputs& inputs) {
  config.Validate();
  const Switches& sw = config.switches;
  const EmbeddingTable* table =
      sw.word2vec && inputs.embeddings ? &*inputs.embeddings : nullptr;
  const FactStore train_store =
      BuildStore(inputs.train.documents, table, inputs.anchors, config.similarity);
  const FactStore test_store =
      BuildStore(inputs.test.documents, table, inputs.anchors, config.similarity);
  std::map<std::string, std::vector<CandidatePair>> test_candidates;
  for (const std::string& r : inputs.relations) {
    test_candidates[r] = RelationCandidates(inputs.test, inputs.registry, r);
  }

  ExperimentReport report;
  std::map<std::string, std::map<std::string, std::vector<double>>> values;
  for (int run = 0; run < config.n_runs; ++run) {
    const uint64_t run_seed = DeriveSeed(config.seed, static_cast<uint64_t>(run));
    report.log.push_back("run " + std::to_string(run) + " seed " +
                         std::to_string(run_seed));

    ModelMap models = TrainModels(config, inputs, train_store, run_seed,
                                  &report.log, "run " + std::to_string(run) + " ");

    std::vector<CandidatePair> scored;
    std::vector<bool> labels;
    for (size_t i = 0; i < inputs.relations.size(); ++i) {
      const std::string& r = inputs.relations[i];
      if (!models.count(r)) continue;
      const std::vector<LabeledExample> pos = GoldExamples(inputs.test.gold, r);
      if (pos.empty()) {
        report.log.push_back("run " + std::to_string(run) + " relation " + r +
                             " has no test positives");
        continue;
      }
      for (const LabeledExample& e : pos) {
        scored.push_back(e.pair);
        labels.push_back(true);
      }
      for (const LabeledExample& e :
           SampleNegatives(pos, test_candidates[r], config.test_neg_ratio,
                           TestNegativeSeed(run_seed, i))) {
        scored.push_back(e.pair);
        labels.push_back(false);
      }
    }
    const std::vector<Prediction> predictions =
        Predict(config, models, scored, test_store, inputs.registry, run_seed);
    std::map<std::string, ScoredSet> sets;
    for (size_t i = 0; i < predictions.size(); ++i) {
      sets[predictions[i].candidate.relation].push_back(
          {predictions[i].probability, labels[i]});
    }
    for (const auto& [r, set] : sets) {
      for (const auto& [metric, v] : ComputeMetrics(set)) {
        values[r][metric].push_back(v);
      }
    }
    if (run + 1 == config.n_runs) report.last_models = models;
  }

  const std::string setting = config.SettingName();
  for (const std::string& r : inputs.relations) {
    auto it = values.find(r);
    if (it == values.end()) continue;
    for (const std::string& metric : ReportMetrics()) {
      auto m = it->second.find(metric);
      if (m == it->second.end() || m->second.empty()) continue;
      report.rows.push_back({r, setting, Aggregate(metric, m->second)});
    }
  }
  return report;
}

void WriteFileAtomic(const std::string& path, const std::string& contents) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp);
    out << contents;
    if (!out) throw DataError("write failed for " + tmp);
  }
  fs::rename(tmp, target);
}

size_t FeaturizeCorpus(const std::vector<AnnotatedDocument>& documents,
                       const std::string& out_dir) {
  fs::create_directories(out_dir);
  std::string manifest = "doc_id\tfile\tfacts\tfingerprint\n";
  for (const AnnotatedDocument& doc : documents) {
    FactStore store;
    for (const Fact& f : FeaturizeDocument(doc)) store.Add(f);
    std::string file = doc.doc_id + ".facts";
    std::replace(file.begin(), file.end(), '/', '_');
    WriteFileAtomic((fs::path(out_dir) / file).string(), store.ToText());
    char fp[32];
    std::snprintf(fp, sizeof(fp), "%016" PRIx64, store.Fingerprint());
    manifest += doc.doc_id + "\t" + file + "\t" + std::to_string(store.size()) +
                "\t" + fp + "\n";
  }
  WriteFileAtomic((fs::path(out_dir) / "manifest.tsv").string(), manifest);
  return documents.size();
}

ScoredSet LabelPredictions(const std::vector<Prediction>& predictions,
                           const std::vector<CandidatePair>& gold) {
  std::unordered_set<std::string> keys;
  for (const CandidatePair& g : gold) keys.insert(g.key());
  ScoredSet set;
  set.reserve(predictions.size());
  for (const Prediction& p : predictions) {
    set.push_back({p.probability, keys.count(p.candidate.key()) > 0});
  }
  return set;
}

}  // namespace rdnkbp
