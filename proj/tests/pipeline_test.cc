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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rdnkbp/error.h"
#include "rdnkbp/logging.h"
#include "rdnkbp/modes.h"
#include "rdnkbp/pipeline.h"
#include "rdnkbp/rng.h"

namespace rdnkbp {
namespace {

namespace fs = std::filesystem;

const std::string kConfigDir = RDNKBP_SOURCE_DIR "/config";

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("rdnkbp_pipeline_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Small synthetic experiment over age and parents.
ExperimentConfig SmallConfig() {
  ExperimentConfig c = ExperimentConfig::FromJson(R"({
    "registry": "relations_kbp.tsv",
    "relations": ["per:age", "per:parents"],
    "train": {"synthetic": {"n_sentences": 80, "seed": 1, "doc_prefix": "tr",
      "noise": 0.05, "mix": {"age_comma": 0.3, "age_distractor": 0.2,
      "parent_father": 0.2, "unrelated_pair": 0.2}}},
    "test": {"synthetic": {"n_sentences": 50, "seed": 2, "doc_prefix": "te",
      "noise": 0.05, "mix": {"age_comma": 0.3, "age_distractor": 0.2,
      "parent_father": 0.2, "unrelated_pair": 0.2}}},
    "rules": "../rules/kbp_table2.rules",
    "advice": "../advice/kbp_table3.rules",
    "train_config": {"n_trees": 3, "max_depth": 2, "max_literals_per_node": 2,
                     "min_examples": 2, "neg_pos_ratio": 2.0, "alpha": 0.5},
    "gibbs": {"burn_in": 10, "samples": 50},
    "n_runs": 2,
    "seed": 5
  })",
                                                  kConfigDir);
  return c;
}

std::string DropSettingColumn(const std::string& tsv) {
  std::istringstream in(tsv);
  std::string line, out;
  while (std::getline(in, line)) {
    const size_t a = line.find('\t');
    const size_t b = line.find('\t', a + 1);
    out += line.substr(0, a) + line.substr(b) + "\n";
  }
  return out;
}

TEST(ExperimentConfig, ShippedConfigLoads) {
  const ExperimentConfig c =
      ExperimentConfig::Load(kConfigDir + "/synthetic_experiment.json");
  EXPECT_EQ(c.relations.size(), 3u);
  EXPECT_EQ(c.n_runs, 5);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.train_config.n_trees, 10);
  ASSERT_TRUE(c.train.synthetic.has_value());
  EXPECT_EQ(c.train.synthetic->n_sentences, 300);
  EXPECT_TRUE(fs::path(c.registry).is_absolute());
  EXPECT_NO_THROW(c.Validate());
}

TEST(ExperimentConfig, JsonRoundTrip) {
  ExperimentConfig c = SmallConfig();
  c.switches.advice = true;
  c.switches.joint = true;
  c.joint_inference = JointInference::kIndependent;
  c.weak_cap = 7;
  const std::string text = c.ToJson();
  const ExperimentConfig back = ExperimentConfig::FromJson(text);
  EXPECT_EQ(back.ToJson(), text);
  EXPECT_EQ(back.switches, c.switches);
  EXPECT_EQ(back.weak_cap, 7u);
}

TEST(ExperimentConfig, RejectsUnknownKeysAndBadJson) {
  EXPECT_THROW(ExperimentConfig::FromJson(R"({"n_run": 3})"), DataError);
  EXPECT_THROW(ExperimentConfig::FromJson(R"({"switches": {"w2v": true}})"),
               DataError);
  EXPECT_THROW(ExperimentConfig::FromJson("{\"n_runs\": "), DataError);
  EXPECT_THROW(ExperimentConfig::FromJson(R"({"joint_inference": "mcmc"})"),
               DataError);
}

TEST(ExperimentConfig, ValidateErrors) {
  ExperimentConfig c = SmallConfig();
  EXPECT_NO_THROW(c.Validate());

  ExperimentConfig bad = c;
  bad.n_runs = 0;
  EXPECT_THROW(bad.Validate(), DataError);

  bad = c;
  bad.switches.weak_supervision = true;
  bad.rules.clear();
  bad.kb.clear();
  EXPECT_THROW(bad.Validate(), DataError);

  bad = c;
  bad.switches.word2vec = true;
  EXPECT_THROW(bad.Validate(), DataError);

  bad = c;
  bad.switches.advice = true;
  bad.advice = kConfigDir + "/no_such_advice.rules";
  EXPECT_THROW(bad.Validate(), DataError);

  bad = c;
  bad.weak_tau = 0.5;
  EXPECT_THROW(bad.Validate(), DataError);
}

TEST(ExperimentConfig, SettingNames) {
  ExperimentConfig c;
  EXPECT_EQ(c.SettingName(), "default");
  c.switches.weak_supervision = true;
  c.switches.word2vec = true;
  c.switches.advice = true;
  c.switches.joint = true;
  EXPECT_EQ(c.SettingName(), "ws+w2v+advice+joint-gibbs");
  c.switches = Switches{};
  c.switches.joint = true;
  c.joint_inference = JointInference::kIndependent;
  EXPECT_EQ(c.SettingName(), "joint-independent");
}

TEST(FeaturizeCorpus, OneDocument) {
  GeneratorSpec spec;
  spec.n_sentences = 3;
  spec.sentences_per_document = 5;
  spec.mix = {{"age_comma", 1.0}};
  const SyntheticCorpus corpus = Generate(spec);
  ASSERT_EQ(corpus.documents.size(), 1u);
  const fs::path dir = TempDir("featurize");
  EXPECT_EQ(FeaturizeCorpus(corpus.documents, dir.string()), 1u);
  const std::string id = corpus.documents[0].doc_id;
  ASSERT_TRUE(fs::exists(dir / (id + ".facts")));
  const std::string manifest = ReadAll(dir / "manifest.tsv");
  EXPECT_EQ(manifest.rfind("doc_id\tfile\tfacts\tfingerprint\n", 0), 0u);
  EXPECT_NE(manifest.find(id + "\t" + id + ".facts\t"), std::string::npos);

  FactStore reread;
  reread.LoadText(ReadAll(dir / (id + ".facts")));
  FactStore direct;
  for (const Fact& f : FeaturizeDocument(corpus.documents[0])) direct.Add(f);
  EXPECT_EQ(reread.Fingerprint(), direct.Fingerprint());

  const std::string facts = ReadAll(dir / (id + ".facts"));
  FeaturizeCorpus(corpus.documents, dir.string());
  EXPECT_EQ(ReadAll(dir / (id + ".facts")), facts);
  EXPECT_EQ(ReadAll(dir / "manifest.tsv"), manifest);
  fs::remove_all(dir);
}

TEST(WriteFileAtomic, ReplacesContents) {
  const fs::path dir = TempDir("atomic");
  const std::string path = (dir / "sub" / "out.txt").string();
  WriteFileAtomic(path, "first\n");
  WriteFileAtomic(path, "second\n");
  EXPECT_EQ(ReadAll(path), "second\n");
  EXPECT_FALSE(fs::exists(path + ".tmp"));
  fs::remove_all(dir);
}

TEST(LabelPredictions, MarksGoldPairs) {
  CandidatePair a{"per:age", "d", "s1", "m1", "m2"};
  CandidatePair b{"per:age", "d", "s1", "m1", "m3"};
  CandidatePair c{"per:parents", "d", "s1", "m1", "m2"};
  const ScoredSet set = LabelPredictions({{a, 0.9, 0}, {b, 0.4, 0}, {c, 0.2, 0}}, {a});
  ASSERT_EQ(set.size(), 3u);
  EXPECT_TRUE(set[0].positive);
  EXPECT_FALSE(set[1].positive);
  EXPECT_FALSE(set[2].positive);
  EXPECT_DOUBLE_EQ(set[1].score, 0.4);
}

TEST(BuildStore, SimilarityFactsAreTheOnlyAddition) {
  const ExperimentInputs in = LoadInputs(SmallConfig());
  const std::set<std::string> lemmas = CorpusLemmas(in.train.documents);
  EmbeddingTable table(4);
  Rng rng(3);
  for (const std::string& w : lemmas) {
    table.Set(w, {rng.Uniform() + 0.1, rng.Uniform(), rng.Uniform(), rng.Uniform()});
  }
  const std::set<std::string> anchors = {"father", "age"};
  const SimilarityOptions options{3, 0.0};
  const FactStore plain = BuildStore(in.train.documents, nullptr, anchors, options);
  const FactStore with = BuildStore(in.train.documents, &table, anchors, options);
  size_t similar = 0;
  for (size_t i = 0; i < with.size(); ++i) {
    const Fact f = with.fact(i);
    if (f.predicate.str() == "similarWords") {
      ++similar;
    } else {
      EXPECT_TRUE(plain.Contains(f)) << f.ToString();
    }
  }
  for (size_t i = 0; i < plain.size(); ++i) EXPECT_TRUE(with.Contains(plain.fact(i)));
  EXPECT_GT(similar, 0u);
  EXPECT_EQ(with.size(), plain.size() + similar);
}

TEST(LearnerModes, JointAddsOnlyOtherTargets) {
  const RelationRegistry registry = RelationRegistry::Kbp();
  const ModeSet base = ModeSet::Default(false);
  const Symbol age = RelationRegistry::PredicateFor("per:age");
  const Symbol parents = RelationRegistry::PredicateFor("per:parents");
  const ModeSet solo = LearnerModes(base, registry, "per:age", false);
  const ModeSet joint = LearnerModes(base, registry, "per:age", true);
  for (const RelationSignature& r : registry.relations()) {
    EXPECT_FALSE(solo.Uses(r.predicate)) << r.relation;
  }
  EXPECT_FALSE(joint.Uses(age));
  EXPECT_TRUE(joint.Uses(parents));
}

TEST(TrainingExamples, GoldWinsOverWeakDuplicates) {
  ExperimentConfig c = SmallConfig();
  c.switches.weak_supervision = true;
  const ExperimentInputs in = LoadInputs(c);
  const FactStore store = BuildStore(in.train.documents, nullptr, {}, c.similarity);
  const std::vector<LabeledExample> examples = TrainingExamples(
      "per:age", in, store, c.switches, 0.6, 1000, 2.0, 11);
  std::set<std::string> gold;
  for (const CandidatePair& g : in.train.gold) {
    if (g.relation == "per:age") gold.insert(g.key());
  }
  std::set<std::string> seen;
  size_t weak = 0;
  for (const LabeledExample& e : examples) {
    EXPECT_TRUE(seen.insert(e.pair.key()).second) << e.pair.key();
    if (gold.count(e.pair.key())) {
      EXPECT_EQ(e.provenance, Provenance::kGold) << e.pair.key();
      EXPECT_TRUE(e.positive);
    }
    weak += e.provenance == Provenance::kWeak;
  }
  EXPECT_GT(weak, 0u);
  for (const std::string& k : gold) EXPECT_TRUE(seen.count(k)) << k;
}

TEST(RunExperiment, DefaultSetting) {
  const ExperimentConfig c = SmallConfig();
  const ExperimentReport report = RunExperiment(c, LoadInputs(c));
  EXPECT_EQ(report.rows.size(), 2 * ReportMetrics().size());
  for (const ReportRow& row : report.rows) {
    EXPECT_EQ(row.setting, "default");
    EXPECT_EQ(row.aggregate.values.size(), 2u);
  }
  EXPECT_EQ(report.log[0].rfind("run 0 seed ", 0), 0u);
  EXPECT_EQ(report.last_models.size(), 2u);
  const std::string tsv = report.ToTsv();
  EXPECT_EQ(tsv.rfind("relation\tsetting\tmetric\tmean\tstd\tn\n", 0), 0u);
}

TEST(RunExperiment, Deterministic) {
  const ExperimentConfig c = SmallConfig();
  const ExperimentInputs in = LoadInputs(c);
  EXPECT_EQ(RunExperiment(c, in).ToTsv(), RunExperiment(c, in).ToTsv());
}

TEST(RunExperiment, RunCount) {
  ExperimentConfig c = SmallConfig();
  c.n_runs = 5;
  c.train_config.n_trees = 1;
  const ExperimentReport report = RunExperiment(c, LoadInputs(c));
  const ReportRow* auc = report.Find("per:age", "auc");
  ASSERT_NE(auc, nullptr);
  EXPECT_EQ(auc->aggregate.values.size(), 5u);
  EXPECT_NE(report.ToTsv().find("per:age\tdefault\tauc\t"), std::string::npos);
}

TEST(RunExperiment, AdviceWithAlphaOneChangesNothing) {
  ExperimentConfig c = SmallConfig();
  c.train_config.alpha = 1.0;
  const ExperimentInputs in = LoadInputs(c);
  const std::string plain = RunExperiment(c, in).ToTsv();
  c.switches.advice = true;
  const ExperimentReport advised = RunExperiment(c, in);
  EXPECT_EQ(advised.rows[0].setting, "advice");
  EXPECT_EQ(DropSettingColumn(advised.ToTsv()), DropSettingColumn(plain));
}

TEST(RunExperiment, FailedRelationIsIsolated) {
  ExperimentConfig c = SmallConfig();
  c.relations = {"per:age", "per:siblings", "per:parents"};
  ScopedWarningCapture quiet;
  const ExperimentReport report = RunExperiment(c, LoadInputs(c));
  EXPECT_EQ(report.Find("per:siblings", "auc"), nullptr);
  EXPECT_NE(report.Find("per:age", "auc"), nullptr);
  EXPECT_NE(report.Find("per:parents", "auc"), nullptr);
  bool logged = false;
  for (const std::string& line : report.log) {
    logged = logged || line.find("relation per:siblings failed") != std::string::npos;
  }
  EXPECT_TRUE(logged);
}

TEST(RunExperiment, JointSettings) {
  ExperimentConfig c = SmallConfig();
  c.n_runs = 1;
  c.switches.joint = true;
  const ExperimentInputs in = LoadInputs(c);
  const ExperimentReport gibbs = RunExperiment(c, in);
  EXPECT_EQ(gibbs.rows[0].setting, "joint-gibbs");
  c.joint_inference = JointInference::kIndependent;
  const ExperimentReport independent = RunExperiment(c, in);
  EXPECT_EQ(independent.rows[0].setting, "joint-independent");
  EXPECT_EQ(independent.rows.size(), gibbs.rows.size());
}

}  // namespace
}  // namespace rdnkbp
