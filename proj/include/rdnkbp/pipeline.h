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

#ifndef RDNKBP_PIPELINE_H_
#define RDNKBP_PIPELINE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rdnkbp/document.h"
#include "rdnkbp/embeddings.h"
#include "rdnkbp/evaluation.h"
#include "rdnkbp/fact_store.h"
#include "rdnkbp/featurizer.h"
#include "rdnkbp/inference.h"
#include "rdnkbp/labels.h"
#include "rdnkbp/learner.h"
#include "rdnkbp/model.h"
#include "rdnkbp/synthetic.h"
#include "rdnkbp/weak_supervision.h"

namespace rdnkbp {

struct Switches {
  bool weak_supervision = false;
  bool word2vec = false;
  bool advice = false;
  bool joint = false;

  friend bool operator==(const Switches&, const Switches&) = default;
};

enum class JointInference { kGibbs, kIndependent };

// A corpus split: an annotated-document file with its gold file, or a
// synthetic corpus generated on the fly.
struct CorpusSource {
  std::string corpus;
  std::string gold;
  std::optional<GeneratorSpec> synthetic;
};

struct ExperimentConfig {
  std::string registry;  // relation signature file; built-in table if empty
  std::vector<std::string> relations;  // all registry relations if empty
  CorpusSource train;
  CorpusSource test;
  Switches switches;
  JointInference joint_inference = JointInference::kGibbs;
  std::string rules;       // weighted rules for weak supervision
  std::string kb;          // KB snapshot for distant supervision
  std::string advice;      // advice rules
  std::string embeddings;  // word vectors
  std::string anchors;     // expert anchor words
  TrainConfig train_config;
  GibbsConfig gibbs;
  SimilarityOptions similarity;
  double weak_tau = 0.6;
  size_t weak_cap = 150;
  double test_neg_ratio = 2.0;
  int n_runs = 5;
  uint64_t seed = 0;
  std::string output_dir;

  // Parses the JSON form; relative paths are resolved against `base_dir`.
  static ExperimentConfig FromJson(const std::string& text,
                                   const std::string& base_dir = "");
  static ExperimentConfig Load(const std::string& path);
  std::string ToJson() const;

  // Throws DataError on out-of-range values, missing inputs required by the
  // switches, or referenced files that do not exist.
  void Validate() const;

  // Short name of the switch combination, e.g. "default" or "ws+joint".
  std::string SettingName() const;
};

struct Dataset {
  std::vector<AnnotatedDocument> documents;
  std::vector<CandidatePair> gold;
};

// Everything an experiment reads, loaded once.
struct ExperimentInputs {
  RelationRegistry registry;
  std::vector<std::string> relations;
  Dataset train;
  Dataset test;
  std::vector<WeightedClause> rules;
  std::map<std::string, KBPairFile> kb;
  std::vector<AdviceRule> advice;
  std::optional<EmbeddingTable> embeddings;
  std::set<std::string> anchors;
};

ExperimentInputs LoadInputs(const ExperimentConfig& config);

// Facts of every document, plus similarity facts over the corpus lemmas when
// an embedding table is given.
FactStore BuildStore(const std::vector<AnnotatedDocument>& documents,
                     const EmbeddingTable* embeddings,
                     const std::set<std::string>& anchors,
                     const SimilarityOptions& options);

// Lemmas of all tokens, the vocabulary similarity facts range over.
std::set<std::string> CorpusLemmas(const std::vector<AnnotatedDocument>& docs);

// Training examples of one relation: gold positives, optionally weak labels
// (knowledge-based and distant), and sampled negatives.
std::vector<LabeledExample> TrainingExamples(
    const std::string& relation, const ExperimentInputs& inputs,
    const FactView& store, const Switches& switches, double weak_tau,
    size_t weak_cap, double neg_ratio, uint64_t seed);

// Trains one model per relation from the training store. A relation that
// cannot be trained is logged to `log` and skipped; with a null `log` the
// error propagates.
ModelMap TrainModels(const ExperimentConfig& config,
                     const ExperimentInputs& inputs, const FactStore& store,
                     uint64_t run_seed, std::vector<std::string>* log,
                     const std::string& log_prefix = "");

// Candidates of all `relations` in document order, relation by relation.
std::vector<CandidatePair> AllCandidates(const Dataset& data,
                                         const RelationRegistry& registry,
                                         const std::vector<std::string>& relations);

// Gibbs sampling when the joint switch is on and the joint inference mode is
// gibbs, independent prediction otherwise. The sampler seed is derived from
// `run_seed`.
std::vector<Prediction> Predict(const ExperimentConfig& config,
                                const ModelMap& models,
                                const std::vector<CandidatePair>& candidates,
                                const FactView& store,
                                const RelationRegistry& registry,
                                uint64_t run_seed);

struct ReportRow {
  std::string relation;
  std::string setting;
  RunAggregate aggregate;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  std::vector<std::string> log;  // seeds, warnings and per-relation failures
  // Models of the last run, by relation.
  std::map<std::string, BoostedModel> last_models;

  // Tab-separated: relation setting metric mean std n.
  std::string ToTsv() const;
  const ReportRow* Find(const std::string& relation,
                        const std::string& metric) const;
};

// Metric names in report order.
const std::vector<std::string>& ReportMetrics();

// Per-relation metrics of one scored test set.
std::map<std::string, double> ComputeMetrics(const ScoredSet& set);

// n_runs train/test cycles with negatives re-sampled per run. Run r uses seed
// DeriveSeed(config.seed, r); a relation that fails to train is logged and
// left out of the report without stopping the others.
ExperimentReport RunExperiment(const ExperimentConfig& config,
                               const ExperimentInputs& inputs);

// Writes `contents` to `path` through a temporary file and a rename.
void WriteFileAtomic(const std::string& path, const std::string& contents);

// Writes one `<doc_id>.facts` file per document and `manifest.tsv` into
// `out_dir`. Returns the number of documents.
size_t FeaturizeCorpus(const std::vector<AnnotatedDocument>& documents,
                       const std::string& out_dir);

// Scores all candidates of `predictions` against gold pairs: a candidate is
// positive iff it is in `gold`.
ScoredSet LabelPredictions(const std::vector<Prediction>& predictions,
                           const std::vector<CandidatePair>& gold);

}  // namespace rdnkbp

#endif  // RDNKBP_PIPELINE_H_
