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

// Command-line front end: featurize, weak-label, train, infer, evaluate,
// experiment and generate.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdnkbp/error.h"
#include "rdnkbp/pipeline.h"
#include "rdnkbp/rng.h"

namespace fs = std::filesystem;

namespace {

using rdnkbp::ExperimentConfig;
using rdnkbp::ExperimentInputs;

constexpr int kUsage = 1;

struct Overrides {
  std::string config;
  std::optional<uint64_t> seed;
  std::optional<int> runs;
  bool weak_supervision = false;
  bool word2vec = false;
  bool advice = false;
  bool joint = false;
  std::string joint_inference;
  std::string out;

  void Register(CLI::App* cmd) {
    cmd->add_option("--config", config, "Experiment configuration (JSON)");
    cmd->add_option("--seed", seed, "Master seed");
    cmd->add_option("--runs", runs, "Number of train/test runs");
    cmd->add_flag("--weak-supervision", weak_supervision);
    cmd->add_flag("--word2vec", word2vec);
    cmd->add_flag("--advice", advice);
    cmd->add_flag("--joint", joint);
    cmd->add_option("--joint-inference", joint_inference)
        ->check(CLI::IsMember({"gibbs", "independent"}));
    cmd->add_option("--out", out, "Output path");
  }

  ExperimentConfig Apply() const {
    ExperimentConfig c;
    if (!config.empty()) c = ExperimentConfig::Load(config);
    if (seed) c.seed = *seed;
    if (runs) c.n_runs = *runs;
    c.switches.weak_supervision |= weak_supervision;
    c.switches.word2vec |= word2vec;
    c.switches.advice |= advice;
    c.switches.joint |= joint;
    if (joint_inference == "gibbs") {
      c.joint_inference = rdnkbp::JointInference::kGibbs;
    } else if (joint_inference == "independent") {
      c.joint_inference = rdnkbp::JointInference::kIndependent;
    }
    if (!out.empty()) c.output_dir = out;
    return c;
  }
};

std::string ModelFileName(std::string relation) {
  for (char& ch : relation) {
    if (ch == ':' || ch == '/') ch = '_';
  }
  return relation + ".model";
}

void PrintLog(const std::vector<std::string>& log) {
  for (const std::string& line : log) std::cerr << line << "\n";
}

std::string Joined(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& line : lines) out += line + "\n";
  return out;
}

int Featurize(const Overrides& o, const std::string& corpus) {
  std::vector<rdnkbp::AnnotatedDocument> docs;
  if (!corpus.empty()) {
    docs = rdnkbp::LoadCorpus(corpus);
  } else {
    docs = rdnkbp::LoadInputs(o.Apply()).train.documents;
  }
  if (o.out.empty()) throw CLI::RequiredError("--out");
  const size_t n = rdnkbp::FeaturizeCorpus(docs, o.out);
  std::cout << "featurized " << n << " documents into " << o.out << "\n";
  return 0;
}

int WeakLabel(const Overrides& o) {
  ExperimentConfig c = o.Apply();
  c.switches.weak_supervision = true;
  const ExperimentInputs in = rdnkbp::LoadInputs(c);
  const rdnkbp::FactStore store =
      rdnkbp::BuildStore(in.train.documents, nullptr, {}, c.similarity);
  std::vector<rdnkbp::LabeledExample> all;
  const uint64_t run_seed = rdnkbp::DeriveSeed(c.seed, 0);
  for (size_t i = 0; i < in.relations.size(); ++i) {
    for (rdnkbp::LabeledExample& e : rdnkbp::TrainingExamples(
             in.relations[i], in, store, c.switches, c.weak_tau, c.weak_cap,
             c.train_config.neg_pos_ratio, rdnkbp::DeriveSeed(run_seed, 2 * i))) {
      all.push_back(std::move(e));
    }
  }
  const std::string text = rdnkbp::FormatExamples(all);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    rdnkbp::WriteFileAtomic(o.out, text);
  }
  return 0;
}

int Train(const Overrides& o) {
  const ExperimentConfig c = o.Apply();
  if (c.output_dir.empty()) throw CLI::RequiredError("--out");
  const ExperimentInputs in = rdnkbp::LoadInputs(c);
  const rdnkbp::EmbeddingTable* table =
      c.switches.word2vec && in.embeddings ? &*in.embeddings : nullptr;
  const rdnkbp::FactStore store =
      rdnkbp::BuildStore(in.train.documents, table, in.anchors, c.similarity);
  std::vector<std::string> log;
  const rdnkbp::ModelMap models = rdnkbp::TrainModels(
      c, in, store, rdnkbp::DeriveSeed(c.seed, 0), &log);
  PrintLog(log);
  for (const auto& [relation, model] : models) {
    rdnkbp::WriteFileAtomic(
        (fs::path(c.output_dir) / ModelFileName(relation)).string(),
        model.Serialize());
  }
  std::cout << "trained " << models.size() << " of " << in.relations.size()
            << " relations\n";
  if (models.size() < in.relations.size()) return 3;
  return 0;
}

int Infer(const Overrides& o, const std::string& model_dir) {
  const ExperimentConfig c = o.Apply();
  const ExperimentInputs in = rdnkbp::LoadInputs(c);
  rdnkbp::ModelMap models;
  for (const auto& entry : fs::directory_iterator(model_dir)) {
    if (entry.path().extension() != ".model") continue;
    rdnkbp::BoostedModel m = rdnkbp::BoostedModel::Load(entry.path().string());
    models[m.relation] = std::move(m);
  }
  std::vector<std::string> relations;
  for (const std::string& r : in.relations) {
    if (models.count(r)) relations.push_back(r);
  }
  const rdnkbp::EmbeddingTable* table =
      c.switches.word2vec && in.embeddings ? &*in.embeddings : nullptr;
  const rdnkbp::FactStore store =
      rdnkbp::BuildStore(in.test.documents, table, in.anchors, c.similarity);
  const auto predictions = rdnkbp::Predict(
      c, models, rdnkbp::AllCandidates(in.test, in.registry, relations), store,
      in.registry, rdnkbp::DeriveSeed(c.seed, 0));
  const std::string text = rdnkbp::FormatPredictions(predictions);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    rdnkbp::WriteFileAtomic(o.out, text);
  }
  return 0;
}

int Evaluate(const std::string& predictions_path, const std::string& gold_path,
             const std::string& out) {
  const auto predictions = rdnkbp::ParsePredictions(
      [&] {
        std::ifstream in(predictions_path);
        if (!in) throw rdnkbp::DataError("cannot read " + predictions_path);
        return std::string(std::istreambuf_iterator<char>(in), {});
      }());
  const auto gold = rdnkbp::LoadGold(gold_path);
  std::map<std::string, std::vector<rdnkbp::Prediction>> by_relation;
  for (const auto& p : predictions) by_relation[p.candidate.relation].push_back(p);
  std::string text = "relation\tmetric\tvalue\n";
  for (const auto& [relation, preds] : by_relation) {
    for (const auto& [metric, value] :
         rdnkbp::ComputeMetrics(rdnkbp::LabelPredictions(preds, gold))) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", value);
      text += relation + "\t" + metric + "\t" + buf + "\n";
    }
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    rdnkbp::WriteFileAtomic(out, text);
  }
  return 0;
}

int Experiment(const Overrides& o) {
  const ExperimentConfig c = o.Apply();
  const ExperimentInputs in = rdnkbp::LoadInputs(c);
  const rdnkbp::ExperimentReport report = rdnkbp::RunExperiment(c, in);
  PrintLog(report.log);
  const std::string tsv = report.ToTsv();
  if (c.output_dir.empty()) {
    std::cout << tsv;
  } else {
    const fs::path dir(c.output_dir);
    rdnkbp::WriteFileAtomic((dir / "report.tsv").string(), tsv);
    rdnkbp::WriteFileAtomic((dir / "run.log").string(), Joined(report.log));
    rdnkbp::WriteFileAtomic((dir / "config.json").string(), c.ToJson());
    std::cout << "wrote " << (dir / "report.tsv").string() << "\n";
  }
  if (report.rows.empty() && !in.relations.empty()) return 3;
  return 0;
}

int Generate(const rdnkbp::GeneratorSpec& spec, const std::string& out) {
  const rdnkbp::SyntheticCorpus corpus = rdnkbp::Generate(spec);
  std::string jsonl;
  for (const auto& doc : corpus.documents) jsonl += rdnkbp::DocumentToJson(doc) + "\n";
  const fs::path dir(out);
  rdnkbp::WriteFileAtomic((dir / "corpus.jsonl").string(), jsonl);
  rdnkbp::WriteFileAtomic((dir / "gold.tsv").string(),
                          rdnkbp::FormatGold(corpus.gold));
  std::cout << "generated " << corpus.documents.size() << " documents, "
            << corpus.gold.size() << " gold pairs\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relational dependency network relation extraction"};
  app.require_subcommand(1);

  Overrides featurize_o, weak_o, train_o, infer_o, experiment_o;
  std::string corpus, model_dir, predictions, gold, eval_out, gen_out;
  std::vector<std::string> mix;
  rdnkbp::GeneratorSpec spec;

  CLI::App* featurize = app.add_subcommand("featurize", "Write per-document fact files");
  featurize_o.Register(featurize);
  featurize->add_option("--corpus", corpus, "Annotated-document file (JSON lines)");

  CLI::App* weak = app.add_subcommand("weak-label", "Write weakly labeled examples");
  weak_o.Register(weak);

  CLI::App* train = app.add_subcommand("train", "Train one model per relation");
  train_o.Register(train);

  CLI::App* infer = app.add_subcommand("infer", "Score test candidates");
  infer_o.Register(infer);
  infer->add_option("--models", model_dir, "Directory of .model files")->required();

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score predictions against gold");
  evaluate->add_option("--predictions", predictions)->required();
  evaluate->add_option("--gold", gold)->required();
  evaluate->add_option("--out", eval_out);

  CLI::App* experiment = app.add_subcommand("experiment", "Run repeated train/test cycles");
  experiment_o.Register(experiment);

  CLI::App* generate = app.add_subcommand("generate", "Write a synthetic corpus");
  generate->add_option("--n-sentences", spec.n_sentences);
  generate->add_option("--mix", mix, "template=fraction, repeatable");
  generate->add_option("--noise", spec.noise);
  generate->add_option("--seed", spec.seed);
  generate->add_option("--prefix", spec.doc_prefix);
  generate->add_option("--sentences-per-document", spec.sentences_per_document);
  generate->add_option("--out", gen_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*featurize) return Featurize(featurize_o, corpus);
    if (*weak) return WeakLabel(weak_o);
    if (*train) return Train(train_o);
    if (*infer) return Infer(infer_o, model_dir);
    if (*evaluate) return Evaluate(predictions, gold, eval_out);
    if (*experiment) return Experiment(experiment_o);
    if (*generate) {
      for (const std::string& item : mix) {
        const size_t eq = item.find('=');
        if (eq == std::string::npos) {
          std::cerr << "--mix expects template=fraction, got " << item << "\n";
          return kUsage;
        }
        spec.mix.emplace_back(item.substr(0, eq), std::stod(item.substr(eq + 1)));
      }
      return Generate(spec, gen_out);
    }
  } catch (const CLI::RequiredError& e) {
    std::cerr << "error: " << e.what() << " is required\n";
    return kUsage;
  } catch (const rdnkbp::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const rdnkbp::TrainingError& e) {
    std::cerr << "training error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number in --mix\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  }
  return kUsage;
}
