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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "rdnkbp/document.h"
#include "rdnkbp/error.h"
#include "rdnkbp/evaluation.h"
#include "rdnkbp/fact_store.h"
#include "rdnkbp/featurizer.h"
#include "rdnkbp/logic.h"
#include "rdnkbp/pipeline.h"
#include "rdnkbp/synthetic.h"

namespace py = pybind11;

namespace {

rdnkbp::ScoredSet ToSet(const std::vector<double>& scores,
                        const std::vector<bool>& labels) {
  if (scores.size() != labels.size()) {
    throw py::value_error("scores and labels differ in length");
  }
  rdnkbp::ScoredSet set;
  for (size_t i = 0; i < scores.size(); ++i) set.push_back({scores[i], labels[i]});
  return set;
}

py::tuple GoldTuple(const rdnkbp::CandidatePair& c) {
  return py::make_tuple(c.relation, c.doc_id, c.sent_id, c.arg1, c.arg2);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Relation extraction with boosted relational dependency networks";

  py::register_exception<rdnkbp::DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<rdnkbp::TrainingError>(m, "TrainingError",
                                                PyExc_RuntimeError);

  m.def("canonical_fact",
        [](const std::string& text) { return rdnkbp::ParseFact(text).ToString(); },
        py::arg("text"));
  m.def("canonical_clause",
        [](const std::string& text) { return rdnkbp::ParseClause(text).ToString(); },
        py::arg("text"));

  m.def("featurize",
        [](const std::string& json_line) {
          const rdnkbp::AnnotatedDocument doc = rdnkbp::ParseDocument(json_line);
          std::vector<std::string> out;
          for (const rdnkbp::Fact& f : rdnkbp::FeaturizeDocument(doc)) {
            out.push_back(f.ToString());
          }
          return out;
        },
        py::arg("document_json"), "Facts of one annotated document, canonical form.");

  m.def("candidate_pairs",
        [](const std::string& json_line, std::vector<std::string> relations) {
          const rdnkbp::AnnotatedDocument doc = rdnkbp::ParseDocument(json_line);
          std::vector<py::tuple> out;
          for (const rdnkbp::CandidatePair& c : rdnkbp::CandidatePairs(
                   doc, rdnkbp::RelationRegistry::Kbp(), relations)) {
            out.push_back(GoldTuple(c));
          }
          return out;
        },
        py::arg("document_json"), py::arg("relations") = std::vector<std::string>{});

  m.def("generate",
        [](int n_sentences, std::vector<std::pair<std::string, double>> mix,
           double noise, uint64_t seed, const std::string& prefix) {
          rdnkbp::GeneratorSpec spec;
          spec.n_sentences = n_sentences;
          spec.mix = std::move(mix);
          spec.noise = noise;
          spec.seed = seed;
          spec.doc_prefix = prefix;
          const rdnkbp::SyntheticCorpus corpus = rdnkbp::Generate(spec);
          std::vector<std::string> docs;
          for (const auto& d : corpus.documents) docs.push_back(rdnkbp::DocumentToJson(d));
          std::vector<py::tuple> gold;
          for (const auto& g : corpus.gold) gold.push_back(GoldTuple(g));
          return py::make_tuple(docs, gold);
        },
        py::arg("n_sentences"), py::arg("mix"), py::arg("noise") = 0.0,
        py::arg("seed") = 0, py::arg("prefix") = "syn",
        "Synthetic corpus as (document JSON lines, gold tuples).");
  m.def("template_names", [] { return rdnkbp::SyntheticTemplateNames(); });

  m.def("auc_roc",
        [](const std::vector<double>& s, const std::vector<bool>& l) {
          return rdnkbp::AucRoc(ToSet(s, l));
        },
        py::arg("scores"), py::arg("labels"));
  m.def("f1",
        [](const std::vector<double>& s, const std::vector<bool>& l, double t) {
          return rdnkbp::F1(ToSet(s, l), t);
        },
        py::arg("scores"), py::arg("labels"), py::arg("threshold") = 0.5);
  m.def("recall_at_precision",
        [](const std::vector<double>& s, const std::vector<bool>& l, double p) {
          return rdnkbp::RecallAtPrecision(ToSet(s, l), p);
        },
        py::arg("scores"), py::arg("labels"), py::arg("p_min"));

  m.def("run_experiment",
        [](const std::string& config_path) {
          const rdnkbp::ExperimentConfig c = rdnkbp::ExperimentConfig::Load(config_path);
          rdnkbp::ExperimentReport report;
          {
            py::gil_scoped_release release;
            report = rdnkbp::RunExperiment(c, rdnkbp::LoadInputs(c));
          }
          return py::make_tuple(report.ToTsv(), report.log);
        },
        py::arg("config_path"), "Report TSV and run log of an experiment config.");
  m.def("setting_name", [](const std::string& config_path) {
    return rdnkbp::ExperimentConfig::Load(config_path).SettingName();
  });
}
