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

#include "rdnkbp/inference.h"

#include <charconv>
#include <sstream>
#include <unordered_map>

#include "rdnkbp/error.h"
#include "rdnkbp/logging.h"
#include "rdnkbp/numeric.h"
#include "rdnkbp/rng.h"

namespace rdnkbp {
namespace {

const BoostedModel& ModelFor(const ModelMap& models, const CandidatePair& c) {
  auto it = models.find(c.relation);
  if (it == models.end()) {
    throw DataError("no model for relation " + c.relation);
  }
  return it->second;
}

// Target predicates of other relations that a model tests.
std::vector<Symbol> CrossPredicates(const BoostedModel& model,
                                    const RelationRegistry& registry) {
  std::vector<Symbol> out;
  const Symbol own = RelationRegistry::PredicateFor(model.relation);
  for (const RelationSignature& r : registry.relations()) {
    if (r.predicate != own && model.UsesPredicate(r.predicate)) {
      out.push_back(r.predicate);
    }
  }
  return out;
}

// True when every target literal in the model's tests is over A and B only,
// so its potential depends on target atoms of its own sentence alone.
bool SentenceLocal(const BoostedModel& model, const RelationRegistry& registry) {
  const Symbol a = TargetVariable(0), b = TargetVariable(1);
  for (const RegressionTree& tree : model.trees) {
    for (const TreeNode& node : tree.nodes) {
      for (const Literal& lit : node.test) {
        if (lit.kind != Literal::Kind::kAtom) continue;
        if (!registry.FindByPredicate(lit.atom.predicate)) continue;
        for (const Term& t : lit.atom.args) {
          if (!t.is_variable() || (t.symbol() != a && t.symbol() != b)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos
                                            ? std::string_view::npos
                                            : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

}  // namespace

double Potential(const BoostedModel& model, const CandidatePair& candidate,
                 const FactView& store) {
  return model.Potential(store, MentionConstant(candidate, true).symbol(),
                         MentionConstant(candidate, false).symbol());
}

std::vector<Prediction> PredictIndependent(
    const ModelMap& models, const std::vector<CandidatePair>& candidates,
    const FactView& store, const RelationRegistry& registry) {
  for (const auto& [relation, model] : models) {
    for (Symbol p : CrossPredicates(model, registry)) {
      WarnOnce("independent:" + relation + ":" + std::string(p.str()),
               "model for " + relation + " tests target predicate " +
                   std::string(p.str()) +
                   ", which is absent from the evidence; use Gibbs inference");
    }
  }
  std::vector<Prediction> out;
  out.reserve(candidates.size());
  for (const CandidatePair& c : candidates) {
    const double psi = Potential(ModelFor(models, c), c, store);
    out.push_back({c, Sigmoid(psi), psi});
  }
  return out;
}

void GibbsConfig::Validate() const {
  if (burn_in < 0) throw DataError("burn_in must be >= 0");
  if (samples < 1) throw DataError("samples must be >= 1");
}

std::vector<Prediction> GibbsInfer(const ModelMap& models,
                                   const std::vector<CandidatePair>& candidates,
                                   const FactView& store,
                                   const RelationRegistry& registry,
                                   const GibbsConfig& config) {
  config.Validate();
  const size_t n = candidates.size();
  std::vector<Prediction> out;
  out.reserve(n);
  if (n == 0) return out;

  std::unordered_map<std::string, bool> local_model;
  for (const auto& [relation, model] : models) {
    local_model[relation] = SentenceLocal(model, registry);
  }

  OverlayView world(store);
  std::vector<uint32_t> handle(n);
  std::vector<const BoostedModel*> model(n);
  std::vector<Symbol> arg1(n), arg2(n);
  for (size_t i = 0; i < n; ++i) {
    model[i] = &ModelFor(models, candidates[i]);
    handle[i] = world.AddFact(candidates[i].TargetAtom(registry));
    arg1[i] = MentionConstant(candidates[i], true).symbol();
    arg2[i] = MentionConstant(candidates[i], false).symbol();
  }

  // Atoms of the same sentence, for the potential cache. A candidate's
  // potential is memoized on the truth values of its sentence's atoms.
  std::map<std::pair<std::string, std::string>, std::vector<size_t>> sentences;
  for (size_t i = 0; i < n; ++i) {
    sentences[{candidates[i].doc_id, candidates[i].sent_id}].push_back(i);
  }
  std::vector<const std::vector<size_t>*> neighbours(n);
  for (const auto& [key, members] : sentences) {
    for (size_t i : members) neighbours[i] = &members;
  }
  std::vector<bool> cacheable(n);
  for (size_t i = 0; i < n; ++i) {
    cacheable[i] = local_model[candidates[i].relation] && neighbours[i]->size() <= 64;
  }
  std::vector<std::unordered_map<uint64_t, double>> memo(n);

  std::vector<char> state(n);
  for (size_t i = 0; i < n; ++i) {
    const double psi = model[i]->Potential(store, arg1[i], arg2[i]);
    out.push_back({candidates[i], 0, psi});
    state[i] = Sigmoid(psi) >= 0.5;
  }
  for (size_t i = 0; i < n; ++i) world.SetActive(handle[i], state[i]);

  Rng rng(config.seed);
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  rng.Shuffle(order);

  auto potential = [&](size_t i) {
    if (!cacheable[i]) return model[i]->Potential(world, arg1[i], arg2[i]);
    uint64_t mask = 0;
    const std::vector<size_t>& group = *neighbours[i];
    for (size_t j = 0; j < group.size(); ++j) {
      if (group[j] != i && state[group[j]]) mask |= uint64_t{1} << j;
    }
    auto [it, inserted] = memo[i].try_emplace(mask, 0.0);
    if (inserted) it->second = model[i]->Potential(world, arg1[i], arg2[i]);
    return it->second;
  };

  std::vector<int> counts(n, 0);
  const int sweeps = config.burn_in + config.samples;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (size_t i : order) {
      world.SetActive(handle[i], false);
      const double p = Sigmoid(potential(i));
      state[i] = rng.Uniform() < p;
      world.SetActive(handle[i], state[i]);
    }
    if (sweep >= config.burn_in) {
      for (size_t i = 0; i < n; ++i) counts[i] += state[i];
    }
  }
  for (size_t i = 0; i < n; ++i) {
    out[i].probability =
        static_cast<double>(counts[i]) / static_cast<double>(config.samples);
  }
  return out;
}

std::string FormatPredictions(const std::vector<Prediction>& predictions) {
  std::string out;
  for (const Prediction& p : predictions) {
    const CandidatePair& c = p.candidate;
    out += c.relation + "\t" + c.doc_id + "\t" + c.sent_id + "\t" + c.arg1 +
           "\t" + c.arg2 + "\t" + FormatNumber(p.probability) + "\n";
  }
  return out;
}

std::vector<Prediction> ParsePredictions(std::string_view text) {
  std::vector<Prediction> out;
  size_t line_no = 0, start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 6) {
      throw DataError("prediction line " + std::to_string(line_no) +
                      ": expected 6 tab-separated fields");
    }
    double p = 0;
    auto [ptr, ec] = std::from_chars(f[5].data(), f[5].data() + f[5].size(), p);
    if (ec != std::errc() || ptr != f[5].data() + f[5].size() || p < 0 || p > 1) {
      throw DataError("prediction line " + std::to_string(line_no) +
                      ": bad probability '" + f[5] + "'");
    }
    out.push_back({{f[0], f[1], f[2], f[3], f[4]}, p, 0});
  }
  return out;
}

}  // namespace rdnkbp
