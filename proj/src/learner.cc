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

#include "rdnkbp/learner.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "rdnkbp/error.h"
#include "rdnkbp/logging.h"
#include "rdnkbp/matcher.h"
#include "rdnkbp/numeric.h"
#include "rdnkbp/rng.h"
#include "text_util.h"

namespace rdnkbp {
namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kMinReduction = 1e-12;

struct TypedVar {
  Symbol var;
  std::string type;
};

// A test shape: literals over bound variables, fresh output variables (X*)
// and constant placeholders (K*) that are filled in from the data.
struct Template {
  Conjunction body;
  std::vector<Symbol> placeholders;
  Symbol numeric;  // output variable of a -num argument, if any
  std::vector<TypedVar> outputs;
  std::string key;
};

// Distinct placeholder assignments under which a template holds for one
// example, with the largest numeric value reached for each.
struct Row {
  std::vector<Symbol> constants;
  double max_value = 0;
};
using Rows = std::vector<Row>;

Symbol Var(char prefix, int n) {
  return Symbol::Intern(std::string(1, prefix) + std::to_string(n));
}

class TemplateGenerator {
 public:
  TemplateGenerator(const ModeSet& modes, const FactView& store,
                    int max_literals)
      : max_literals_(max_literals) {
    for (const ModeDecl& d : modes.decls()) {
      if (store.HasPredicate(d.predicate)) decls_.push_back(&d);
    }
  }

  std::vector<Template> Generate(const std::vector<TypedVar>& bound) {
    out_.clear();
    Template empty;
    Expand(bound, empty, 0);
    return std::move(out_);
  }

 private:
  void Expand(const std::vector<TypedVar>& bound, const Template& partial,
              int depth) {
    if (depth >= max_literals_ || partial.numeric.valid()) return;
    for (const ModeDecl* decl : decls_) {
      std::vector<std::vector<Symbol>> choices;
      bool feasible = true;
      for (const ModeArg& arg : decl->args) {
        if (arg.mode != ArgMode::kInput) continue;
        std::vector<Symbol> vars;
        for (const TypedVar& v : bound) {
          if (v.type == arg.type) vars.push_back(v.var);
        }
        for (const TypedVar& v : partial.outputs) {
          if (v.type == arg.type) vars.push_back(v.var);
        }
        if (vars.empty()) feasible = false;
        choices.push_back(std::move(vars));
      }
      if (!feasible) continue;
      std::vector<size_t> pick(choices.size(), 0);
      while (true) {
        TryLiteral(bound, partial, depth, *decl, choices, pick);
        size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < choices[i].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
      }
    }
  }

  void TryLiteral(const std::vector<TypedVar>& bound, const Template& partial,
                  int depth, const ModeDecl& decl,
                  const std::vector<std::vector<Symbol>>& choices,
                  const std::vector<size_t>& pick) {
    std::vector<Symbol> inputs;
    for (size_t i = 0; i < pick.size(); ++i) {
      const Symbol v = choices[i][pick[i]];
      if (std::find(inputs.begin(), inputs.end(), v) != inputs.end()) return;
      inputs.push_back(v);
    }
    // Later literals must consume a variable introduced earlier in the test.
    if (depth > 0) {
      const bool chained = std::any_of(
          inputs.begin(), inputs.end(), [&](Symbol v) {
            return std::any_of(partial.outputs.begin(), partial.outputs.end(),
                               [&](const TypedVar& o) { return o.var == v; });
          });
      if (!chained) return;
    }
    Template next = partial;
    Atom atom{decl.predicate, {}};
    size_t input = 0;
    for (const ModeArg& arg : decl.args) {
      switch (arg.mode) {
        case ArgMode::kInput:
          atom.args.push_back(Term::Variable(inputs[input++].str()));
          break;
        case ArgMode::kOutput: {
          const Symbol v = Var('X', static_cast<int>(next.outputs.size()) +
                                        (next.numeric.valid() ? 1 : 0) + 1);
          atom.args.push_back(Term::Variable(v.str()));
          if (arg.type == kNumericType) {
            next.numeric = v;
          } else {
            next.outputs.push_back({v, arg.type});
          }
          break;
        }
        case ArgMode::kConstant: {
          const Symbol k =
              Var('K', static_cast<int>(next.placeholders.size()) + 1);
          atom.args.push_back(Term::Variable(k.str()));
          next.placeholders.push_back(k);
          break;
        }
      }
    }
    Literal lit = Literal::Positive(std::move(atom));
    if (std::find(partial.body.begin(), partial.body.end(), lit) !=
        partial.body.end()) {
      return;
    }
    next.body.push_back(std::move(lit));
    next.key = ToString(next.body);
    out_.push_back(next);
    Expand(bound, next, depth + 1);
  }

  int max_literals_;
  std::vector<const ModeDecl*> decls_;
  std::vector<Template> out_;
};

class NumericCache {
 public:
  std::optional<double> Get(Symbol constant) {
    auto it = values_.find(constant);
    if (it != values_.end()) return it->second;
    const std::optional<double> v = NumericValue(Term::FromCanonical(constant));
    values_.emplace(constant, v);
    return v;
  }

 private:
  std::unordered_map<Symbol, std::optional<double>> values_;
};

Rows ComputeRows(const Conjunction& body, const Template& t,
                 const FactView& store, const Substitution& seed,
                 NumericCache& numbers) {
  Rows rows;
  if (t.placeholders.empty() && !t.numeric.valid()) {
    if (Exists(body, store, seed)) rows.push_back({});
    return rows;
  }
  std::map<std::vector<Symbol>, double> best;
  Satisfy(body, store, seed, [&](const Substitution& s) {
    std::vector<Symbol> key;
    key.reserve(t.placeholders.size());
    for (Symbol k : t.placeholders) key.push_back(s.Get(k));
    double value = 0;
    if (t.numeric.valid()) {
      const std::optional<double> v = numbers.Get(s.Get(t.numeric));
      if (!v) return true;
      value = *v;
    }
    auto [it, inserted] = best.emplace(std::move(key), value);
    if (!inserted) it->second = std::max(it->second, value);
    return true;
  });
  rows.reserve(best.size());
  for (auto& [constants, value] : best) rows.push_back({constants, value});
  return rows;
}

// Template rows per example, shared by all trees of one relation (the store
// and the example set stay fixed while boosting).
struct RowCache {
  std::unordered_map<std::string, std::vector<std::optional<Rows>>> rows;
  NumericCache numbers;
};

struct Split {
  double reduction = -1;
  std::string key;
  Conjunction test;  // instantiated, still with template variable names
  const Template* shape = nullptr;
  std::vector<char> truth;  // per node example
};

struct Sums {
  double sum = 0;
  int count = 0;
};

class TreeLearner {
 public:
  TreeLearner(const std::vector<Substitution>& seeds,
              const std::vector<double>& gradients, const FactView& store,
              const ModeSet& modes, const TrainConfig& config, RowCache& cache)
      : seeds_(seeds),
        gradients_(gradients),
        store_(store),
        config_(config),
        generator_(modes, store, config.max_literals_per_node),
        cache_(cache.rows),
        numbers_(cache.numbers) {}

  RegressionTree Learn() {
    RegressionTree tree;
    std::vector<int> all(seeds_.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    Grow(tree, all, {}, {}, 0);
    return tree;
  }

 private:
  int Grow(RegressionTree& tree, const std::vector<int>& examples,
           const Conjunction& path, const std::vector<TypedVar>& path_vars,
           int depth) {
    const int index = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    std::vector<double> g;
    g.reserve(examples.size());
    for (int e : examples) g.push_back(gradients_[e]);
    tree.nodes[index].value = LeafValue(g);

    const int min = std::max(1, config_.min_examples);
    if (depth >= config_.max_depth ||
        examples.size() < static_cast<size_t>(2 * min)) {
      return index;
    }
    std::optional<Split> best = BestSplit(examples, path, path_vars);
    if (!best || best->reduction <= kMinReduction) return index;

    // Give the test's fresh variables names unique along the path.
    std::vector<TypedVar> vars = path_vars;
    std::unordered_map<Symbol, Symbol> rename;
    int next = static_cast<int>(path_vars.size());
    for (const TypedVar& o : best->shape->outputs) {
      const Symbol v = Var('V', ++next);
      rename[o.var] = v;
      vars.push_back({v, o.type});
    }
    if (best->shape->numeric.valid()) {
      rename[best->shape->numeric] = Var('V', ++next);
    }
    Conjunction test = best->test;
    for (Literal& lit : test) {
      if (lit.kind == Literal::Kind::kAtLeast) {
        auto it = rename.find(lit.compared.symbol());
        if (it != rename.end()) lit.compared = Term::Variable(it->second.str());
        continue;
      }
      for (Term& t : lit.atom.args) {
        if (!t.is_variable()) continue;
        auto it = rename.find(t.symbol());
        if (it != rename.end()) t = Term::Variable(it->second.str());
      }
    }

    std::vector<int> yes, no;
    for (size_t i = 0; i < examples.size(); ++i) {
      (best->truth[i] ? yes : no).push_back(examples[i]);
    }
    Conjunction true_path = path;
    true_path.insert(true_path.end(), test.begin(), test.end());
    tree.nodes[index].test = std::move(test);
    const int t = Grow(tree, yes, true_path, vars, depth + 1);
    tree.nodes[index].true_child = t;
    const int f = Grow(tree, no, path, path_vars, depth + 1);
    tree.nodes[index].false_child = f;
    return index;
  }

  const Rows& CachedRows(const Template& t, int example) {
    std::vector<std::optional<Rows>>& slot = cache_[t.key];
    if (slot.empty()) slot.resize(seeds_.size());
    if (!slot[example]) {
      slot[example] = ComputeRows(t.body, t, store_, seeds_[example], numbers_);
    }
    return *slot[example];
  }

  std::optional<Split> BestSplit(const std::vector<int>& examples,
                                 const Conjunction& path,
                                 const std::vector<TypedVar>& path_vars) {
    std::vector<TypedVar> bound = {{TargetVariable(0), std::string(kMentionType)},
                                   {TargetVariable(1), std::string(kMentionType)}};
    bound.insert(bound.end(), path_vars.begin(), path_vars.end());
    std::unordered_set<Symbol> path_var_set;
    for (const TypedVar& v : path_vars) path_var_set.insert(v.var);

    Sums total;
    for (int e : examples) {
      total.sum += gradients_[e];
      ++total.count;
    }
    const double base = total.sum * total.sum / total.count;

    templates_ = generator_.Generate(bound);
    std::optional<Split> best;
    const int min = std::max(1, config_.min_examples);
    std::vector<Rows> local;
    for (const Template& t : templates_) {
      bool uses_path = false;
      for (const Literal& lit : t.body) {
        for (Symbol v : lit.Variables()) {
          if (path_var_set.count(v)) uses_path = true;
        }
      }
      // Rows for each node example. Tests that share no variable with the
      // path factor out of the path conjunction, so their rows are cached.
      local.assign(examples.size(), {});
      if (uses_path) {
        Conjunction body = path;
        body.insert(body.end(), t.body.begin(), t.body.end());
        for (size_t i = 0; i < examples.size(); ++i) {
          local[i] = ComputeRows(body, t, store_, seeds_[examples[i]], numbers_);
        }
      } else {
        for (size_t i = 0; i < examples.size(); ++i) {
          local[i] = CachedRows(t, examples[i]);
        }
      }

      // Group by placeholder assignment.
      std::map<std::vector<Symbol>, std::vector<std::pair<double, int>>> groups;
      for (size_t i = 0; i < examples.size(); ++i) {
        for (const Row& r : local[i]) {
          groups[r.constants].emplace_back(r.max_value, static_cast<int>(i));
        }
      }
      for (auto& [constants, members] : groups) {
        auto consider = [&](const Sums& yes, double threshold) {
          const int n_no = total.count - yes.count;
          if (yes.count < min || n_no < min) return;
          const double no_sum = total.sum - yes.sum;
          const double reduction = yes.sum * yes.sum / yes.count +
                                   no_sum * no_sum / n_no - base;
          if (best && reduction < best->reduction - kTieTolerance) return;
          Conjunction test = Instantiate(t, constants, threshold);
          std::string key = ToString(test);
          if (best && reduction <= best->reduction + kTieTolerance &&
              key >= best->key) {
            return;
          }
          Split s;
          s.reduction = reduction;
          s.key = std::move(key);
          s.test = std::move(test);
          s.shape = &t;
          s.truth.assign(examples.size(), 0);
          for (const auto& [value, i] : members) {
            if (!t.numeric.valid() || value >= threshold) s.truth[i] = 1;
          }
          best = std::move(s);
        };
        if (!t.numeric.valid()) {
          Sums yes;
          for (const auto& [value, i] : members) {
            yes.sum += gradients_[examples[i]];
            ++yes.count;
          }
          consider(yes, 0);
          continue;
        }
        std::sort(members.begin(), members.end(),
                  [](const auto& a, const auto& b) {
                    if (a.first != b.first) return a.first > b.first;
                    return a.second < b.second;
                  });
        Sums yes;
        for (size_t j = 0; j < members.size(); ++j) {
          yes.sum += gradients_[examples[members[j].second]];
          ++yes.count;
          if (j + 1 < members.size() && members[j + 1].first == members[j].first) {
            continue;
          }
          consider(yes, members[j].first);
        }
      }
    }
    return best;
  }

  static Conjunction Instantiate(const Template& t,
                                 const std::vector<Symbol>& constants,
                                 double threshold) {
    Conjunction test = t.body;
    for (Literal& lit : test) {
      for (Term& term : lit.atom.args) {
        if (!term.is_variable()) continue;
        for (size_t k = 0; k < t.placeholders.size(); ++k) {
          if (term.symbol() == t.placeholders[k]) {
            term = Term::FromCanonical(constants[k]);
            break;
          }
        }
      }
    }
    if (t.numeric.valid()) {
      test.push_back(Literal::AtLeast(Term::Variable(t.numeric.str()), threshold));
    }
    return test;
  }

  const std::vector<Substitution>& seeds_;
  const std::vector<double>& gradients_;
  const FactView& store_;
  const TrainConfig& config_;
  TemplateGenerator generator_;
  std::vector<Template> templates_;
  std::unordered_map<std::string, std::vector<std::optional<Rows>>>& cache_;
  NumericCache& numbers_;
};

double LogSigmoid(double x) {
  return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

Substitution SeedFor(const CandidatePair& pair) {
  return TargetSeed(MentionConstant(pair, true).symbol(),
                    MentionConstant(pair, false).symbol());
}

}  // namespace

std::string AdviceRule::ToString() const {
  return relation + " :: " +
         (polarity == AdvicePolarity::kPreferTrue ? "prefer-true"
                                                  : "prefer-false") +
         " :: " + rdnkbp::ToString(body);
}

std::vector<AdviceRule> ParseAdvice(std::string_view text,
                                    const RelationRegistry& registry) {
  std::vector<AdviceRule> rules;
  internal::ForEachContentLine(text, [&](size_t line_no, std::string_view line) {
    const std::string where = "advice line " + std::to_string(line_no) + ": ";
    const std::vector<std::string_view> parts =
        internal::SplitOutsideQuotes(line, "::");
    if (parts.size() != 3) {
      throw DataError(where + "expected 'relation :: polarity :: body'");
    }
    AdviceRule rule;
    rule.relation = std::string(internal::Trim(parts[0]));
    if (!registry.Find(rule.relation)) {
      throw DataError(where + "unknown relation " + rule.relation);
    }
    const std::string_view polarity = internal::Trim(parts[1]);
    if (polarity == "prefer-true") {
      rule.polarity = AdvicePolarity::kPreferTrue;
    } else if (polarity == "prefer-false") {
      rule.polarity = AdvicePolarity::kPreferFalse;
    } else {
      throw DataError(where + "polarity must be prefer-true or prefer-false");
    }
    try {
      rule.body = ParseConjunction(internal::Trim(parts[2]));
      if (rule.body.empty()) throw DataError("empty body");
      CheckSafety(rule.body, {TargetVariable(0), TargetVariable(1)});
    } catch (const DataError& e) {
      throw DataError(where + e.what());
    }
    rules.push_back(std::move(rule));
  });
  return rules;
}

std::vector<AdviceRule> LoadAdvice(const std::string& path,
                                   const RelationRegistry& registry) {
  try {
    return ParseAdvice(internal::ReadFile(path), registry);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::vector<LabeledExample> SampleNegatives(
    const std::vector<LabeledExample>& positives,
    const std::vector<CandidatePair>& candidates, double ratio, uint64_t seed) {
  std::unordered_set<std::string> excluded;
  for (const LabeledExample& p : positives) excluded.insert(p.pair.key());
  std::vector<const CandidatePair*> pool;
  for (const CandidatePair& c : candidates) {
    if (excluded.insert(c.key()).second) pool.push_back(&c);
  }
  const size_t wanted = static_cast<size_t>(
      std::llround(ratio * static_cast<double>(positives.size())));
  size_t take = wanted;
  if (pool.size() < wanted) {
    Warn("negative pool has " + std::to_string(pool.size()) +
         " candidates, fewer than the " + std::to_string(wanted) +
         " requested; using all of them");
    take = pool.size();
  }
  Rng rng(seed);
  for (size_t i = 0; i < take; ++i) {
    std::swap(pool[i], pool[i + rng.Below(pool.size() - i)]);
  }
  std::vector<LabeledExample> out;
  out.reserve(take);
  for (size_t i = 0; i < take; ++i) {
    out.push_back({*pool[i], false, Provenance::kSampledNegative, 1.0});
  }
  std::sort(out.begin(), out.end(),
            [](const LabeledExample& a, const LabeledExample& b) {
              return a.pair.key() < b.pair.key();
            });
  return out;
}

AdviceCounts CountAdvice(const CandidatePair& pair,
                         const std::vector<AdviceRule>& advice,
                         const FactView& store) {
  AdviceCounts counts;
  const Substitution seed = SeedFor(pair);
  for (const AdviceRule& rule : advice) {
    if (rule.relation != pair.relation) continue;
    if (!Exists(rule.body, store, seed)) continue;
    if (rule.polarity == AdvicePolarity::kPreferTrue) {
      ++counts.prefer_true;
    } else {
      ++counts.prefer_false;
    }
  }
  return counts;
}

double CombineGradient(bool positive, double psi, const AdviceCounts& counts,
                       bool has_advice, double alpha) {
  const double data = (positive ? 1.0 : 0.0) - Sigmoid(psi);
  if (!has_advice || alpha == 1.0) return data;
  const double advice = std::clamp(
      static_cast<double>(counts.prefer_true - counts.prefer_false), -1.0, 1.0);
  return alpha * data + (1.0 - alpha) * advice;
}

double Gradient(const LabeledExample& example, const BoostedModel& model,
                const std::vector<AdviceRule>& advice, double alpha,
                const FactView& store) {
  const bool has_advice = std::any_of(
      advice.begin(), advice.end(),
      [&](const AdviceRule& r) { return r.relation == example.pair.relation; });
  const double psi =
      model.Potential(store, MentionConstant(example.pair, true).symbol(),
                      MentionConstant(example.pair, false).symbol());
  const AdviceCounts counts =
      has_advice ? CountAdvice(example.pair, advice, store) : AdviceCounts{};
  return CombineGradient(example.positive, psi, counts, has_advice, alpha);
}

double LeafValue(const std::vector<double>& gradients) {
  if (gradients.empty()) return 0;
  double sum = 0, denom = 0;
  for (double g : gradients) {
    sum += g;
    denom += std::abs(g) * (1.0 - std::abs(g));
  }
  if (denom < 1e-8) return sum / static_cast<double>(gradients.size());
  return sum / denom;
}

RegressionTree LearnTree(const std::vector<Substitution>& seeds,
                         const std::vector<double>& gradients,
                         const FactView& store, const ModeSet& modes,
                         const TrainConfig& config) {
  if (seeds.empty() || seeds.size() != gradients.size()) {
    throw TrainingError("LearnTree needs one gradient per example");
  }
  RowCache cache;
  return TreeLearner(seeds, gradients, store, modes, config, cache).Learn();
}

BoostResult BoostRelation(const std::string& relation,
                          const std::vector<LabeledExample>& examples,
                          const FactView& store,
                          const std::vector<AdviceRule>& advice,
                          const ModeSet& modes, const TrainConfig& config) {
  config.Validate();
  size_t positives = 0;
  for (const LabeledExample& e : examples) positives += e.positive ? 1 : 0;
  if (examples.empty()) {
    throw TrainingError(relation + ": no training examples");
  }
  if (positives == 0 || positives == examples.size()) {
    throw TrainingError(relation + ": training set has a single class (" +
                        std::string(positives ? "all positive" : "all negative") +
                        ")");
  }
  const ModeSet usable = modes.Without(RelationRegistry::PredicateFor(relation));

  const size_t n = examples.size();
  std::vector<Substitution> seeds;
  seeds.reserve(n);
  for (const LabeledExample& e : examples) seeds.push_back(SeedFor(e.pair));
  const bool has_advice =
      std::any_of(advice.begin(), advice.end(),
                  [&](const AdviceRule& r) { return r.relation == relation; });
  std::vector<AdviceCounts> counts(n);
  if (has_advice) {
    for (size_t i = 0; i < n; ++i) {
      counts[i] = CountAdvice(examples[i].pair, advice, store);
    }
  }

  BoostResult result;
  result.model.relation = relation;
  result.model.psi0 = 0;
  result.model.config = config;
  std::vector<double> psi(n, result.model.psi0);
  auto record = [&] {
    IterationStats stats;
    double prob_sum = 0;
    for (size_t i = 0; i < n; ++i) {
      stats.loss -= examples[i].positive ? LogSigmoid(psi[i]) : LogSigmoid(-psi[i]);
      if (examples[i].positive) prob_sum += Sigmoid(psi[i]);
    }
    stats.loss /= static_cast<double>(n);
    stats.mean_positive_probability = prob_sum / static_cast<double>(positives);
    result.trace.push_back(stats);
  };
  record();

  std::vector<double> gradients(n);
  RowCache cache;
  for (int k = 0; k < config.n_trees; ++k) {
    for (size_t i = 0; i < n; ++i) {
      gradients[i] = CombineGradient(examples[i].positive, psi[i], counts[i],
                                     has_advice, config.alpha);
    }
    RegressionTree tree =
        TreeLearner(seeds, gradients, store, usable, config, cache).Learn();
    for (size_t i = 0; i < n; ++i) psi[i] += tree.Evaluate(store, seeds[i]);
    result.model.trees.push_back(std::move(tree));
    record();
  }
  return result;
}

std::vector<Fact> PositiveTargetFacts(
    const std::map<std::string, std::vector<LabeledExample>>& examples,
    const RelationRegistry& registry) {
  std::vector<Fact> facts;
  for (const auto& [relation, list] : examples) {
    if (!registry.Find(relation)) continue;
    for (const LabeledExample& e : list) {
      if (e.positive) facts.push_back(e.pair.TargetAtom(registry));
    }
  }
  return facts;
}

std::map<std::string, BoostedModel> Train(
    const std::vector<std::string>& relations,
    const std::map<std::string, std::vector<LabeledExample>>& examples,
    const FactView& store, const std::vector<AdviceRule>& advice,
    const ModeSet& base_modes, const RelationRegistry& registry,
    const TrainConfig& config) {
  OverlayView world(store);
  if (config.joint) {
    for (const Fact& f : PositiveTargetFacts(examples, registry)) {
      world.SetActive(world.AddFact(f), true);
    }
  }
  std::map<std::string, BoostedModel> models;
  for (const std::string& relation : relations) {
    registry.Get(relation);
    auto it = examples.find(relation);
    static const std::vector<LabeledExample> kNone;
    const ModeSet modes =
        LearnerModes(base_modes, registry, relation, config.joint);
    models[relation] =
        BoostRelation(relation, it == examples.end() ? kNone : it->second,
                      world, advice, modes, config)
            .model;
  }
  return models;
}

}  // namespace rdnkbp
