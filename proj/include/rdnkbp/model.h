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

#ifndef RDNKBP_MODEL_H_
#define RDNKBP_MODEL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rdnkbp/fact_store.h"
#include "rdnkbp/logic.h"
#include "rdnkbp/matcher.h"

namespace rdnkbp {

struct TrainConfig {
  int n_trees = 20;
  int max_depth = 3;
  int max_literals_per_node = 2;
  int min_examples = 2;
  double neg_pos_ratio = 2.0;
  // Weight of the data gradient against the advice gradient.
  double alpha = 0.5;
  uint64_t rng_seed = 0;
  bool joint = false;

  // Throws DataError when a field is out of range.
  void Validate() const;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

// Names of the variables bound to a candidate's two mentions in tree tests,
// advice bodies and the potential evaluation.
Symbol TargetVariable(int index);  // 0 -> A, 1 -> B
Substitution TargetSeed(Symbol arg1, Symbol arg2);

// Relational regression tree stored as a node array; node 0 is the root.
// An internal node's test is evaluated together with the tests of its
// true-branch ancestors: the example goes right (true_child) iff the whole
// conjunction is satisfiable with A and B bound to its mentions.
struct TreeNode {
  Conjunction test;
  int true_child = -1;
  int false_child = -1;
  double value = 0;  // leaves only

  bool leaf() const { return true_child < 0; }
};

struct RegressionTree {
  std::vector<TreeNode> nodes;

  // Value of the leaf the example reaches.
  double Evaluate(const FactView& store, const Substitution& seed) const;
  int Depth() const;
  // Predicates appearing in any test.
  std::vector<Symbol> Predicates() const;
};

// Additive ensemble for one target relation: potential = psi0 + sum of tree
// values; P(relation holds) = sigmoid(potential).
struct BoostedModel {
  std::string relation;
  double psi0 = 0;
  std::vector<RegressionTree> trees;
  TrainConfig config;

  double Potential(const FactView& store, Symbol arg1, Symbol arg2) const;
  bool UsesPredicate(Symbol predicate) const;

  // Versioned text format; doubles are written in shortest round-trip form,
  // so Parse(Serialize()) reproduces the model exactly.
  std::string Serialize() const;
  static BoostedModel Parse(std::string_view text);
  static BoostedModel Load(const std::string& path);
};

}  // namespace rdnkbp

#endif  // RDNKBP_MODEL_H_
