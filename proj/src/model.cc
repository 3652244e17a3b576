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

#include "rdnkbp/model.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "rdnkbp/error.h"
#include "rdnkbp/rng.h"
#include "text_util.h"

namespace rdnkbp {
namespace {

constexpr std::string_view kMagic = "rdnkbp-model";
constexpr int kVersion = 1;

double ParseDoubleField(std::string_view s, std::string_view what) {
  double v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DataError("model: bad " + std::string(what) + " '" + std::string(s) +
                    "'");
  }
  return v;
}

int64_t ParseIntField(std::string_view s, std::string_view what) {
  int64_t v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DataError("model: bad " + std::string(what) + " '" + std::string(s) +
                    "'");
  }
  return v;
}

uint64_t ParseUintField(std::string_view s, std::string_view what) {
  uint64_t v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DataError("model: bad " + std::string(what) + " '" + std::string(s) +
                    "'");
  }
  return v;
}

std::string ConfigLine(const TrainConfig& c) {
  std::string out = "config";
  out += " n_trees=" + std::to_string(c.n_trees);
  out += " max_depth=" + std::to_string(c.max_depth);
  out += " max_literals_per_node=" + std::to_string(c.max_literals_per_node);
  out += " min_examples=" + std::to_string(c.min_examples);
  out += " neg_pos_ratio=" + FormatNumber(c.neg_pos_ratio);
  out += " alpha=" + FormatNumber(c.alpha);
  out += std::string(" joint=") + (c.joint ? "1" : "0");
  return out;
}

void ParseConfigField(TrainConfig& c, std::string_view field) {
  const size_t eq = field.find('=');
  if (eq == std::string_view::npos) {
    throw DataError("model: bad config field '" + std::string(field) + "'");
  }
  const std::string_view key = field.substr(0, eq);
  const std::string_view value = field.substr(eq + 1);
  if (key == "n_trees") {
    c.n_trees = static_cast<int>(ParseIntField(value, key));
  } else if (key == "max_depth") {
    c.max_depth = static_cast<int>(ParseIntField(value, key));
  } else if (key == "max_literals_per_node") {
    c.max_literals_per_node = static_cast<int>(ParseIntField(value, key));
  } else if (key == "min_examples") {
    c.min_examples = static_cast<int>(ParseIntField(value, key));
  } else if (key == "neg_pos_ratio") {
    c.neg_pos_ratio = ParseDoubleField(value, key);
  } else if (key == "alpha") {
    c.alpha = ParseDoubleField(value, key);
  } else if (key == "joint") {
    c.joint = ParseIntField(value, key) != 0;
  } else {
    throw DataError("model: unknown config field '" + std::string(key) + "'");
  }
}

// Splits "keyword rest-of-line".
std::pair<std::string_view, std::string_view> Keyword(std::string_view line) {
  const size_t space = line.find(' ');
  if (space == std::string_view::npos) return {line, {}};
  return {line.substr(0, space), internal::Trim(line.substr(space + 1))};
}

class ModelReader {
 public:
  explicit ModelReader(std::string_view text) {
    size_t start = 0;
    while (start < text.size()) {
      size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view line = internal::Trim(text.substr(start, end - start));
      if (!line.empty()) lines_.push_back(line);
      start = end + 1;
    }
  }

  std::string_view Next(std::string_view expected_keyword) {
    if (pos_ >= lines_.size()) {
      throw DataError("model: unexpected end, expected '" +
                      std::string(expected_keyword) + "'");
    }
    auto [kw, rest] = Keyword(lines_[pos_]);
    if (kw != expected_keyword) {
      throw DataError("model: line " + std::to_string(pos_ + 1) +
                      ": expected '" + std::string(expected_keyword) +
                      "', got '" + std::string(kw) + "'");
    }
    ++pos_;
    return rest;
  }

  std::string_view PeekKeyword() const {
    if (pos_ >= lines_.size()) return {};
    return Keyword(lines_[pos_]).first;
  }

  int ReadSubtree(RegressionTree& tree) {
    const int index = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    if (PeekKeyword() == "leaf") {
      tree.nodes[index].value = ParseDoubleField(Next("leaf"), "leaf value");
      return index;
    }
    Conjunction test = ParseConjunction(Next("test"));
    if (test.empty()) throw DataError("model: empty test");
    tree.nodes[index].test = std::move(test);
    const int t = ReadSubtree(tree);
    tree.nodes[index].true_child = t;
    const int f = ReadSubtree(tree);
    tree.nodes[index].false_child = f;
    return index;
  }

  bool done() const { return pos_ >= lines_.size(); }

 private:
  std::vector<std::string_view> lines_;
  size_t pos_ = 0;
};

void WriteSubtree(const RegressionTree& tree, int index, std::string& out) {
  const TreeNode& node = tree.nodes[index];
  if (node.leaf()) {
    out += "leaf " + FormatNumber(node.value) + "\n";
    return;
  }
  out += "test " + ToString(node.test) + "\n";
  WriteSubtree(tree, node.true_child, out);
  WriteSubtree(tree, node.false_child, out);
}

}  // namespace

void TrainConfig::Validate() const {
  if (n_trees < 1) throw DataError("n_trees must be >= 1");
  if (max_depth < 0) throw DataError("max_depth must be >= 0");
  if (max_literals_per_node < 1) {
    throw DataError("max_literals_per_node must be >= 1");
  }
  if (min_examples < 1) throw DataError("min_examples must be >= 1");
  if (!(neg_pos_ratio > 0)) throw DataError("neg_pos_ratio must be > 0");
  if (!(alpha >= 0 && alpha <= 1)) throw DataError("alpha must be in [0, 1]");
}

Symbol TargetVariable(int index) {
  static const Symbol a = Symbol::Intern("A");
  static const Symbol b = Symbol::Intern("B");
  return index == 0 ? a : b;
}

Substitution TargetSeed(Symbol arg1, Symbol arg2) {
  Substitution seed;
  seed.Bind(TargetVariable(0), arg1);
  seed.Bind(TargetVariable(1), arg2);
  return seed;
}

double RegressionTree::Evaluate(const FactView& store,
                                const Substitution& seed) const {
  Conjunction path;
  int index = 0;
  while (!nodes[index].leaf()) {
    const TreeNode& node = nodes[index];
    const size_t mark = path.size();
    path.insert(path.end(), node.test.begin(), node.test.end());
    if (Exists(path, store, seed)) {
      index = node.true_child;
    } else {
      path.resize(mark);
      index = node.false_child;
    }
  }
  return nodes[index].value;
}

int RegressionTree::Depth() const {
  std::function<int(int)> depth = [&](int i) -> int {
    if (nodes[i].leaf()) return 0;
    return 1 + std::max(depth(nodes[i].true_child), depth(nodes[i].false_child));
  };
  return nodes.empty() ? 0 : depth(0);
}

std::vector<Symbol> RegressionTree::Predicates() const {
  std::vector<Symbol> out;
  for (const TreeNode& node : nodes) {
    for (const Literal& lit : node.test) {
      if (lit.kind != Literal::Kind::kAtom) continue;
      if (std::find(out.begin(), out.end(), lit.atom.predicate) == out.end()) {
        out.push_back(lit.atom.predicate);
      }
    }
  }
  return out;
}

double BoostedModel::Potential(const FactView& store, Symbol arg1,
                               Symbol arg2) const {
  const Substitution seed = TargetSeed(arg1, arg2);
  double psi = psi0;
  for (const RegressionTree& tree : trees) psi += tree.Evaluate(store, seed);
  return psi;
}

bool BoostedModel::UsesPredicate(Symbol predicate) const {
  for (const RegressionTree& tree : trees) {
    const std::vector<Symbol> preds = tree.Predicates();
    if (std::find(preds.begin(), preds.end(), predicate) != preds.end()) {
      return true;
    }
  }
  return false;
}

std::string BoostedModel::Serialize() const {
  std::string out;
  out += std::string(kMagic) + " " + std::to_string(kVersion) + "\n";
  out += "relation " + relation + "\n";
  out += "psi0 " + FormatNumber(psi0) + "\n";
  out += "rng " + std::string(Rng::kName) + " " +
         std::to_string(config.rng_seed) + "\n";
  out += ConfigLine(config) + "\n";
  out += "trees " + std::to_string(trees.size()) + "\n";
  for (size_t i = 0; i < trees.size(); ++i) {
    out += "tree " + std::to_string(i) + "\n";
    WriteSubtree(trees[i], 0, out);
  }
  out += "end\n";
  return out;
}

BoostedModel BoostedModel::Parse(std::string_view text) {
  ModelReader reader(text);
  BoostedModel model;
  const std::string_view version = reader.Next(kMagic);
  if (ParseIntField(version, "version") != kVersion) {
    throw DataError("model: unsupported version " + std::string(version));
  }
  model.relation = std::string(reader.Next("relation"));
  model.psi0 = ParseDoubleField(reader.Next("psi0"), "psi0");
  {
    auto [name, seed] = Keyword(reader.Next("rng"));
    if (name != Rng::kName) {
      throw DataError("model: unknown generator " + std::string(name));
    }
    model.config.rng_seed = ParseUintField(seed, "rng seed");
  }
  std::string_view config = reader.Next("config");
  while (!config.empty()) {
    auto [field, rest] = Keyword(config);
    ParseConfigField(model.config, field);
    config = rest;
  }
  const int64_t n = ParseIntField(reader.Next("trees"), "tree count");
  for (int64_t i = 0; i < n; ++i) {
    if (ParseIntField(reader.Next("tree"), "tree index") != i) {
      throw DataError("model: trees out of order");
    }
    RegressionTree tree;
    reader.ReadSubtree(tree);
    model.trees.push_back(std::move(tree));
  }
  reader.Next("end");
  if (!reader.done()) throw DataError("model: trailing content after 'end'");
  return model;
}

BoostedModel BoostedModel::Load(const std::string& path) {
  try {
    return Parse(internal::ReadFile(path));
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace rdnkbp
