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

#ifndef RDNKBP_MODES_H_
#define RDNKBP_MODES_H_

#include <string>
#include <string_view>
#include <vector>

#include "rdnkbp/featurizer.h"
#include "rdnkbp/symbol.h"

namespace rdnkbp {

// Mode declarations bound the literals the tree learner may put in a test:
//   +type  argument must be a variable already bound on the path
//   -type  argument introduces a fresh variable
//   #type  argument is a constant observed in the data
// A `-num` argument introduces a numeric variable that is thresholded with
// `V >= value` in the same test.
enum class ArgMode { kInput, kOutput, kConstant };

struct ModeArg {
  ArgMode mode = ArgMode::kInput;
  std::string type;
};

struct ModeDecl {
  Symbol predicate;
  std::vector<ModeArg> args;

  bool numeric() const;
  std::string ToString() const;
};

// Type of the two target arguments.
inline constexpr std::string_view kMentionType = "mention";
inline constexpr std::string_view kNumericType = "num";

class ModeSet {
 public:
  // One declaration per line, e.g. `lemmaBetween(+mention,+mention,#lemma).`
  static ModeSet Parse(std::string_view text);
  // Modes over the featurizer vocabulary; adds similarWords when requested.
  static ModeSet Default(bool word2vec);

  void Add(ModeDecl decl);
  // Declaration `predicate(+mention,+mention)` for a target relation.
  void AddTarget(Symbol predicate);
  ModeSet Without(Symbol predicate) const;
  bool Uses(Symbol predicate) const;

  const std::vector<ModeDecl>& decls() const { return decls_; }
  std::string ToString() const;

 private:
  std::vector<ModeDecl> decls_;
};

// Modes the learner may use for `relation`: `base`, never the relation's own
// predicate, and the other registry relations only when `joint` is set.
ModeSet LearnerModes(const ModeSet& base, const RelationRegistry& registry,
                     const std::string& relation, bool joint);

}  // namespace rdnkbp

#endif  // RDNKBP_MODES_H_
