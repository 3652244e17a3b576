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

#include "rdnkbp/modes.h"

#include <algorithm>

#include "rdnkbp/error.h"
#include "rdnkbp/logic.h"
#include "text_util.h"

namespace rdnkbp {
namespace {

constexpr std::string_view kDefaultModes = R"(
entityType(+mention,#etype).
lemmaBetween(+mention,+mention,#lemma).
posBetween(+mention,+mention,#pos).
neBetween(+mention,+mention).
rootLemma(+mention,+mention,#lemma).
rootPOS(+mention,+mention,#pos).
rootNER(+mention,+mention).
rootChildLemma(+mention,+mention,#lemma).
rootChildPOS(+mention,+mention,#pos).
rootChildNER(+mention,+mention).
nextLemma(+mention,#lemma).
prevLemma(+mention,#lemma).
mentionHead(+mention,-token).
nextWord(+mention,-token).
nextWord(-token,+mention).
wordString(+token,#word).
wordLemma(+token,#lemma).
isNEWord(+token).
nextPOS(+token,#pos,#pos).
prevPOS(+token,#pos,#pos).
nextLemmas(+token,#lemma,#lemma).
prevLemmas(+token,#lemma,#lemma).
)";

constexpr std::string_view kSimilarityModes = R"(
lemmaBetween(+mention,+mention,-lemma).
similarWords(#lemma,+lemma,-num).
)";

ModeDecl ParseDecl(std::string_view line) {
  const size_t open = line.find('(');
  const size_t close = line.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close < open) {
    throw DataError("mode declaration must look like pred(+type,...)");
  }
  const std::string_view name = internal::Trim(line.substr(0, open));
  if (!IsPredicateName(name)) {
    throw DataError("bad predicate name in mode declaration");
  }
  std::string_view rest = internal::Trim(line.substr(close + 1));
  if (!rest.empty() && rest != ".") {
    throw DataError("trailing input after mode declaration");
  }
  ModeDecl decl{Symbol::Intern(name), {}};
  const std::string_view inner = line.substr(open + 1, close - open - 1);
  size_t start = 0;
  while (start <= inner.size()) {
    size_t comma = inner.find(',', start);
    if (comma == std::string_view::npos) comma = inner.size();
    const std::string_view arg = internal::Trim(inner.substr(start, comma - start));
    start = comma + 1;
    if (arg.size() < 2) throw DataError("empty mode argument");
    ModeArg a;
    switch (arg[0]) {
      case '+':
        a.mode = ArgMode::kInput;
        break;
      case '-':
        a.mode = ArgMode::kOutput;
        break;
      case '#':
        a.mode = ArgMode::kConstant;
        break;
      default:
        throw DataError("mode argument must start with +, - or #");
    }
    a.type = std::string(arg.substr(1));
    decl.args.push_back(std::move(a));
  }
  const bool has_input = std::any_of(decl.args.begin(), decl.args.end(),
                                     [](const ModeArg& a) {
                                       return a.mode == ArgMode::kInput;
                                     });
  if (!has_input) {
    throw DataError("mode declaration needs at least one + argument");
  }
  for (const ModeArg& a : decl.args) {
    if (a.type == kNumericType && a.mode != ArgMode::kOutput) {
      throw DataError("num arguments must be outputs (-num)");
    }
  }
  return decl;
}

}  // namespace

bool ModeDecl::numeric() const {
  return std::any_of(args.begin(), args.end(), [](const ModeArg& a) {
    return a.type == kNumericType;
  });
}

std::string ModeDecl::ToString() const {
  std::string out(predicate.str());
  out.push_back('(');
  for (size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out.push_back(',');
    out.push_back(args[i].mode == ArgMode::kInput    ? '+'
                  : args[i].mode == ArgMode::kOutput ? '-'
                                                     : '#');
    out.append(args[i].type);
  }
  out.append(").");
  return out;
}

ModeSet ModeSet::Parse(std::string_view text) {
  ModeSet modes;
  internal::ForEachContentLine(text, [&](size_t line_no, std::string_view line) {
    try {
      modes.Add(ParseDecl(line));
    } catch (const DataError& e) {
      throw DataError("mode line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  return modes;
}

ModeSet ModeSet::Default(bool word2vec) {
  ModeSet modes = Parse(kDefaultModes);
  if (word2vec) {
    for (const ModeDecl& d : Parse(kSimilarityModes).decls()) modes.Add(d);
  }
  return modes;
}

void ModeSet::Add(ModeDecl decl) { decls_.push_back(std::move(decl)); }

void ModeSet::AddTarget(Symbol predicate) {
  ModeDecl decl{predicate,
                {{ArgMode::kInput, std::string(kMentionType)},
                 {ArgMode::kInput, std::string(kMentionType)}}};
  decls_.push_back(std::move(decl));
}

ModeSet ModeSet::Without(Symbol predicate) const {
  ModeSet out;
  for (const ModeDecl& d : decls_) {
    if (d.predicate != predicate) out.decls_.push_back(d);
  }
  return out;
}

bool ModeSet::Uses(Symbol predicate) const {
  return std::any_of(decls_.begin(), decls_.end(), [&](const ModeDecl& d) {
    return d.predicate == predicate;
  });
}

std::string ModeSet::ToString() const {
  std::string out;
  for (const ModeDecl& d : decls_) out += d.ToString() + "\n";
  return out;
}

ModeSet LearnerModes(const ModeSet& base, const RelationRegistry& registry,
                     const std::string& relation, bool joint) {
  ModeSet modes = base;
  for (const RelationSignature& r : registry.relations()) {
    modes = modes.Without(r.predicate);
  }
  if (joint) {
    for (const RelationSignature& r : registry.relations()) {
      if (r.relation != relation) modes.AddTarget(r.predicate);
    }
  }
  return modes;
}

}  // namespace rdnkbp
