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

#ifndef RDNKBP_LOGIC_H_
#define RDNKBP_LOGIC_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdnkbp/symbol.h"

namespace rdnkbp {

// A variable or a constant. Constants are identified by their canonical
// printed form, so the quoted constant "father" and the bare constant father
// are distinct, as are "PER" and per.
class Term {
 public:
  enum class Kind : uint8_t { kVariable, kConstant };

  Term() = default;

  static Term Variable(std::string_view name);
  // Bare constant; `text` must be a valid bare token (identifier starting with
  // a lowercase letter or digit, or a number).
  static Term Bare(std::string_view text);
  // Quoted string constant holding `text` verbatim.
  static Term Quoted(std::string_view text);
  // Bare when `text` is a valid bare token, quoted otherwise.
  static Term Constant(std::string_view text);
  // Constant from its canonical printed form (as produced by ToString()).
  static Term FromCanonical(Symbol canonical) {
    return Term(Kind::kConstant, canonical);
  }

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::kVariable; }
  bool is_constant() const { return kind_ == Kind::kConstant; }
  bool is_quoted() const;

  // Interned symbol: variable name, or canonical constant text.
  Symbol symbol() const { return symbol_; }
  // Canonical printed form.
  std::string_view ToString() const { return symbol_.str(); }
  // Constant value with quotes and escapes removed.
  std::string text() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term(Kind kind, Symbol symbol) : kind_(kind), symbol_(symbol) {}

  Kind kind_ = Kind::kConstant;
  Symbol symbol_;
};

bool IsBareToken(std::string_view text);
bool IsPredicateName(std::string_view text);

struct Atom {
  Symbol predicate;
  std::vector<Term> args;

  size_t arity() const { return args.size(); }
  bool IsGround() const;
  std::string ToString() const;

  friend bool operator==(const Atom&, const Atom&) = default;
};

// Either a (possibly negated) atom, or a numeric comparison `Var >= value`
// over a variable bound to a numeric constant.
struct Literal {
  enum class Kind : uint8_t { kAtom, kAtLeast };

  Kind kind = Kind::kAtom;
  Atom atom;
  bool negated = false;
  Term compared;           // kAtLeast only
  double threshold = 0.0;  // kAtLeast only

  static Literal Positive(Atom atom) {
    Literal lit;
    lit.atom = std::move(atom);
    return lit;
  }
  static Literal Negative(Atom atom) {
    Literal lit;
    lit.atom = std::move(atom);
    lit.negated = true;
    return lit;
  }
  static Literal AtLeast(Term var, double threshold);

  std::string ToString() const;
  // Variables in order of first occurrence.
  std::vector<Symbol> Variables() const;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Conjunction = std::vector<Literal>;

std::string ToString(const Conjunction& body);

struct Clause {
  Atom head;
  Conjunction body;

  std::string ToString() const;
  friend bool operator==(const Clause&, const Clause&) = default;
};

// Ground atom.
using Fact = Atom;

// Checks that `body` is safe when the variables in `bound` are bound on
// entry: every negated literal and comparison only uses variables that are
// already bound or bound by a preceding positive literal. Throws DataError.
void CheckSafety(const Conjunction& body, std::vector<Symbol> bound);

// Checks range restriction and safety. Throws DataError.
void CheckClause(const Clause& clause);

// Parses `pred(arg1,...,argN).` (the trailing period is optional). Throws
// ParseError on syntax errors and DataError when an argument is a variable.
Fact ParseFact(std::string_view line);

// Parses `body -> head` (or with the arrow U+2192). `\+` marks a negated
// literal, `X >= 0.5` a numeric comparison. Validates with CheckClause.
Clause ParseClause(std::string_view line);

// Parses a comma-separated conjunction without a head. No safety check.
Conjunction ParseConjunction(std::string_view text);

// Formats a double in its shortest round-trip representation.
std::string FormatNumber(double value);
// Parses the numeric value of a constant; nullopt when it is not a number.
std::optional<double> NumericValue(const Term& constant);

}  // namespace rdnkbp

#endif  // RDNKBP_LOGIC_H_
