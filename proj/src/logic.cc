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

#include "rdnkbp/logic.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include "rdnkbp/error.h"

namespace rdnkbp {
namespace {

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool IsNumber(std::string_view s) {
  if (s.empty()) return false;
  double value;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool IsBareIdentifier(std::string_view s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s[0]);
  if (!std::islower(first) && !std::isdigit(first)) return false;
  return std::all_of(s.begin(), s.end(), IsIdentChar);
}

std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Recursive-descent parser over one line of text.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  size_t pos() const { return pos_; }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }

  bool Consume(std::string_view token) {
    SkipSpace();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void Expect(std::string_view token) {
    if (!Consume(token)) Fail("expected '" + std::string(token) + "'");
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  bool PeekArrow() {
    SkipSpace();
    return text_.substr(pos_, 2) == "->" ||
           text_.substr(pos_, 3) == "\xE2\x86\x92";
  }

  void ExpectArrow() {
    if (!Consume("->") && !Consume("\xE2\x86\x92")) Fail("expected '->'");
  }

  Term ParseTerm() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("expected term");
    const char c = text_[pos_];
    if (c == '"') return Term::Quoted(ParseQuoted());
    const size_t start = pos_;
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
      return Term::Variable(text_.substr(start, pos_ - start));
    }
    while (pos_ < text_.size() &&
           (IsIdentChar(text_[pos_]) || text_[pos_] == '.' ||
            text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    // A trailing period terminates a fact rather than belonging to a number.
    while (pos_ > start + 1 && text_[pos_ - 1] == '.') --pos_;
    const std::string_view token = text_.substr(start, pos_ - start);
    if (!IsBareToken(token)) {
      pos_ = start;
      Fail("invalid constant '" + std::string(token) + "'");
    }
    return Term::Bare(token);
  }

  std::string ParseQuoted() {
    ++pos_;  // opening quote
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') {
        ++pos_;
        if (pos_ >= text_.size()) Fail("unterminated escape");
      }
      out.push_back(text_[pos_++]);
    }
    if (pos_ >= text_.size()) Fail("unterminated string");
    ++pos_;  // closing quote
    return out;
  }

  Atom ParseAtom() {
    SkipSpace();
    const size_t start = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (!IsPredicateName(name)) {
      pos_ = start;
      Fail("expected predicate name");
    }
    Atom atom{Symbol::Intern(name), {}};
    Expect("(");
    do {
      atom.args.push_back(ParseTerm());
    } while (Consume(","));
    Expect(")");
    return atom;
  }

  Literal ParseLiteral() {
    SkipSpace();
    if (Consume("\\+")) return Literal::Negative(ParseAtom());
    if (pos_ < text_.size() &&
        (std::isupper(static_cast<unsigned char>(text_[pos_])) ||
         text_[pos_] == '_')) {
      const Term var = ParseTerm();
      Expect(">=");
      const size_t at = pos_;
      const Term bound = ParseTerm();
      const auto value = bound.is_constant() ? NumericValue(bound)
                                             : std::optional<double>();
      if (!value) throw ParseError("expected numeric threshold", at);
      return Literal::AtLeast(var, *value);
    }
    return Literal::Positive(ParseAtom());
  }

  Conjunction ParseBody() {
    Conjunction body;
    if (AtEnd() || PeekArrow()) return body;
    do {
      body.push_back(ParseLiteral());
    } while (Consume(","));
    return body;
  }

  void ExpectEnd() {
    Consume(".");
    if (!AtEnd()) Fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

void AppendUnique(std::vector<Symbol>& out, Symbol s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

}  // namespace

bool IsBareToken(std::string_view text) {
  return IsBareIdentifier(text) || IsNumber(text);
}

bool IsPredicateName(std::string_view text) {
  return !text.empty() && std::islower(static_cast<unsigned char>(text[0])) &&
         std::all_of(text.begin(), text.end(), IsIdentChar);
}

Term Term::Variable(std::string_view name) {
  return Term(Kind::kVariable, Symbol::Intern(name));
}

Term Term::Bare(std::string_view text) {
  return Term(Kind::kConstant, Symbol::Intern(text));
}

Term Term::Quoted(std::string_view text) {
  return Term(Kind::kConstant, Symbol::Intern(Quote(text)));
}

Term Term::Constant(std::string_view text) {
  return IsBareToken(text) ? Bare(text) : Quoted(text);
}

bool Term::is_quoted() const {
  return is_constant() && !symbol_.str().empty() && symbol_.str()[0] == '"';
}

std::string Term::text() const {
  const std::string_view s = symbol_.str();
  if (!is_quoted()) return std::string(s);
  std::string out;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '\\') ++i;
    out.push_back(s[i]);
  }
  return out;
}

bool Atom::IsGround() const {
  return std::all_of(args.begin(), args.end(),
                     [](const Term& t) { return t.is_constant(); });
}

std::string Atom::ToString() const {
  std::string out(predicate.str());
  out.push_back('(');
  for (size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out.push_back(',');
    out.append(args[i].ToString());
  }
  out.push_back(')');
  return out;
}

Literal Literal::AtLeast(Term var, double threshold) {
  Literal lit;
  lit.kind = Kind::kAtLeast;
  lit.compared = var;
  lit.threshold = threshold;
  return lit;
}

std::string Literal::ToString() const {
  if (kind == Kind::kAtLeast) {
    return std::string(compared.ToString()) + ">=" + FormatNumber(threshold);
  }
  return (negated ? "\\+" : "") + atom.ToString();
}

std::vector<Symbol> Literal::Variables() const {
  std::vector<Symbol> vars;
  if (kind == Kind::kAtLeast) {
    if (compared.is_variable()) vars.push_back(compared.symbol());
    return vars;
  }
  for (const Term& t : atom.args) {
    if (t.is_variable()) AppendUnique(vars, t.symbol());
  }
  return vars;
}

std::string ToString(const Conjunction& body) {
  std::string out;
  for (size_t i = 0; i < body.size(); ++i) {
    if (i > 0) out.append(", ");
    out.append(body[i].ToString());
  }
  return out;
}

std::string Clause::ToString() const {
  std::string out = rdnkbp::ToString(body);
  if (!out.empty()) out.push_back(' ');
  out.append("-> ");
  out.append(head.ToString());
  return out;
}

void CheckSafety(const Conjunction& body, std::vector<Symbol> bound) {
  for (const Literal& lit : body) {
    const bool binds = lit.kind == Literal::Kind::kAtom && !lit.negated;
    for (Symbol v : lit.Variables()) {
      const bool is_bound =
          std::find(bound.begin(), bound.end(), v) != bound.end();
      if (binds) {
        if (!is_bound) bound.push_back(v);
      } else if (!is_bound) {
        throw DataError("unsafe literal " + lit.ToString() + ": variable " +
                        std::string(v.str()) +
                        " is not bound by a preceding positive literal");
      }
    }
  }
}

void CheckClause(const Clause& clause) {
  std::vector<Symbol> positive_vars;
  for (const Literal& lit : clause.body) {
    if (lit.kind == Literal::Kind::kAtom && !lit.negated) {
      for (Symbol v : lit.Variables()) AppendUnique(positive_vars, v);
    }
  }
  for (const Term& t : clause.head.args) {
    if (t.is_variable() &&
        std::find(positive_vars.begin(), positive_vars.end(), t.symbol()) ==
            positive_vars.end()) {
      throw DataError("range restriction violated: head variable " +
                      std::string(t.symbol().str()) +
                      " does not occur in a positive body literal of " +
                      clause.ToString());
    }
  }
  CheckSafety(clause.body, {});
}

Fact ParseFact(std::string_view line) {
  Parser parser(line);
  Atom atom = parser.ParseAtom();
  parser.ExpectEnd();
  for (const Term& t : atom.args) {
    if (t.is_variable()) {
      throw DataError("variable " + std::string(t.symbol().str()) +
                      " in fact " + atom.ToString());
    }
  }
  return atom;
}

Clause ParseClause(std::string_view line) {
  Parser parser(line);
  Clause clause;
  clause.body = parser.ParseBody();
  parser.ExpectArrow();
  clause.head = parser.ParseAtom();
  parser.ExpectEnd();
  CheckClause(clause);
  return clause;
}

Conjunction ParseConjunction(std::string_view text) {
  Parser parser(text);
  Conjunction body = parser.ParseBody();
  parser.ExpectEnd();
  return body;
}

std::string FormatNumber(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::optional<double> NumericValue(const Term& constant) {
  if (!constant.is_constant() || constant.is_quoted()) return std::nullopt;
  const std::string_view s = constant.ToString();
  double value;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace rdnkbp
