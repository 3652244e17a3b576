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

#include "rdnkbp/matcher.h"

#include <algorithm>

#include "rdnkbp/logging.h"

namespace rdnkbp {
namespace {

class Solver {
 public:
  Solver(const Conjunction& body, const FactView& view,
         const Substitution& seed, SubstitutionCallback fn)
      : body_(body), view_(view), sub_(seed), fn_(fn) {}

  bool Solve(size_t i) {
    if (i == body_.size()) return fn_(sub_);
    const Literal& lit = body_[i];
    if (lit.kind == Literal::Kind::kAtLeast) {
      const Symbol value = Resolve(lit.compared);
      if (!value.valid()) return true;
      const auto number = NumericValue(Term::FromCanonical(value));
      if (!number || *number < lit.threshold) return true;
      return Solve(i + 1);
    }
    if (!view_.HasPredicate(lit.atom.predicate)) {
      WarnOnce("unknown-predicate:" + std::string(lit.atom.predicate.str()),
               "unknown predicate " + std::string(lit.atom.predicate.str()) +
                   " matches no facts");
      return lit.negated ? Solve(i + 1) : true;
    }

    std::vector<Symbol> pattern(lit.atom.args.size());
    for (size_t k = 0; k < lit.atom.args.size(); ++k) {
      pattern[k] = Resolve(lit.atom.args[k]);
    }
    if (lit.negated) {
      const bool found = !view_.ForEach(
          lit.atom.predicate, pattern,
          [&](std::span<const Symbol> args) { return !Unifies(lit, args); });
      return found ? true : Solve(i + 1);
    }

    return view_.ForEach(
        lit.atom.predicate, pattern, [&](std::span<const Symbol> args) {
          const size_t mark = sub_.size();
          bool ok = true;
          for (size_t k = 0; k < args.size() && ok; ++k) {
            const Term& t = lit.atom.args[k];
            if (!t.is_variable()) continue;
            const Symbol bound = sub_.Get(t.symbol());
            if (!bound.valid()) {
              sub_.Bind(t.symbol(), args[k]);
            } else if (bound != args[k]) {
              ok = false;  // repeated variable bound earlier in this literal
            }
          }
          const bool keep_going = ok ? Solve(i + 1) : true;
          sub_.Truncate(mark);
          return keep_going;
        });
  }

 private:
  Symbol Resolve(const Term& t) const {
    return t.is_variable() ? sub_.Get(t.symbol()) : t.symbol();
  }

  // Checks repeated free variables inside a negated literal.
  bool Unifies(const Literal& lit, std::span<const Symbol> args) const {
    for (size_t a = 0; a < args.size(); ++a) {
      const Term& ta = lit.atom.args[a];
      if (!ta.is_variable() || sub_.Get(ta.symbol()).valid()) continue;
      for (size_t b = a + 1; b < args.size(); ++b) {
        if (lit.atom.args[b] == ta && args[b] != args[a]) return false;
      }
    }
    return true;
  }

  const Conjunction& body_;
  const FactView& view_;
  Substitution sub_;
  SubstitutionCallback fn_;
};

}  // namespace

std::vector<std::pair<std::string, std::string>> Substitution::Sorted() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(bindings_.size());
  for (const auto& [v, c] : bindings_) {
    out.emplace_back(std::string(v.str()), std::string(c.str()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Substitution::ToString() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, c] : Sorted()) {
    if (!first) out.append(", ");
    first = false;
    out.append(v).append("=").append(c);
  }
  out.push_back('}');
  return out;
}

bool Satisfy(const Conjunction& body, const FactView& view,
             const Substitution& seed, SubstitutionCallback fn) {
  Solver solver(body, view, seed, fn);
  return solver.Solve(0);
}

std::vector<Substitution> SatisfyAll(const Conjunction& body,
                                     const FactView& view,
                                     const Substitution& seed) {
  std::vector<Substitution> out;
  Satisfy(body, view, seed, [&](const Substitution& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool Exists(const Conjunction& body, const FactView& view,
            const Substitution& seed) {
  return !Satisfy(body, view, seed,
                  [](const Substitution&) { return false; });
}

}  // namespace rdnkbp
