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

#ifndef RDNKBP_MATCHER_H_
#define RDNKBP_MATCHER_H_

#include <string>
#include <utility>
#include <vector>

#include "rdnkbp/fact_store.h"
#include "rdnkbp/logic.h"

namespace rdnkbp {

// Variable -> constant bindings, kept in binding order.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Symbol, Symbol>> bindings)
      : bindings_(bindings) {}

  // Bound constant (canonical symbol) or an invalid Symbol.
  Symbol Get(Symbol var) const {
    for (const auto& [v, c] : bindings_) {
      if (v == var) return c;
    }
    return Symbol();
  }
  void Bind(Symbol var, Symbol constant) { bindings_.emplace_back(var, constant); }
  size_t size() const { return bindings_.size(); }
  void Truncate(size_t n) { bindings_.resize(n); }

  const std::vector<std::pair<Symbol, Symbol>>& bindings() const {
    return bindings_;
  }
  // Bindings sorted by variable name, e.g. {A=c1, B=c2}.
  std::vector<std::pair<std::string, std::string>> Sorted() const;
  std::string ToString() const;

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.Sorted() == b.Sorted();
  }

 private:
  std::vector<std::pair<Symbol, Symbol>> bindings_;
};

using SubstitutionCallback = FunctionRef<bool(const Substitution&)>;

// Enumerates every extension of `seed` under which all positive literals of
// `body` are facts of `view`, every negated literal has no match (negation as
// failure) and every comparison holds. Literals are solved left to right and
// facts visited in insertion order, so the order is deterministic. Returns
// false iff the callback stopped the enumeration. Unknown predicates match
// nothing and produce a one-time warning.
bool Satisfy(const Conjunction& body, const FactView& view,
             const Substitution& seed, SubstitutionCallback fn);

std::vector<Substitution> SatisfyAll(const Conjunction& body,
                                     const FactView& view,
                                     const Substitution& seed = {});

// True iff Satisfy yields at least one substitution; stops at the first.
bool Exists(const Conjunction& body, const FactView& view,
            const Substitution& seed = {});

}  // namespace rdnkbp

#endif  // RDNKBP_MATCHER_H_
