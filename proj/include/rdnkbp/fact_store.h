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

#ifndef RDNKBP_FACT_STORE_H_
#define RDNKBP_FACT_STORE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rdnkbp/logic.h"
#include "rdnkbp/symbol.h"

namespace rdnkbp {

// Non-owning reference to a callable.
template <typename Signature>
class FunctionRef;

template <typename R, typename... Args>
class FunctionRef<R(Args...)> {
 public:
  template <typename F,
            typename = std::enable_if_t<
                !std::is_same_v<std::decay_t<F>, FunctionRef>>>
  FunctionRef(F&& f)  // NOLINT(runtime/explicit)
      : object_(const_cast<void*>(static_cast<const void*>(&f))),
        call_([](void* object, Args... args) -> R {
          return (*static_cast<std::remove_reference_t<F>*>(object))(
              std::forward<Args>(args)...);
        }) {}

  R operator()(Args... args) const {
    return call_(object_, std::forward<Args>(args)...);
  }

 private:
  void* object_;
  R (*call_)(void*, Args...);
};

// Callback receiving the arguments of one matching fact. Returning false
// stops the enumeration.
using FactCallback = FunctionRef<bool(std::span<const Symbol>)>;

// Read-only access to a set of ground facts.
class FactView {
 public:
  virtual ~FactView() = default;

  // Enumerates facts of `predicate` whose argument i equals pattern[i] for
  // every valid pattern[i] (an invalid Symbol is a wildcard), in insertion
  // order. Returns false iff the callback stopped the enumeration.
  virtual bool ForEach(Symbol predicate, std::span<const Symbol> pattern,
                       FactCallback fn) const = 0;

  virtual bool HasPredicate(Symbol predicate) const = 0;
};

// Set of ground facts indexed by predicate, argument position and constant.
// Not synchronized: load facts from one thread, then share read-only.
class FactStore : public FactView {
 public:
  FactStore() = default;
  FactStore(const FactStore&) = default;
  FactStore& operator=(const FactStore&) = default;
  FactStore(FactStore&&) = default;
  FactStore& operator=(FactStore&&) = default;

  // Adds a fact. Returns false if it was already present. Throws DataError if
  // the fact is not ground or its arity conflicts with earlier facts or
  // declarations of the predicate.
  bool Add(const Fact& fact);
  void AddAll(std::span<const Fact> facts);

  // Fixes the arity of a predicate before any fact uses it.
  void DeclareArity(Symbol predicate, size_t arity);

  // Loads a fact file: one fact per line, `%` comment lines, blank lines
  // ignored. Parse errors are reported with the line number.
  void LoadFile(const std::string& path);
  void LoadText(std::string_view text, std::string_view source = "<text>");

  bool Contains(const Fact& fact) const;
  // Id of a stored fact, or -1.
  int64_t FindId(const Fact& fact) const;

  size_t size() const { return facts_.size(); }
  Symbol predicate(size_t i) const { return facts_[i].predicate; }
  std::span<const Symbol> args(size_t i) const {
    return {args_.data() + facts_[i].offset, facts_[i].arity};
  }
  Fact fact(size_t i) const;

  // Facts of `predicate` found by a linear scan (test oracle for the index).
  std::vector<size_t> Scan(Symbol predicate, size_t position,
                           Symbol constant) const;
  // Facts of `predicate` found through the index.
  std::vector<size_t> Lookup(Symbol predicate, size_t position,
                             Symbol constant) const;

  std::vector<Symbol> Predicates() const;
  // Arity of a known predicate, or -1.
  int Arity(Symbol predicate) const;

  // Distinct constants in insertion order of first use.
  const std::vector<Symbol>& Constants() const { return constants_; }

  // Order-sensitive hash of the full content.
  uint64_t Fingerprint() const;

  // Serializes facts in insertion order, one per line, canonical form.
  std::string ToText() const;

  bool ForEach(Symbol predicate, std::span<const Symbol> pattern,
               FactCallback fn) const override;
  bool HasPredicate(Symbol predicate) const override;

  // Like ForEach but also passes the fact id; used by overlays.
  bool ForEachId(Symbol predicate, std::span<const Symbol> pattern,
                 FunctionRef<bool(uint32_t, std::span<const Symbol>)> fn) const;

 private:
  struct Entry {
    Symbol predicate;
    uint32_t offset;
    uint32_t arity;
  };
  struct PredicateIndex {
    size_t arity = 0;
    std::vector<uint32_t> rows;
    std::vector<std::unordered_map<Symbol, std::vector<uint32_t>>> positions;
  };
  struct KeyHash {
    size_t operator()(const std::vector<Symbol>& key) const noexcept;
  };

  std::vector<Entry> facts_;
  std::vector<Symbol> args_;
  std::unordered_map<Symbol, PredicateIndex> index_;
  std::vector<Symbol> predicate_order_;
  std::unordered_map<std::vector<Symbol>, uint32_t, KeyHash> keys_;
  std::vector<Symbol> constants_;
  std::unordered_set<Symbol> constant_set_;
};

// A base view plus extra facts that can be switched on and off without
// touching the base. Used as the scratch world of Gibbs sampling.
class OverlayView : public FactView {
 public:
  explicit OverlayView(const FactView& base) : base_(base) {}

  // Adds an (initially inactive) overlay fact and returns its handle.
  uint32_t AddFact(const Fact& fact);
  void SetActive(uint32_t handle, bool active) { active_[handle] = active; }
  bool active(uint32_t handle) const { return active_[handle]; }

  bool ForEach(Symbol predicate, std::span<const Symbol> pattern,
               FactCallback fn) const override;
  bool HasPredicate(Symbol predicate) const override;

 private:
  const FactView& base_;
  FactStore extra_;
  std::vector<char> active_;
};

}  // namespace rdnkbp

#endif  // RDNKBP_FACT_STORE_H_
