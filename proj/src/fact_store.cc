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

#include "rdnkbp/fact_store.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rdnkbp/error.h"

namespace rdnkbp {
namespace {

uint64_t Mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

uint64_t HashText(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Symbol> KeyOf(const Fact& fact) {
  std::vector<Symbol> key;
  key.reserve(fact.args.size() + 1);
  key.push_back(fact.predicate);
  for (const Term& t : fact.args) key.push_back(t.symbol());
  return key;
}

}  // namespace

size_t FactStore::KeyHash::operator()(
    const std::vector<Symbol>& key) const noexcept {
  uint64_t h = key.size();
  for (Symbol s : key) h = Mix(h, s.id());
  return h;
}

void FactStore::DeclareArity(Symbol predicate, size_t arity) {
  auto [it, inserted] = index_.try_emplace(predicate);
  if (!inserted) {
    if (it->second.arity != arity) {
      throw DataError("arity conflict for " + std::string(predicate.str()) +
                      ": declared " + std::to_string(arity) + ", previously " +
                      std::to_string(it->second.arity));
    }
    return;
  }
  it->second.arity = arity;
  it->second.positions.resize(arity);
  predicate_order_.push_back(predicate);
}

bool FactStore::Add(const Fact& fact) {
  if (!fact.IsGround()) {
    throw DataError("fact is not ground: " + fact.ToString());
  }
  auto it = index_.find(fact.predicate);
  if (it != index_.end() && it->second.arity != fact.arity()) {
    throw DataError("arity conflict for " + std::string(fact.predicate.str()) +
                    ": got " + std::to_string(fact.arity()) + ", expected " +
                    std::to_string(it->second.arity));
  }
  std::vector<Symbol> key = KeyOf(fact);
  if (keys_.count(key) > 0) return false;
  if (it == index_.end()) {
    DeclareArity(fact.predicate, fact.arity());
    it = index_.find(fact.predicate);
  }
  const auto id = static_cast<uint32_t>(facts_.size());
  keys_.emplace(std::move(key), id);
  facts_.push_back({fact.predicate, static_cast<uint32_t>(args_.size()),
                    static_cast<uint32_t>(fact.arity())});
  PredicateIndex& pindex = it->second;
  pindex.rows.push_back(id);
  for (size_t i = 0; i < fact.args.size(); ++i) {
    const Symbol c = fact.args[i].symbol();
    args_.push_back(c);
    pindex.positions[i][c].push_back(id);
    if (constant_set_.insert(c).second) constants_.push_back(c);
  }
  return true;
}

void FactStore::AddAll(std::span<const Fact> facts) {
  for (const Fact& f : facts) Add(f);
}

void FactStore::LoadText(std::string_view text, std::string_view source) {
  size_t line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '%') continue;
    try {
      Add(ParseFact(line));
    } catch (const DataError& e) {
      throw DataError(std::string(source) + ":" + std::to_string(line_no) +
                      ": " + e.what());
    }
  }
}

void FactStore::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open fact file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  LoadText(buffer.str(), path);
}

int64_t FactStore::FindId(const Fact& fact) const {
  auto it = keys_.find(KeyOf(fact));
  return it == keys_.end() ? -1 : static_cast<int64_t>(it->second);
}

bool FactStore::Contains(const Fact& fact) const { return FindId(fact) >= 0; }

Fact FactStore::fact(size_t i) const {
  Fact f{facts_[i].predicate, {}};
  for (Symbol s : args(i)) f.args.push_back(Term::FromCanonical(s));
  return f;
}

std::vector<size_t> FactStore::Scan(Symbol predicate, size_t position,
                                    Symbol constant) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < facts_.size(); ++i) {
    if (facts_[i].predicate == predicate && position < facts_[i].arity &&
        args(i)[position] == constant) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<size_t> FactStore::Lookup(Symbol predicate, size_t position,
                                      Symbol constant) const {
  std::vector<size_t> out;
  auto it = index_.find(predicate);
  if (it == index_.end() || position >= it->second.arity) return out;
  auto hit = it->second.positions[position].find(constant);
  if (hit == it->second.positions[position].end()) return out;
  out.assign(hit->second.begin(), hit->second.end());
  return out;
}

std::vector<Symbol> FactStore::Predicates() const { return predicate_order_; }

int FactStore::Arity(Symbol predicate) const {
  auto it = index_.find(predicate);
  return it == index_.end() ? -1 : static_cast<int>(it->second.arity);
}

uint64_t FactStore::Fingerprint() const {
  uint64_t h = facts_.size();
  for (size_t i = 0; i < facts_.size(); ++i) {
    h = Mix(h, HashText(facts_[i].predicate.str()));
    for (Symbol s : args(i)) h = Mix(h, HashText(s.str()));
  }
  return h;
}

std::string FactStore::ToText() const {
  std::string out;
  for (size_t i = 0; i < facts_.size(); ++i) {
    out.append(fact(i).ToString());
    out.append(".\n");
  }
  return out;
}

bool FactStore::HasPredicate(Symbol predicate) const {
  return index_.count(predicate) > 0;
}

bool FactStore::ForEachId(
    Symbol predicate, std::span<const Symbol> pattern,
    FunctionRef<bool(uint32_t, std::span<const Symbol>)> fn) const {
  auto it = index_.find(predicate);
  if (it == index_.end()) return true;
  const PredicateIndex& pindex = it->second;
  if (pattern.size() != pindex.arity) return true;

  // Drive the scan from the most selective bound position.
  const std::vector<uint32_t>* rows = &pindex.rows;
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (!pattern[i].valid()) continue;
    auto hit = pindex.positions[i].find(pattern[i]);
    if (hit == pindex.positions[i].end()) return true;
    if (hit->second.size() < rows->size()) rows = &hit->second;
  }
  for (uint32_t id : *rows) {
    const std::span<const Symbol> fact_args = args(id);
    bool match = true;
    for (size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i].valid() && fact_args[i] != pattern[i]) {
        match = false;
        break;
      }
    }
    if (match && !fn(id, fact_args)) return false;
  }
  return true;
}

bool FactStore::ForEach(Symbol predicate, std::span<const Symbol> pattern,
                        FactCallback fn) const {
  return ForEachId(predicate, pattern,
                   [&](uint32_t, std::span<const Symbol> a) { return fn(a); });
}

uint32_t OverlayView::AddFact(const Fact& fact) {
  const int64_t existing = extra_.FindId(fact);
  if (existing >= 0) return static_cast<uint32_t>(existing);
  extra_.Add(fact);
  active_.push_back(0);
  return static_cast<uint32_t>(extra_.size() - 1);
}

bool OverlayView::ForEach(Symbol predicate, std::span<const Symbol> pattern,
                          FactCallback fn) const {
  if (!base_.ForEach(predicate, pattern, fn)) return false;
  return extra_.ForEachId(predicate, pattern,
                          [&](uint32_t id, std::span<const Symbol> a) {
                            return !active_[id] || fn(a);
                          });
}

bool OverlayView::HasPredicate(Symbol predicate) const {
  return base_.HasPredicate(predicate) || extra_.HasPredicate(predicate);
}

}  // namespace rdnkbp
