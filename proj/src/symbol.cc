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

#include "rdnkbp/symbol.h"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace rdnkbp {
namespace {

class SymbolTable {
 public:
  SymbolTable() { names_.emplace_back(); }  // id 0 is the invalid symbol

  uint32_t Intern(std::string_view text) {
    {
      std::shared_lock lock(mu_);
      auto it = ids_.find(text);
      if (it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto it = ids_.find(text);
    if (it != ids_.end()) return it->second;
    const std::string& stored = names_.emplace_back(text);
    const auto id = static_cast<uint32_t>(names_.size() - 1);
    ids_.emplace(std::string_view(stored), id);
    return id;
  }

  std::string_view Name(uint32_t id) {
    std::shared_lock lock(mu_);
    return names_[id];
  }

 private:
  std::shared_mutex mu_;
  // deque keeps element addresses stable, so the map can key on views.
  std::deque<std::string> names_;
  std::unordered_map<std::string_view, uint32_t> ids_;
};

SymbolTable& Table() {
  static SymbolTable* table = new SymbolTable();
  return *table;
}

}  // namespace

Symbol Symbol::Intern(std::string_view text) {
  return Symbol(Table().Intern(text));
}

std::string_view Symbol::str() const { return Table().Name(id_); }

}  // namespace rdnkbp
