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

#ifndef RDNKBP_SYMBOL_H_
#define RDNKBP_SYMBOL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace rdnkbp {

// Interned string. Two symbols are equal iff their text is equal. Symbols are
// process-wide and never freed; the table is safe for concurrent use.
class Symbol {
 public:
  Symbol() = default;

  static Symbol Intern(std::string_view text);

  // Text of the symbol. The returned view stays valid for the process
  // lifetime.
  std::string_view str() const;

  uint32_t id() const { return id_; }
  bool valid() const { return id_ != 0; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  // Orders by id (first interning order), not by text.
  friend auto operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

 private:
  explicit Symbol(uint32_t id) : id_(id) {}
  uint32_t id_ = 0;
};

}  // namespace rdnkbp

template <>
struct std::hash<rdnkbp::Symbol> {
  size_t operator()(rdnkbp::Symbol s) const noexcept {
    return std::hash<uint32_t>()(s.id());
  }
};

#endif  // RDNKBP_SYMBOL_H_
