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

#include "rdnkbp/logging.h"

#include <algorithm>
#include <iostream>
#include <mutex>
#include <set>

namespace rdnkbp {
namespace {

std::mutex& Mutex() {
  static std::mutex* mu = new std::mutex();
  return *mu;
}

ScopedWarningCapture*& ActiveCapture() {
  static ScopedWarningCapture* active = nullptr;
  return active;
}

std::set<std::string, std::less<>>& GlobalOnceKeys() {
  static auto* keys = new std::set<std::string, std::less<>>();
  return *keys;
}

}  // namespace

void Warn(const std::string& message) {
  std::lock_guard lock(Mutex());
  if (ScopedWarningCapture* capture = ActiveCapture()) {
    capture->messages_.push_back(message);
    return;
  }
  std::cerr << "warning: " << message << "\n";
}

void WarnOnce(std::string_view key, const std::string& message) {
  {
    std::lock_guard lock(Mutex());
    if (ScopedWarningCapture* capture = ActiveCapture()) {
      auto& keys = capture->once_keys_;
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) return;
      keys.emplace_back(key);
    } else {
      auto& keys = GlobalOnceKeys();
      if (keys.find(key) != keys.end()) return;
      keys.emplace(key);
    }
  }
  Warn(message);
}

ScopedWarningCapture::ScopedWarningCapture() {
  std::lock_guard lock(Mutex());
  previous_ = ActiveCapture();
  ActiveCapture() = this;
}

ScopedWarningCapture::~ScopedWarningCapture() {
  std::lock_guard lock(Mutex());
  ActiveCapture() = previous_;
}

bool ScopedWarningCapture::Contains(std::string_view fragment) const {
  return std::any_of(messages_.begin(), messages_.end(),
                     [&](const std::string& m) {
                       return m.find(fragment) != std::string::npos;
                     });
}

}  // namespace rdnkbp
