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

#ifndef RDNKBP_LOGGING_H_
#define RDNKBP_LOGGING_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rdnkbp {

// Warnings go to stderr unless a capture is installed.
void Warn(const std::string& message);

// Emits `message` only the first time `key` is seen in this process (or
// within the innermost active capture).
void WarnOnce(std::string_view key, const std::string& message);

// Redirects warnings into a buffer for the lifetime of the object.
class ScopedWarningCapture {
 public:
  ScopedWarningCapture();
  ~ScopedWarningCapture();
  ScopedWarningCapture(const ScopedWarningCapture&) = delete;
  ScopedWarningCapture& operator=(const ScopedWarningCapture&) = delete;

  const std::vector<std::string>& messages() const { return messages_; }
  bool Contains(std::string_view fragment) const;

 private:
  friend void Warn(const std::string&);
  friend void WarnOnce(std::string_view, const std::string&);

  std::vector<std::string> messages_;
  std::vector<std::string> once_keys_;
  ScopedWarningCapture* previous_;
};

}  // namespace rdnkbp

#endif  // RDNKBP_LOGGING_H_
