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

#ifndef RDNKBP_ERROR_H_
#define RDNKBP_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdnkbp {

// Malformed or inconsistent input data (documents, fact files, rule files,
// embeddings, configuration). The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in the Prolog-style fact/clause notation.
class ParseError : public DataError {
 public:
  ParseError(const std::string& message, size_t position)
      : DataError(message + " at position " + std::to_string(position)),
        position_(position) {}

  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Learning could not proceed (e.g. single-class training data). Exit code 3.
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rdnkbp

#endif  // RDNKBP_ERROR_H_
