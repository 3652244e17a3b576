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

#include "rdnkbp/labels.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rdnkbp/error.h"
#include "rdnkbp/logic.h"

namespace rdnkbp {
namespace {

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos
                                                              : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

template <typename Fn>
void ForEachRecord(std::string_view text, const char* what, size_t columns,
                   Fn fn) {
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() != columns) {
      throw DataError(std::string(what) + " line " + std::to_string(line_no) +
                      ": expected " + std::to_string(columns) +
                      " tab-separated fields, got " +
                      std::to_string(fields.size()));
    }
    try {
      fn(fields);
    } catch (const DataError& e) {
      throw DataError(std::string(what) + " line " + std::to_string(line_no) +
                      ": " + e.what());
    }
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CandidatePair PairFromFields(const std::vector<std::string>& f) {
  for (size_t i = 0; i < 5; ++i) {
    if (f[i].empty()) throw DataError("empty field " + std::to_string(i + 1));
  }
  return {f[0], f[1], f[2], f[3], f[4]};
}

std::string PairColumns(const CandidatePair& p) {
  return p.relation + "\t" + p.doc_id + "\t" + p.sent_id + "\t" + p.arg1 +
         "\t" + p.arg2;
}

}  // namespace

std::string LabeledExample::ProvenanceString() const {
  switch (provenance) {
    case Provenance::kGold:
      return "gold";
    case Provenance::kWeak:
      return "weak:" + FormatNumber(weak_score);
    case Provenance::kSampledNegative:
      return "sampled-negative";
  }
  return "";
}

std::vector<CandidatePair> ParseGold(std::string_view text) {
  std::vector<CandidatePair> out;
  ForEachRecord(text, "gold", 5, [&](const std::vector<std::string>& f) {
    out.push_back(PairFromFields(f));
  });
  return out;
}

std::vector<CandidatePair> LoadGold(const std::string& path) {
  return ParseGold(ReadFile(path));
}

std::string FormatGold(const std::vector<CandidatePair>& pairs) {
  std::string out;
  for (const CandidatePair& p : pairs) out += PairColumns(p) + "\n";
  return out;
}

std::vector<LabeledExample> ParseExamples(std::string_view text) {
  std::vector<LabeledExample> out;
  ForEachRecord(text, "examples", 7, [&](const std::vector<std::string>& f) {
    LabeledExample e;
    e.pair = PairFromFields(f);
    if (f[5] == "pos") {
      e.positive = true;
    } else if (f[5] != "neg") {
      throw DataError("label must be pos or neg, got '" + f[5] + "'");
    }
    const std::string& prov = f[6];
    if (prov == "gold") {
      e.provenance = Provenance::kGold;
    } else if (prov == "sampled-negative") {
      e.provenance = Provenance::kSampledNegative;
    } else if (prov.rfind("weak:", 0) == 0) {
      e.provenance = Provenance::kWeak;
      const std::string score = prov.substr(5);
      auto [ptr, ec] = std::from_chars(score.data(),
                                       score.data() + score.size(),
                                       e.weak_score);
      if (ec != std::errc() || ptr != score.data() + score.size()) {
        throw DataError("bad weak score '" + score + "'");
      }
    } else {
      throw DataError("unknown provenance '" + prov + "'");
    }
    out.push_back(std::move(e));
  });
  return out;
}

std::vector<LabeledExample> LoadExamples(const std::string& path) {
  return ParseExamples(ReadFile(path));
}

std::string FormatExamples(const std::vector<LabeledExample>& examples) {
  std::string out;
  for (const LabeledExample& e : examples) {
    out += PairColumns(e.pair) + "\t" + (e.positive ? "pos" : "neg") + "\t" +
           e.ProvenanceString() + "\n";
  }
  return out;
}

std::vector<LabeledExample> GoldExamples(
    const std::vector<CandidatePair>& gold, std::string_view relation) {
  std::vector<LabeledExample> out;
  for (const CandidatePair& p : gold) {
    if (p.relation == relation) out.push_back({p, true, Provenance::kGold});
  }
  return out;
}

}  // namespace rdnkbp
