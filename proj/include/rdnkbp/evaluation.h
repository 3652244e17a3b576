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

#ifndef RDNKBP_EVALUATION_H_
#define RDNKBP_EVALUATION_H_

#include <string>
#include <vector>

namespace rdnkbp {

struct ScoredItem {
  double score = 0;
  bool positive = false;
};

using ScoredSet = std::vector<ScoredItem>;

// Probability that a random positive outscores a random negative, ties
// counting one half. Throws DataError unless both classes are present.
double AucRoc(const ScoredSet& set);

// F1 of the rule `score >= threshold`; 0 when precision + recall is 0.
double F1(const ScoredSet& set, double threshold);

struct OperatingPoint {
  double threshold = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// One operating point per distinct observed score, highest threshold first.
// Tied scores form a single point.
std::vector<OperatingPoint> SweepThresholds(const ScoredSet& set);

// Highest recall among sweep points with precision >= p_min; 0 when none.
double RecallAtPrecision(const ScoredSet& set, double p_min);

// Sweep point with the highest F1 (the highest threshold among equals).
OperatingPoint BestF1(const ScoredSet& set);

struct RunAggregate {
  std::string metric;
  std::vector<double> values;
  double mean = 0;
  double stddev = 0;  // sample standard deviation, 0 for a single run
};

RunAggregate Aggregate(const std::string& metric,
                       const std::vector<double>& values);

}  // namespace rdnkbp

#endif  // RDNKBP_EVALUATION_H_
