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

#include "rdnkbp/evaluation.h"

#include <algorithm>
#include <cmath>

#include "rdnkbp/error.h"

namespace rdnkbp {
namespace {

std::vector<ScoredItem> ByScoreDescending(const ScoredSet& set) {
  std::vector<ScoredItem> items = set;
  std::stable_sort(items.begin(), items.end(),
                   [](const ScoredItem& a, const ScoredItem& b) {
                     return a.score > b.score;
                   });
  return items;
}

}  // namespace

double AucRoc(const ScoredSet& set) {
  std::vector<ScoredItem> items = set;
  std::sort(items.begin(), items.end(),
            [](const ScoredItem& a, const ScoredItem& b) {
              return a.score < b.score;
            });
  double positives = 0, negatives = 0, rank_sum = 0;
  for (size_t i = 0; i < items.size();) {
    size_t j = i;
    double pos_in_group = 0;
    while (j < items.size() && items[j].score == items[i].score) {
      pos_in_group += items[j].positive ? 1 : 0;
      ++j;
    }
    // Average 1-based rank of the tied group.
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    rank_sum += pos_in_group * rank;
    positives += pos_in_group;
    negatives += static_cast<double>(j - i) - pos_in_group;
    i = j;
  }
  if (positives == 0 || negatives == 0) {
    throw DataError("AUC needs both positive and negative items");
  }
  return (rank_sum - positives * (positives + 1) / 2) / (positives * negatives);
}

double F1(const ScoredSet& set, double threshold) {
  double tp = 0, fp = 0, fn = 0;
  for (const ScoredItem& item : set) {
    const bool predicted = item.score >= threshold;
    if (predicted && item.positive) ++tp;
    if (predicted && !item.positive) ++fp;
    if (!predicted && item.positive) ++fn;
  }
  const double p = tp + fp > 0 ? tp / (tp + fp) : 0;
  const double r = tp + fn > 0 ? tp / (tp + fn) : 0;
  return p + r > 0 ? 2 * p * r / (p + r) : 0;
}

std::vector<OperatingPoint> SweepThresholds(const ScoredSet& set) {
  const std::vector<ScoredItem> items = ByScoreDescending(set);
  double total_pos = 0;
  for (const ScoredItem& item : items) total_pos += item.positive ? 1 : 0;
  std::vector<OperatingPoint> points;
  double tp = 0, fp = 0;
  for (size_t i = 0; i < items.size();) {
    size_t j = i;
    while (j < items.size() && items[j].score == items[i].score) {
      (items[j].positive ? tp : fp) += 1;
      ++j;
    }
    OperatingPoint pt;
    pt.threshold = items[i].score;
    pt.precision = tp / (tp + fp);
    pt.recall = total_pos > 0 ? tp / total_pos : 0;
    pt.f1 = pt.precision + pt.recall > 0
                ? 2 * pt.precision * pt.recall / (pt.precision + pt.recall)
                : 0;
    points.push_back(pt);
    i = j;
  }
  return points;
}

double RecallAtPrecision(const ScoredSet& set, double p_min) {
  if (!(p_min > 0 && p_min <= 1)) {
    throw DataError("precision level must be in (0, 1]");
  }
  double best = 0;
  for (const OperatingPoint& pt : SweepThresholds(set)) {
    if (pt.precision >= p_min) best = std::max(best, pt.recall);
  }
  return best;
}

OperatingPoint BestF1(const ScoredSet& set) {
  OperatingPoint best;
  bool found = false;
  for (const OperatingPoint& pt : SweepThresholds(set)) {
    if (!found || pt.f1 > best.f1) {
      best = pt;
      found = true;
    }
  }
  return best;
}

RunAggregate Aggregate(const std::string& metric,
                       const std::vector<double>& values) {
  if (values.empty()) throw DataError("aggregate needs at least one run");
  RunAggregate agg;
  agg.metric = metric;
  agg.values = values;
  double sum = 0;
  for (double v : values) sum += v;
  agg.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0;
    for (double v : values) ss += (v - agg.mean) * (v - agg.mean);
    agg.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return agg;
}

}  // namespace rdnkbp
