// Copyright 2026 The spamgame Authors.
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

// Behavior features and the Prior detector.
//
// Every raw feature is mapped to [0,1] through its empirical distribution so
// that small values mean suspicious: h(x) = P(X >= x) for features where large
// values are suspicious and h(x) = P(X <= x) otherwise. Scores aggregate the
// transformed values as S = 1 - sqrt(sum h^2 / H).

#ifndef SPAMGAME_BEHAVIOR_H_
#define SPAMGAME_BEHAVIOR_H_

#include <span>
#include <vector>

#include "spamgame/review_graph.h"
#include "spamgame/score_vector.h"

namespace spamgame {

enum class AccountFeature {
  kMaxReviewsPerDay,
  kRatingDeviation,
  kBurstiness,
  kPositiveRatio,
  kReviewCount,
};

enum class ReviewFeature {
  kRatingExtremity,
  // The review is its account's earliest one.
  kFirstReview,
  // Reviews of the same product posted on the same day.
  kProductDayBurst,
};

struct PriorConfig {
  std::vector<AccountFeature> account_features = {
      AccountFeature::kMaxReviewsPerDay, AccountFeature::kRatingDeviation,
      AccountFeature::kBurstiness, AccountFeature::kPositiveRatio,
      AccountFeature::kReviewCount};
  std::vector<ReviewFeature> review_features = {
      ReviewFeature::kRatingExtremity, ReviewFeature::kFirstReview,
      ReviewFeature::kProductDayBurst};
  // Activity spans shorter than this many days count as bursty.
  int burst_window_days = 28;
};

// 1 - sqrt(sum h^2 / H). `transformed` must be nonempty.
double AggregateSuspicion(std::span<const double> transformed);

// Empirical-CDF transform of `values`; see the file comment.
std::vector<double> CdfTransform(std::span<const double> values,
                                 bool high_is_suspicious);

struct PriorResult {
  // Indexed by account id; 0 for accounts without reviews.
  std::vector<double> account_score;
  // Indexed by review id; 0 for removed slots.
  std::vector<double> review_feature_score;
  // mean(account score, review-feature score) per live review.
  ScoreVector review_score;
};

PriorResult ComputePrior(const ReviewGraph& graph, const PriorConfig& config);

ScoreVector PriorScores(const ReviewGraph& graph, const PriorConfig& config);

// Mean Prior review score of each product's reviews (0 without reviews).
std::vector<double> ProductSuspicion(const ReviewGraph& graph,
                                     const PriorResult& prior);

}  // namespace spamgame

#endif  // SPAMGAME_BEHAVIOR_H_
