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

#include "spamgame/behavior.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spamgame {
namespace {

bool HighIsSuspicious(AccountFeature f) {
  return f != AccountFeature::kReviewCount;
}

}  // namespace

double AggregateSuspicion(std::span<const double> transformed) {
  if (transformed.empty()) {
    throw std::invalid_argument("no features to aggregate");
  }
  double sq = 0.0;
  for (double h : transformed) sq += h * h;
  return 1.0 - std::sqrt(sq / static_cast<double>(transformed.size()));
}

std::vector<double> CdfTransform(std::span<const double> values,
                                 bool high_is_suspicious) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    // P(X >= x) or P(X <= x), so that a value shared by most of the
    // population maps near 1.
    if (high_is_suspicious) {
      auto lo = std::lower_bound(sorted.begin(), sorted.end(), values[i]);
      out[i] = static_cast<double>(sorted.end() - lo) / n;
    } else {
      auto hi = std::upper_bound(sorted.begin(), sorted.end(), values[i]);
      out[i] = static_cast<double>(hi - sorted.begin()) / n;
    }
  }
  return out;
}

PriorResult ComputePrior(const ReviewGraph& graph, const PriorConfig& config) {
  const std::size_t n_accounts = graph.num_accounts();
  const std::size_t n_products = graph.num_products();

  std::vector<double> product_mean(n_products, 0.0);
  for (std::uint32_t p = 0; p < n_products; ++p) {
    auto reviews = graph.ReviewsOfProduct(ProductId(p));
    if (reviews.empty()) continue;
    double sum = 0.0;
    for (ReviewId id : reviews) sum += graph.review(id).rating;
    product_mean[p] = sum / static_cast<double>(reviews.size());
  }

  PriorResult result;
  result.account_score.assign(n_accounts, 0.0);
  result.review_feature_score.assign(graph.review_capacity(), 0.0);

  // Account features over accounts that have reviews.
  std::vector<AccountId> active;
  for (std::uint32_t a = 0; a < n_accounts; ++a) {
    if (graph.AccountDegree(AccountId(a)) > 0) active.emplace_back(a);
  }
  // first_review[a] = id of the account's earliest review.
  std::vector<ReviewId> first_review(n_accounts);
  if (!config.account_features.empty() || !config.review_features.empty()) {
    std::vector<std::vector<double>> raw(config.account_features.size(),
                                         std::vector<double>(active.size()));
    std::vector<Day> dates;
    for (std::size_t i = 0; i < active.size(); ++i) {
      AccountId a = active[i];
      auto reviews = graph.ReviewsOfAccount(a);
      dates.clear();
      double deviation = 0.0, positive = 0.0;
      ReviewId first = reviews.front();
      Day first_date = graph.review(first).date;
      for (ReviewId id : reviews) {
        const Review& r = graph.review(id);
        dates.push_back(r.date);
        deviation += std::abs(r.rating - product_mean[r.product.value]);
        if (r.rating >= 4) positive += 1.0;
        if (r.date < first_date) {
          first_date = r.date;
          first = id;
        }
      }
      first_review[a.value] = first;
      std::sort(dates.begin(), dates.end());
      int max_per_day = 0;
      for (std::size_t j = 0; j < dates.size();) {
        std::size_t k = j;
        while (k < dates.size() && dates[k] == dates[j]) ++k;
        max_per_day = std::max(max_per_day, static_cast<int>(k - j));
        j = k;
      }
      const double n = static_cast<double>(reviews.size());
      const double span = static_cast<double>(dates.back() - dates.front());
      const double window = config.burst_window_days;
      for (std::size_t f = 0; f < config.account_features.size(); ++f) {
        double x = 0.0;
        switch (config.account_features[f]) {
          case AccountFeature::kMaxReviewsPerDay: x = max_per_day; break;
          case AccountFeature::kRatingDeviation: x = deviation / n; break;
          case AccountFeature::kBurstiness:
            x = span < window ? 1.0 - span / window : 0.0;
            break;
          case AccountFeature::kPositiveRatio: x = positive / n; break;
          case AccountFeature::kReviewCount: x = n; break;
        }
        raw[f][i] = x;
      }
    }
    if (!config.account_features.empty()) {
      std::vector<std::vector<double>> h(config.account_features.size());
      for (std::size_t f = 0; f < config.account_features.size(); ++f) {
        h[f] = CdfTransform(raw[f], HighIsSuspicious(config.account_features[f]));
      }
      std::vector<double> row(config.account_features.size());
      for (std::size_t i = 0; i < active.size(); ++i) {
        for (std::size_t f = 0; f < row.size(); ++f) row[f] = h[f][i];
        result.account_score[active[i].value] = AggregateSuspicion(row);
      }
    }
  }

  std::vector<ReviewId> ids = graph.ReviewIds();
  if (!config.review_features.empty()) {
    // Same-day counts per product.
    std::vector<double> day_burst(graph.review_capacity(), 0.0);
    std::vector<std::pair<Day, ReviewId>> by_day;
    for (std::uint32_t p = 0; p < n_products; ++p) {
      by_day.clear();
      for (ReviewId id : graph.ReviewsOfProduct(ProductId(p))) {
        by_day.emplace_back(graph.review(id).date, id);
      }
      std::sort(by_day.begin(), by_day.end());
      for (std::size_t j = 0; j < by_day.size();) {
        std::size_t k = j;
        while (k < by_day.size() && by_day[k].first == by_day[j].first) ++k;
        for (std::size_t m = j; m < k; ++m) {
          day_burst[by_day[m].second.value] = static_cast<double>(k - j);
        }
        j = k;
      }
    }
    std::vector<std::vector<double>> h(config.review_features.size());
    std::vector<double> raw(ids.size());
    for (std::size_t f = 0; f < config.review_features.size(); ++f) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const Review& r = graph.review(ids[i]);
        switch (config.review_features[f]) {
          case ReviewFeature::kRatingExtremity:
            raw[i] = (r.rating == 1 || r.rating == 5) ? 1.0 : 0.0;
            break;
          case ReviewFeature::kFirstReview:
            raw[i] = first_review[r.account.value] == r.id ? 1.0 : 0.0;
            break;
          case ReviewFeature::kProductDayBurst:
            raw[i] = day_burst[r.id.value];
            break;
        }
      }
      h[f] = CdfTransform(raw, /*high_is_suspicious=*/true);
    }
    std::vector<double> row(config.review_features.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t f = 0; f < row.size(); ++f) row[f] = h[f][i];
      result.review_feature_score[ids[i].value] = AggregateSuspicion(row);
    }
  }

  result.review_score.ids = ids;
  result.review_score.values.resize(ids.size());
  const bool use_account = !config.account_features.empty();
  const bool use_review = !config.review_features.empty();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Review& r = graph.review(ids[i]);
    double su = result.account_score[r.account.value];
    double sr = result.review_feature_score[r.id.value];
    double s = 0.0;
    if (use_account && use_review) {
      s = 0.5 * (su + sr);
    } else if (use_account) {
      s = su;
    } else if (use_review) {
      s = sr;
    }
    result.review_score.values[i] = std::clamp(s, 0.0, 1.0);
  }
  return result;
}

ScoreVector PriorScores(const ReviewGraph& graph, const PriorConfig& config) {
  return ComputePrior(graph, config).review_score;
}

std::vector<double> ProductSuspicion(const ReviewGraph& graph,
                                     const PriorResult& prior) {
  std::vector<double> out(graph.num_products(), 0.0);
  for (std::size_t i = 0; i < prior.review_score.ids.size(); ++i) {
    const Review& r = graph.review(prior.review_score.ids[i]);
    out[r.product.value] += prior.review_score.values[i];
  }
  for (std::uint32_t p = 0; p < graph.num_products(); ++p) {
    int deg = graph.ProductDegree(ProductId(p));
    if (deg > 0) out[p] /= deg;
  }
  return out;
}

}  // namespace spamgame
