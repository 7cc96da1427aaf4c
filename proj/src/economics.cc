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

#include "spamgame/economics.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace spamgame {
namespace {

double SafeMean(double sum, double count) {
  return count > 0 ? sum / count : 0.0;
}

void RequireProduct(const ReviewGraph& graph, ProductId v) {
  if (!graph.HasProduct(v)) {
    throw GraphError("unknown product " + std::to_string(v.value));
  }
}

}  // namespace

void Validate(const EconParams& params) {
  if (!(params.beta0 > 0.0) || !(params.beta1 > 0.0)) {
    throw std::invalid_argument("beta0 and beta1 must be positive");
  }
  if (params.elite_threshold < 1) {
    throw std::invalid_argument("elite threshold must be >= 1");
  }
}

double MeanRating(std::span<const int> ratings) {
  double sum = 0.0;
  for (int r : ratings) sum += r;
  return SafeMean(sum, static_cast<double>(ratings.size()));
}

double MeanRating(const ReviewGraph& graph, std::span<const ReviewId> reviews) {
  double sum = 0.0;
  for (ReviewId id : reviews) sum += graph.review(id).rating;
  return SafeMean(sum, static_cast<double>(reviews.size()));
}

double ReviewInfluence(const ReviewGraph& graph, ProductId v) {
  RequireProduct(graph, v);
  double sum = 0.0;
  graph.ForEachReview([&](const Review& r) { sum += r.rating; });
  double global = SafeMean(sum, static_cast<double>(graph.num_reviews()));
  return MeanRating(graph, graph.ReviewsOfProduct(v)) - global;
}

double EliteReviewInfluence(const ReviewGraph& graph, ProductId v,
                            int elite_threshold) {
  RequireProduct(graph, v);
  double sum = 0.0, count = 0.0;
  for (ReviewId id : graph.ReviewsOfProduct(v)) {
    const Review& r = graph.review(id);
    if (IsElite(graph, r.account, elite_threshold)) {
      sum += r.rating;
      count += 1.0;
    }
  }
  return SafeMean(sum, count);
}

double Revenue(const ReviewGraph& graph, ProductId v, const EconParams& params) {
  return params.beta0 * ReviewInfluence(graph, v) +
         params.beta1 * EliteReviewInfluence(graph, v, params.elite_threshold) +
         params.alpha;
}

double PracticalEffect(const ReviewGraph& before, const ReviewGraph& after,
                       ProductId v, const EconParams& params) {
  return Revenue(after, v, params) - Revenue(before, v, params);
}

PEReport ComputePEReport(const ReviewGraph& before, const ReviewGraph& after,
                         std::span<const ProductId> targets,
                         const EconParams& params) {
  PEReport report;
  std::vector<double> pes;
  for (ProductId v : targets) {
    double dri = ReviewInfluence(after, v) - ReviewInfluence(before, v);
    double deri = EliteReviewInfluence(after, v, params.elite_threshold) -
                  EliteReviewInfluence(before, v, params.elite_threshold);
    double pe = PracticalEffect(before, after, v, params);
    report.delta_ri[v] = dri;
    report.delta_eri[v] = deri;
    report.per_target[v] = pe;
    pes.push_back(pe);
  }
  report.objective = CampaignObjective(pes, params.mode);
  return report;
}

double CampaignObjective(std::span<const double> pe, EconMode mode) {
  double total = 0.0;
  for (double x : pe) {
    total += mode == EconMode::kPromotion ? std::max(0.0, x) : std::min(0.0, x);
  }
  return total;
}

double FnCost(const FnCostInput& in, const EconParams& params) {
  const bool promoting = params.mode == EconMode::kPromotion;
  if (promoting ? in.pe <= 0.0 : in.pe >= 0.0) return 0.0;
  double cost = 0.0;
  if (in.non_elite_spams > 0) {
    cost += params.beta0 * in.delta_ri / in.non_elite_spams;
  }
  if (in.review_is_elite && in.elite_spams > 0) {
    cost += params.beta1 * in.delta_eri / in.elite_spams;
  }
  if (!promoting) cost = -cost;
  return std::max(0.0, cost);
}

RevenueLedger::RevenueLedger(const ReviewGraph& pristine,
                             const EconParams& params)
    : pristine_(&pristine),
      params_(params),
      product_sum_(pristine.num_products(), 0.0),
      product_count_(pristine.num_products(), 0.0),
      elite_sum_(pristine.num_products(), 0.0),
      elite_count_(pristine.num_products(), 0.0) {
  Validate(params);
  pristine.ForEachReview([&](const Review& r) {
    rating_sum_ += r.rating;
    rating_count_ += 1.0;
    product_sum_[r.product.value] += r.rating;
    product_count_[r.product.value] += 1.0;
    if (IsElite(pristine, r.account, params.elite_threshold)) {
      elite_sum_[r.product.value] += r.rating;
      elite_count_[r.product.value] += 1.0;
    }
  });
}

PEReport RevenueLedger::Evaluate(std::span<const SurvivingSpam> survivors,
                                 std::span<const ProductId> targets) const {
  const ReviewGraph& g = *pristine_;
  const int threshold = params_.elite_threshold;

  std::unordered_map<std::uint32_t, int> added_degree;
  for (const SurvivingSpam& s : survivors) ++added_degree[s.account.value];
  auto pristine_degree = [&](AccountId a) {
    return g.HasAccount(a) ? g.AccountDegree(a) : 0;
  };
  auto elite_after = [&](AccountId a) {
    auto it = added_degree.find(a.value);
    int extra = it == added_degree.end() ? 0 : it->second;
    return pristine_degree(a) + extra > threshold;
  };

  double global_sum = rating_sum_, global_count = rating_count_;
  for (const SurvivingSpam& s : survivors) {
    global_sum += s.rating;
    global_count += 1.0;
  }
  const double global_before = SafeMean(rating_sum_, rating_count_);
  const double global_after = SafeMean(global_sum, global_count);

  // Pristine accounts pushed over the elite threshold by their surviving
  // spams turn all of their earlier reviews into elite reviews.
  std::unordered_set<std::uint32_t> promoted;
  for (const auto& [account, extra] : added_degree) {
    AccountId a(account);
    if (g.HasAccount(a) && pristine_degree(a) <= threshold && elite_after(a)) {
      promoted.insert(account);
    }
  }

  PEReport report;
  std::vector<double> pes;
  pes.reserve(targets.size());
  for (ProductId v : targets) {
    RequireProduct(g, v);
    double sum = product_sum_[v.value], count = product_count_[v.value];
    double esum = elite_sum_[v.value], ecount = elite_count_[v.value];
    for (const SurvivingSpam& s : survivors) {
      if (s.product != v) continue;
      sum += s.rating;
      count += 1.0;
      if (elite_after(s.account)) {
        esum += s.rating;
        ecount += 1.0;
      }
    }
    if (!promoted.empty()) {
      for (ReviewId id : g.ReviewsOfProduct(v)) {
        const Review& r = g.review(id);
        if (promoted.contains(r.account.value)) {
          esum += r.rating;
          ecount += 1.0;
        }
      }
    }
    const double ri_before =
        SafeMean(product_sum_[v.value], product_count_[v.value]) - global_before;
    const double ri_after = SafeMean(sum, count) - global_after;
    const double eri_before =
        SafeMean(elite_sum_[v.value], elite_count_[v.value]);
    const double eri_after = SafeMean(esum, ecount);
    const double dri = ri_after - ri_before;
    const double deri = eri_after - eri_before;
    const double pe = params_.beta0 * dri + params_.beta1 * deri;
    report.delta_ri[v] = dri;
    report.delta_eri[v] = deri;
    report.per_target[v] = pe;
    pes.push_back(pe);
  }
  report.objective = CampaignObjective(pes, params_.mode);
  return report;
}

nlohmann::json ToJson(const PEReport& report) {
  nlohmann::json targets = nlohmann::json::array();
  for (const auto& [v, pe] : report.per_target) {
    targets.push_back({{"product", v.value},
                       {"pe", pe},
                       {"delta_ri", report.delta_ri.at(v)},
                       {"delta_eri", report.delta_eri.at(v)}});
  }
  return {{"objective", report.objective}, {"targets", targets}};
}

}  // namespace spamgame
