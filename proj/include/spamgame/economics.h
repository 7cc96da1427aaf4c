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

// Revenue model of a product and the practical effect of surviving spams.
//
//   f(v) = beta0 * (g(R(v)) - g(R)) + beta1 * g(R_E(v)) + alpha
//
// where g is the mean rating, R(v) the reviews of v, R all reviews and
// R_E(v) the reviews of v written by elite accounts. The practical effect of
// a campaign on v is f(v) after the attack and detection minus f(v) before.

#ifndef SPAMGAME_ECONOMICS_H_
#define SPAMGAME_ECONOMICS_H_

#include <map>
#include <span>
#include <vector>

#include "json.hpp"
#include "spamgame/review_graph.h"

namespace spamgame {

enum class EconMode { kPromotion, kDemotion };

struct EconParams {
  double beta0 = 0.035;
  double beta1 = 0.036;
  double alpha = 1.0;
  int elite_threshold = 10;
  EconMode mode = EconMode::kPromotion;
};

void Validate(const EconParams& params);

struct PEReport {
  std::map<ProductId, double> per_target;
  std::map<ProductId, double> delta_ri;
  std::map<ProductId, double> delta_eri;
  double objective = 0.0;
};

// Arithmetic mean; 0 for an empty input.
double MeanRating(std::span<const int> ratings);
double MeanRating(const ReviewGraph& graph, std::span<const ReviewId> reviews);

double Revenue(const ReviewGraph& graph, ProductId v, const EconParams& params);

// Review influence g(R(v)) - g(R) and elite review influence g(R_E(v)).
double ReviewInfluence(const ReviewGraph& graph, ProductId v);
double EliteReviewInfluence(const ReviewGraph& graph, ProductId v,
                            int elite_threshold);

// f(v; after) - f(v; before), both recomputed from scratch.
double PracticalEffect(const ReviewGraph& before, const ReviewGraph& after,
                       ProductId v, const EconParams& params);

// Full recomputation for every target.
PEReport ComputePEReport(const ReviewGraph& before, const ReviewGraph& after,
                         std::span<const ProductId> targets,
                         const EconParams& params);

// Sum of max{0, PE} (promotion) or min{0, PE} (demotion).
double CampaignObjective(std::span<const double> pe, EconMode mode);

struct FnCostInput {
  double delta_ri = 0.0;
  double delta_eri = 0.0;
  // Non-elite and elite spams posted towards the target.
  int non_elite_spams = 0;
  int elite_spams = 0;
  bool review_is_elite = false;
  double pe = 0.0;
};

// Cost of one false-negative spam on its target. Zero when the target's PE
// does not serve the campaign's direction (PE <= 0 when promoting, PE >= 0
// when demoting). In demotion mode the attributed cost is the magnitude of
// the (negative) revenue change. Costs are floored at 0.
double FnCost(const FnCostInput& in, const EconParams& params);

// A spam that survived detection, as seen by the revenue ledger.
struct SurvivingSpam {
  AccountId account;
  ProductId product;
  int rating = 0;

  bool operator==(const SurvivingSpam&) const = default;
};

// Incremental revenue bookkeeping against a fixed pristine graph.
//
// Aggregates of the pristine graph are computed once; the post-detection
// state is described by the list of surviving spams alone. Valid only when
// detection removes injected reviews exclusively, which the pipeline
// guarantees.
class RevenueLedger {
 public:
  RevenueLedger(const ReviewGraph& pristine, const EconParams& params);

  // PE for each target given the spams that survived detection.
  PEReport Evaluate(std::span<const SurvivingSpam> survivors,
                    std::span<const ProductId> targets) const;

  const EconParams& params() const { return params_; }

 private:
  const ReviewGraph* pristine_;
  EconParams params_;
  double rating_sum_ = 0.0;
  double rating_count_ = 0.0;
  std::vector<double> product_sum_;
  std::vector<double> product_count_;
  std::vector<double> elite_sum_;
  std::vector<double> elite_count_;
};

nlohmann::json ToJson(const PEReport& report);

}  // namespace spamgame

#endif  // SPAMGAME_ECONOMICS_H_
