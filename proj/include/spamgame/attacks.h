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

// Base spamming strategies, the mixed strategy over them and campaign
// execution with per-strategy attribution.

#ifndef SPAMGAME_ATTACKS_H_
#define SPAMGAME_ATTACKS_H_

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spamgame/behavior.h"
#include "spamgame/economics.h"
#include "spamgame/linbp.h"
#include "spamgame/review_graph.h"

namespace spamgame {

using Rng = std::mt19937_64;

enum class AttackKind { kIncBP, kIncDS, kIncPR, kRandom, kSingleton };

inline constexpr AttackKind kAllAttacks[] = {
    AttackKind::kIncBP, AttackKind::kIncDS, AttackKind::kIncPR,
    AttackKind::kRandom, AttackKind::kSingleton};

std::string_view AttackName(AttackKind kind);
AttackKind ParseAttack(std::string_view name);

enum class RatingPolicy { kFiveStar, kFourToFive };

// Posting window and rating policy used by the spammer.
enum class Camouflage { kWeak, kMedium, kStrong };

std::string_view CamouflageName(Camouflage level);
Camouflage ParseCamouflage(std::string_view name);
int CamouflageWindowDays(Camouflage level);
RatingPolicy CamouflageRatingPolicy(Camouflage level);

struct AttackResources {
  std::vector<AccountId> elite_controlled;
  int singleton_pool_size = 0;
  std::vector<ProductId> targets;
  int spams_per_target = 1;
  int posting_window_days = 1;
  RatingPolicy rating_policy = RatingPolicy::kFiveStar;
};

// Throws std::invalid_argument when `resources` is unusable on `graph`,
// including controlled accounts that are not elite.
void Validate(const AttackResources& resources, const ReviewGraph& graph,
              int elite_threshold);

struct ResourceConfig {
  int n_elite = 100;
  int n_targets = 30;
  int spams_per_target = 15;
  int singleton_pool = 450;
  Camouflage camouflage = Camouflage::kWeak;
};

// Controlled elites are the n_elite elite accounts with the lowest Prior
// account score (ties by id), skipping `exclude`. Targets are the n_targets
// products with the lowest mean Prior review score.
AttackResources SelectResources(const ReviewGraph& graph,
                                const ResourceConfig& config,
                                int elite_threshold,
                                const PriorConfig& prior = {},
                                std::span<const AccountId> exclude = {});

struct MixedSpamStrategy {
  std::vector<AttackKind> strategies;
  std::vector<double> p;
  double epsilon = 0.1;
};

// With probability epsilon uniform over the K strategies, otherwise a draw
// from p.
int SampleStrategy(std::span<const double> p, double epsilon, Rng& rng);

// The `count` candidates with the lowest score, ties by ascending id. When
// count exceeds the candidates, the ranking repeats.
std::vector<AccountId> LowestScoring(std::span<const AccountId> candidates,
                                     std::span<const double> score_by_account,
                                     int count);

// LinBP posterior of every account on `replica`, priors from Prior.
std::vector<double> IncBPScores(const ReviewGraph& replica,
                                const PriorConfig& prior,
                                const LinBPConfig& linbp);

// Prior account scores on `replica`.
std::vector<double> IncPRScores(const ReviewGraph& replica,
                                const PriorConfig& prior);

// |R(u)| / sum over u's reviews of the reviewed product's degree.
double AccountDensity(const ReviewGraph& graph, AccountId u);

// AccountDensity of each candidate after one hypothetical review of
// `target`, indexed by account id (other entries 0).
std::vector<double> IncDSScores(const ReviewGraph& replica,
                                std::span<const AccountId> candidates,
                                ProductId target);

struct CampaignConfig {
  EconMode mode = EconMode::kPromotion;
  // Strategy replicas keep their own injections across targets; otherwise
  // every target is attacked against the pre-attack graph.
  bool cross_target_updates = true;
  PriorConfig prior;
  LinBPConfig linbp;
};

struct InjectedSpam {
  ReviewId id;
  AccountId account;
  ProductId target;
  int strategy = 0;
  int rating = 0;
};

struct CampaignRecord {
  std::vector<InjectedSpam> injected;
  // Strategy index -> targets it attacked, in attack order.
  std::map<int, std::vector<ProductId>> attacked_by;
};

// Attacks each target in order with one sampled strategy posting
// spams_per_target reviews. Dates are uniform over the posting window that
// starts the day after the latest review in `graph`.
CampaignRecord RunCampaign(ReviewGraph& graph, const AttackResources& resources,
                           const MixedSpamStrategy& strategy,
                           const CampaignConfig& config, Rng& rng);

// Same, but every target uses the given fixed strategy assignment.
CampaignRecord RunCampaignWithAssignment(ReviewGraph& graph,
                                         const AttackResources& resources,
                                         std::span<const AttackKind> strategies,
                                         std::span<const int> assignment,
                                         const CampaignConfig& config, Rng& rng);

nlohmann::json ToJson(const CampaignRecord& record,
                      std::span<const AttackKind> strategies);

}  // namespace spamgame

#endif  // SPAMGAME_ATTACKS_H_
