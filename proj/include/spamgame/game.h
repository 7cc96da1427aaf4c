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

// The alternating attacker/defender training loop.
//
// Each episode replays a sampled spam campaign on a fresh copy of the
// pre-attack graph, screens the top-k% reviews under the current detector
// weights, measures the practical effect of the surviving spams, then
// updates the attack mixture p from per-strategy rewards and the detector
// weights q by projected gradient descent on the false-negative loss.

#ifndef SPAMGAME_GAME_H_
#define SPAMGAME_GAME_H_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "json.hpp"
#include "spamgame/attacks.h"
#include "spamgame/detectors.h"
#include "spamgame/economics.h"
#include "spamgame/review_graph.h"

namespace spamgame {

struct GameConfig {
  int episodes = 50;
  double eta = 0.01;
  double epsilon = 0.1;
  double q_learning_rate = 1000.0;
  int q_steps = 10;
  double top_k_percent = 1.0;
  // Early stopping on relative loss change; off by default so that every run
  // lasts `episodes` episodes.
  bool early_stop = false;
  double tolerance = 1e-4;
  int patience = 5;
  EconParams econ;
  std::vector<AttackKind> attacks{std::begin(kAllAttacks), std::end(kAllAttacks)};
  std::vector<DetectorKind> detectors{std::begin(kAllDetectors),
                                      std::end(kAllDetectors)};
  // Initial distributions; empty means uniform.
  std::vector<double> p0;
  std::vector<double> q0;
  DetectorConfig detector;
  bool cross_target_updates = true;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument on out-of-range fields.
void Validate(const GameConfig& config);

std::vector<double> InitialP(const GameConfig& config);
std::vector<double> InitialQ(const GameConfig& config);

// G(a_k) = sum over targets v attacked by a_k of
// sigma((x(v) - mean x) / (max x - min x)), where x = PE when promoting and
// -PE when demoting; the argument is 0 when all x are equal.
std::vector<double> StrategyRewards(const std::map<ProductId, double>& pe,
                                    const std::map<int, std::vector<ProductId>>& attacked_by,
                                    int num_strategies,
                                    EconMode mode = EconMode::kPromotion);

// p_k proportional to p0_k + eta * cumulative_k, normalized.
std::vector<double> UpdateP(std::span<const double> p0,
                            std::span<const double> cumulative, double eta);

// Result of screening one attacked graph with one weight vector.
struct DefenseOutcome {
  std::vector<ReviewId> removed;
  std::vector<SurvivingSpam> survivors;
  // Indices into CampaignRecord::injected of the surviving spams.
  std::vector<std::size_t> surviving_index;
  PEReport report;
};

DefenseOutcome Defend(const ReviewGraph& attacked, const CampaignRecord& campaign,
                      const ScoreMatrix& scores, std::span<const double> q,
                      double top_k_percent, const RevenueLedger& ledger,
                      std::span<const ProductId> targets);

// False-negative samples with their costs for the loss.
std::vector<FalseNegative> FalseNegatives(const ReviewGraph& attacked,
                                          const CampaignRecord& campaign,
                                          const DefenseOutcome& outcome,
                                          const ScoreMatrix& scores,
                                          const EconParams& params);

struct EpisodeTrace {
  int t = 0;
  std::vector<double> p_before, p_after;
  std::vector<double> q_before, q_after;
  std::map<ProductId, double> pe;
  double objective = 0.0;
  std::vector<double> rewards;
  std::vector<int> targets_attacked;
  // Loss at q_before and after the gradient steps.
  double loss = 0.0;
  double loss_after = 0.0;
  int injected = 0;
  int removed = 0;
  int false_negatives = 0;
};

nlohmann::json ToJson(const EpisodeTrace& trace, const GameConfig& config);

struct GameState {
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> cumulative_reward;
};

GameState InitialState(const GameConfig& config);

// One episode on a copy of `pristine`; advances `state`.
EpisodeTrace RunEpisode(const ReviewGraph& pristine, const RevenueLedger& ledger,
                        const AttackResources& resources, GameState& state,
                        const GameConfig& config, int t);

struct TrainResult {
  std::vector<double> p_star;
  std::vector<double> q_star;
  std::vector<EpisodeTrace> traces;
  bool converged = false;
};

TrainResult Train(const ReviewGraph& pristine, const AttackResources& resources,
                  const GameConfig& config,
                  const std::function<void(const EpisodeTrace&)>& on_episode = {});

// Random stream for (seed, stream, index).
Rng MakeRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

nlohmann::json StrategyJson(const TrainResult& result, const GameConfig& config);

}  // namespace spamgame

#endif  // SPAMGAME_GAME_H_
