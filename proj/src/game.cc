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

#include "spamgame/game.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spamgame {
namespace {

std::vector<double> Uniform(std::size_t n) {
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

nlohmann::json NamedVector(std::span<const double> values,
                           const std::vector<std::string>& names) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < values.size(); ++i) out[names[i]] = values[i];
  return out;
}

std::vector<std::string> AttackNames(const GameConfig& config) {
  std::vector<std::string> out;
  for (AttackKind k : config.attacks) out.emplace_back(AttackName(k));
  return out;
}

std::vector<std::string> DetectorNames(const GameConfig& config) {
  std::vector<std::string> out;
  for (DetectorKind k : config.detectors) out.emplace_back(DetectorName(k));
  return out;
}

}  // namespace

void Validate(const GameConfig& config) {
  if (config.episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  if (!(config.eta >= 0.0)) throw std::invalid_argument("eta must be >= 0");
  if (!(config.epsilon >= 0.0 && config.epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must be in [0, 1]");
  }
  if (!(config.q_learning_rate >= 0.0) || config.q_steps < 0) {
    throw std::invalid_argument("q learning rate and steps must be >= 0");
  }
  if (!(config.top_k_percent > 0.0 && config.top_k_percent <= 100.0)) {
    throw std::invalid_argument("top_k_percent must be in (0, 100]");
  }
  if (config.patience < 1 || !(config.tolerance > 0.0)) {
    throw std::invalid_argument("patience and tolerance must be positive");
  }
  if (config.attacks.empty() || config.detectors.empty()) {
    throw std::invalid_argument("need at least one attack and one detector");
  }
  if (!config.p0.empty()) {
    if (config.p0.size() != config.attacks.size()) {
      throw std::invalid_argument("p0 size does not match attacks");
    }
    double sum = 0.0;
    for (double x : config.p0) {
      if (!(x >= 0.0)) throw std::invalid_argument("p0 must be nonnegative");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("p0 must sum to 1");
  }
  if (!config.q0.empty()) {
    if (config.q0.size() != config.detectors.size()) {
      throw std::invalid_argument("q0 size does not match detectors");
    }
    for (double x : config.q0) {
      if (!(x >= 0.0)) throw std::invalid_argument("q0 must be nonnegative");
    }
  }
  Validate(config.econ);
}

std::vector<double> InitialP(const GameConfig& config) {
  return config.p0.empty() ? Uniform(config.attacks.size()) : config.p0;
}

std::vector<double> InitialQ(const GameConfig& config) {
  return config.q0.empty() ? Uniform(config.detectors.size()) : config.q0;
}

std::vector<double> StrategyRewards(const std::map<ProductId, double>& pe,
                                    const std::map<int, std::vector<ProductId>>& attacked_by,
                                    int num_strategies, EconMode mode) {
  std::vector<double> rewards(num_strategies, 0.0);
  if (pe.empty()) return rewards;
  const double sign = mode == EconMode::kPromotion ? 1.0 : -1.0;
  double sum = 0.0, lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& [v, x] : pe) {
    const double y = sign * x;
    sum += y;
    lo = first ? y : std::min(lo, y);
    hi = first ? y : std::max(hi, y);
    first = false;
  }
  const double mean = sum / static_cast<double>(pe.size());
  const double range = hi - lo;
  for (const auto& [k, targets] : attacked_by) {
    if (k < 0 || k >= num_strategies) throw std::out_of_range("strategy index");
    for (ProductId v : targets) {
      const double y = sign * pe.at(v);
      rewards[k] += Sigmoid(range > 0.0 ? (y - mean) / range : 0.0);
    }
  }
  return rewards;
}

std::vector<double> UpdateP(std::span<const double> p0,
                            std::span<const double> cumulative, double eta) {
  if (p0.size() != cumulative.size()) throw std::invalid_argument("size mismatch");
  std::vector<double> p(p0.size());
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] = p0[k] + eta * cumulative[k];
    total += p[k];
  }
  if (!(total > 0.0)) throw std::invalid_argument("degenerate strategy weights");
  for (double& x : p) x /= total;
  return p;
}

DefenseOutcome Defend(const ReviewGraph& attacked, const CampaignRecord& campaign,
                      const ScoreMatrix& scores, std::span<const double> q,
                      double top_k_percent, const RevenueLedger& ledger,
                      std::span<const ProductId> targets) {
  DefenseOutcome out;
  const std::vector<double> prob = EnsembleProbabilities(scores, q);
  out.removed = RankAndRemove(attacked, scores.ids, prob, top_k_percent);
  for (std::size_t i = 0; i < campaign.injected.size(); ++i) {
    const InjectedSpam& s = campaign.injected[i];
    if (std::binary_search(out.removed.begin(), out.removed.end(), s.id)) continue;
    out.survivors.push_back({s.account, s.target, s.rating});
    out.surviving_index.push_back(i);
  }
  out.report = ledger.Evaluate(out.survivors, targets);
  return out;
}

std::vector<FalseNegative> FalseNegatives(const ReviewGraph& attacked,
                                          const CampaignRecord& campaign,
                                          const DefenseOutcome& outcome,
                                          const ScoreMatrix& scores,
                                          const EconParams& params) {
  // Elite status after detection: pre-attack degree plus surviving spams.
  std::map<AccountId, int> removed_per_account;
  for (ReviewId id : outcome.removed) ++removed_per_account[attacked.review(id).account];
  auto elite = [&](AccountId a) {
    auto it = removed_per_account.find(a);
    int removed = it == removed_per_account.end() ? 0 : it->second;
    return attacked.AccountDegree(a) - removed > params.elite_threshold;
  };

  std::map<ProductId, int> non_elite, elite_count;
  for (const InjectedSpam& s : campaign.injected) {
    ++(elite(s.account) ? elite_count : non_elite)[s.target];
  }
  std::vector<FalseNegative> out;
  out.reserve(outcome.surviving_index.size());
  for (std::size_t idx : outcome.surviving_index) {
    const InjectedSpam& s = campaign.injected[idx];
    FnCostInput in;
    in.delta_ri = outcome.report.delta_ri.at(s.target);
    in.delta_eri = outcome.report.delta_eri.at(s.target);
    in.non_elite_spams = non_elite[s.target];
    in.elite_spams = elite_count[s.target];
    in.review_is_elite = elite(s.account);
    in.pe = outcome.report.per_target.at(s.target);
    auto row = scores.row(scores.IndexOf(s.id));
    out.push_back({FnCost(in, params), {row.begin(), row.end()}});
  }
  return out;
}

nlohmann::json ToJson(const EpisodeTrace& trace, const GameConfig& config) {
  const auto attacks = AttackNames(config);
  const auto detectors = DetectorNames(config);
  nlohmann::json pe = nlohmann::json::object();
  for (const auto& [v, x] : trace.pe) pe[std::to_string(v.value)] = x;
  nlohmann::json attacked = nlohmann::json::object();
  for (std::size_t k = 0; k < trace.targets_attacked.size(); ++k) {
    attacked[attacks[k]] = trace.targets_attacked[k];
  }
  return {{"t", trace.t},
          {"p_before", NamedVector(trace.p_before, attacks)},
          {"p_after", NamedVector(trace.p_after, attacks)},
          {"q_before", NamedVector(trace.q_before, detectors)},
          {"q_after", NamedVector(trace.q_after, detectors)},
          {"pe", pe},
          {"objective", trace.objective},
          {"rewards", NamedVector(trace.rewards, attacks)},
          {"targets_attacked", attacked},
          {"loss", trace.loss},
          {"loss_after", trace.loss_after},
          {"injected", trace.injected},
          {"removed", trace.removed},
          {"false_negatives", trace.false_negatives}};
}

GameState InitialState(const GameConfig& config) {
  GameState s;
  s.p = InitialP(config);
  s.q = InitialQ(config);
  s.cumulative_reward.assign(config.attacks.size(), 0.0);
  return s;
}

Rng MakeRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

EpisodeTrace RunEpisode(const ReviewGraph& pristine, const RevenueLedger& ledger,
                        const AttackResources& resources, GameState& state,
                        const GameConfig& config, int t) {
  EpisodeTrace trace;
  trace.t = t;
  trace.p_before = state.p;
  trace.q_before = state.q;

  Rng rng = MakeRng(config.seed, 1, static_cast<std::uint64_t>(t));
  ReviewGraph graph = pristine;
  CampaignConfig campaign_config;
  campaign_config.mode = config.econ.mode;
  campaign_config.cross_target_updates = config.cross_target_updates;
  campaign_config.prior = config.detector.prior;
  campaign_config.linbp = config.detector.linbp;
  MixedSpamStrategy mixed{config.attacks, state.p, config.epsilon};
  CampaignRecord campaign = RunCampaign(graph, resources, mixed, campaign_config, rng);

  ScoreMatrix scores = ScoreAll(graph, config.detectors, config.detector);
  DefenseOutcome outcome = Defend(graph, campaign, scores, state.q,
                                  config.top_k_percent, ledger, resources.targets);

  trace.pe = outcome.report.per_target;
  trace.objective = outcome.report.objective;
  trace.injected = static_cast<int>(campaign.injected.size());
  trace.removed = static_cast<int>(outcome.removed.size());
  trace.false_negatives = static_cast<int>(outcome.survivors.size());

  const int K = static_cast<int>(config.attacks.size());
  trace.rewards = StrategyRewards(outcome.report.per_target, campaign.attacked_by, K,
                                  config.econ.mode);
  trace.targets_attacked.assign(K, 0);
  for (const auto& [k, targets] : campaign.attacked_by) {
    trace.targets_attacked[k] = static_cast<int>(targets.size());
    if (!targets.empty()) {
      state.cumulative_reward[k] += trace.rewards[k] / static_cast<double>(targets.size());
    }
  }
  state.p = UpdateP(InitialP(config), state.cumulative_reward, config.eta);

  const std::vector<FalseNegative> fn =
      FalseNegatives(graph, campaign, outcome, scores, config.econ);
  trace.loss = DetectorLoss(fn, state.q).loss;
  for (int step = 0; step < config.q_steps; ++step) {
    LossGradient lg = DetectorLoss(fn, state.q);
    ProjectedStep(state.q, lg.gradient, config.q_learning_rate);
  }
  trace.loss_after = DetectorLoss(fn, state.q).loss;
  trace.p_after = state.p;
  trace.q_after = state.q;
  return trace;
}

TrainResult Train(const ReviewGraph& pristine, const AttackResources& resources,
                  const GameConfig& config,
                  const std::function<void(const EpisodeTrace&)>& on_episode) {
  Validate(config);
  Validate(resources, pristine, config.econ.elite_threshold);
  RevenueLedger ledger(pristine, config.econ);
  GameState state = InitialState(config);
  TrainResult result;
  int calm = 0;
  for (int t = 1; t <= config.episodes; ++t) {
    EpisodeTrace trace = RunEpisode(pristine, ledger, resources, state, config, t);
    if (!result.traces.empty()) {
      const double prev = result.traces.back().loss;
      const double scale = std::max(std::abs(prev), 1e-12);
      calm = std::abs(trace.loss - prev) <= config.tolerance * scale ? calm + 1 : 0;
    }
    if (on_episode) on_episode(trace);
    result.traces.push_back(std::move(trace));
    if (calm >= config.patience) {
      result.converged = true;
      if (config.early_stop) break;
    }
  }
  result.p_star = state.p;
  result.q_star = state.q;
  return result;
}

nlohmann::json StrategyJson(const TrainResult& result, const GameConfig& config) {
  return {{"attacks", AttackNames(config)},
          {"detectors", DetectorNames(config)},
          {"p", result.p_star},
          {"q", result.q_star},
          {"episodes", result.traces.size()},
          {"converged", result.converged}};
}

}  // namespace spamgame
