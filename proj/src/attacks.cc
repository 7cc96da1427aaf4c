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

#include "spamgame/attacks.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace spamgame {
namespace {

int PolicyRating(RatingPolicy policy, EconMode mode, Rng& rng) {
  int high = 5;
  if (policy == RatingPolicy::kFourToFive) {
    high = std::uniform_int_distribution<int>(4, 5)(rng);
  }
  return mode == EconMode::kPromotion ? high : 6 - high;
}

std::string FreshAccountName(const ReviewGraph& graph, std::size_t& counter) {
  std::string name;
  do {
    name = "new" + std::to_string(counter++);
  } while (graph.FindAccount(name).has_value());
  return name;
}

}  // namespace

std::string_view AttackName(AttackKind kind) {
  switch (kind) {
    case AttackKind::kIncBP: return "IncBP";
    case AttackKind::kIncDS: return "IncDS";
    case AttackKind::kIncPR: return "IncPR";
    case AttackKind::kRandom: return "Random";
    case AttackKind::kSingleton: return "Singleton";
  }
  return "?";
}

AttackKind ParseAttack(std::string_view name) {
  for (AttackKind k : kAllAttacks) {
    if (AttackName(k) == name) return k;
  }
  throw std::invalid_argument("unknown attack: " + std::string(name));
}

std::string_view CamouflageName(Camouflage level) {
  switch (level) {
    case Camouflage::kWeak: return "weak";
    case Camouflage::kMedium: return "medium";
    case Camouflage::kStrong: return "strong";
  }
  return "?";
}

Camouflage ParseCamouflage(std::string_view name) {
  for (Camouflage c : {Camouflage::kWeak, Camouflage::kMedium, Camouflage::kStrong}) {
    if (CamouflageName(c) == name) return c;
  }
  throw std::invalid_argument("unknown camouflage level: " + std::string(name));
}

int CamouflageWindowDays(Camouflage level) {
  switch (level) {
    case Camouflage::kWeak: return 1;
    case Camouflage::kMedium: return 5;
    case Camouflage::kStrong: return 15;
  }
  return 1;
}

RatingPolicy CamouflageRatingPolicy(Camouflage level) {
  return level == Camouflage::kWeak ? RatingPolicy::kFiveStar
                                    : RatingPolicy::kFourToFive;
}

void Validate(const AttackResources& resources, const ReviewGraph& graph,
              int elite_threshold) {
  if (resources.spams_per_target < 1) {
    throw std::invalid_argument("spams_per_target must be >= 1");
  }
  if (resources.posting_window_days < 1) {
    throw std::invalid_argument("posting_window_days must be >= 1");
  }
  if (resources.singleton_pool_size < 0) {
    throw std::invalid_argument("singleton pool must be >= 0");
  }
  for (AccountId a : resources.elite_controlled) {
    if (!graph.HasAccount(a)) throw std::invalid_argument("unknown controlled account");
    if (!IsElite(graph, a, elite_threshold)) {
      throw std::invalid_argument("controlled account " + graph.account(a).name +
                                  " is not elite");
    }
  }
  std::vector<ProductId> sorted = resources.targets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate target");
  }
  for (ProductId v : sorted) {
    if (!graph.HasProduct(v)) throw std::invalid_argument("unknown target product");
  }
}

AttackResources SelectResources(const ReviewGraph& graph,
                                const ResourceConfig& config,
                                int elite_threshold, const PriorConfig& prior,
                                std::span<const AccountId> exclude) {
  if (config.n_elite < 0 || config.n_targets < 1 || config.spams_per_target < 1 ||
      config.singleton_pool < 0) {
    throw std::invalid_argument("invalid resource configuration");
  }
  const PriorResult scores = ComputePrior(graph, prior);
  std::vector<AccountId> elites;
  for (AccountId a : EliteAccounts(graph, elite_threshold)) {
    if (std::find(exclude.begin(), exclude.end(), a) == exclude.end()) {
      elites.push_back(a);
    }
  }
  if (static_cast<int>(elites.size()) < config.n_elite) {
    throw std::invalid_argument("not enough elite accounts: need " +
                                std::to_string(config.n_elite) + ", have " +
                                std::to_string(elites.size()));
  }
  std::stable_sort(elites.begin(), elites.end(), [&](AccountId a, AccountId b) {
    return scores.account_score[a.value] < scores.account_score[b.value];
  });
  elites.resize(config.n_elite);
  std::sort(elites.begin(), elites.end());

  std::vector<double> suspicion = ProductSuspicion(graph, scores);
  std::vector<ProductId> products;
  for (std::uint32_t p = 0; p < graph.num_products(); ++p) {
    if (graph.ProductDegree(ProductId(p)) > 0) products.emplace_back(p);
  }
  if (static_cast<int>(products.size()) < config.n_targets) {
    throw std::invalid_argument("not enough reviewed products for the targets");
  }
  std::stable_sort(products.begin(), products.end(), [&](ProductId a, ProductId b) {
    return suspicion[a.value] < suspicion[b.value];
  });
  products.resize(config.n_targets);

  AttackResources out;
  out.elite_controlled = std::move(elites);
  out.singleton_pool_size = config.singleton_pool;
  out.targets = std::move(products);
  out.spams_per_target = config.spams_per_target;
  out.posting_window_days = CamouflageWindowDays(config.camouflage);
  out.rating_policy = CamouflageRatingPolicy(config.camouflage);
  return out;
}

int SampleStrategy(std::span<const double> p, double epsilon, Rng& rng) {
  if (p.empty()) throw std::invalid_argument("empty strategy distribution");
  const int k = static_cast<int>(p.size());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < epsilon) {
    return std::uniform_int_distribution<int>(0, k - 1)(rng);
  }
  double u = unit(rng), acc = 0.0;
  int last_positive = 0;
  for (int i = 0; i < k; ++i) {
    if (p[i] <= 0.0) continue;
    acc += p[i];
    last_positive = i;
    if (u < acc) return i;
  }
  return last_positive;
}

std::vector<AccountId> LowestScoring(std::span<const AccountId> candidates,
                                     std::span<const double> score_by_account,
                                     int count) {
  if (candidates.empty()) throw std::invalid_argument("no candidate accounts");
  std::vector<AccountId> ranked(candidates.begin(), candidates.end());
  std::sort(ranked.begin(), ranked.end(), [&](AccountId a, AccountId b) {
    double sa = score_by_account[a.value], sb = score_by_account[b.value];
    if (sa != sb) return sa < sb;
    return a < b;
  });
  std::vector<AccountId> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(ranked[i % ranked.size()]);
  return out;
}

std::vector<double> IncBPScores(const ReviewGraph& replica,
                                const PriorConfig& prior,
                                const LinBPConfig& linbp) {
  const PriorResult p = ComputePrior(replica, prior);
  std::vector<double> product_prior(replica.num_products(), 0.5);
  return RunLinBP(replica, p.account_score, product_prior, linbp).account_belief;
}

std::vector<double> IncPRScores(const ReviewGraph& replica,
                                const PriorConfig& prior) {
  return ComputePrior(replica, prior).account_score;
}

double AccountDensity(const ReviewGraph& graph, AccountId u) {
  double total = 0.0;
  auto reviews = graph.ReviewsOfAccount(u);
  for (ReviewId id : reviews) {
    total += graph.ProductDegree(graph.review(id).product);
  }
  return total > 0.0 ? static_cast<double>(reviews.size()) / total : 0.0;
}

std::vector<double> IncDSScores(const ReviewGraph& replica,
                                std::span<const AccountId> candidates,
                                ProductId target) {
  std::vector<double> out(replica.num_accounts(), 0.0);
  const double target_degree = replica.ProductDegree(target) + 1.0;
  for (AccountId u : candidates) {
    auto reviews = replica.ReviewsOfAccount(u);
    double total = target_degree;
    for (ReviewId id : reviews) {
      total += replica.ProductDegree(replica.review(id).product);
    }
    out[u.value] = (static_cast<double>(reviews.size()) + 1.0) / total;
  }
  return out;
}

CampaignRecord RunCampaign(ReviewGraph& graph, const AttackResources& resources,
                           const MixedSpamStrategy& strategy,
                           const CampaignConfig& config, Rng& rng) {
  if (strategy.p.size() != strategy.strategies.size()) {
    throw std::invalid_argument("p does not match the strategy list");
  }
  std::vector<int> assignment;
  assignment.reserve(resources.targets.size());
  for (std::size_t t = 0; t < resources.targets.size(); ++t) {
    assignment.push_back(SampleStrategy(strategy.p, strategy.epsilon, rng));
  }
  return RunCampaignWithAssignment(graph, resources, strategy.strategies,
                                   assignment, config, rng);
}

CampaignRecord RunCampaignWithAssignment(ReviewGraph& graph,
                                         const AttackResources& resources,
                                         std::span<const AttackKind> strategies,
                                         std::span<const int> assignment,
                                         const CampaignConfig& config, Rng& rng) {
  if (assignment.size() != resources.targets.size()) {
    throw std::invalid_argument("one strategy per target required");
  }
  bool needs_replica = false;
  for (int k : assignment) {
    if (k < 0 || k >= static_cast<int>(strategies.size())) {
      throw std::invalid_argument("strategy index out of range");
    }
    AttackKind kind = strategies[k];
    needs_replica |= kind == AttackKind::kIncBP || kind == AttackKind::kIncDS ||
                     kind == AttackKind::kIncPR;
  }
  std::optional<ReviewGraph> pristine;
  if (needs_replica) pristine.emplace(graph);
  std::map<int, ReviewGraph> replicas;
  auto replica_for = [&](int k) -> ReviewGraph& {
    auto it = replicas.find(k);
    if (it == replicas.end()) it = replicas.emplace(k, *pristine).first;
    return it->second;
  };

  const Day first_day = graph.MaxDate() + 1;
  std::uniform_int_distribution<int> offset(0, resources.posting_window_days - 1);
  int singletons_used = 0;
  std::size_t name_counter = 0;
  const int n = resources.spams_per_target;
  CampaignRecord record;

  for (std::size_t t = 0; t < resources.targets.size(); ++t) {
    const ProductId target = resources.targets[t];
    const int k = assignment[t];
    const AttackKind kind = strategies[k];
    std::span<const AccountId> elites = resources.elite_controlled;
    std::vector<AccountId> accounts;
    ReviewGraph* replica = nullptr;
    switch (kind) {
      case AttackKind::kIncBP:
        replica = &replica_for(k);
        accounts = LowestScoring(elites, IncBPScores(*replica, config.prior, config.linbp), n);
        break;
      case AttackKind::kIncDS:
        replica = &replica_for(k);
        accounts = LowestScoring(elites, IncDSScores(*replica, elites, target), n);
        break;
      case AttackKind::kIncPR:
        replica = &replica_for(k);
        accounts = LowestScoring(elites, IncPRScores(*replica, config.prior), n);
        break;
      case AttackKind::kRandom: {
        if (elites.empty()) throw std::invalid_argument("no controlled accounts");
        std::vector<AccountId> pool(elites.begin(), elites.end());
        for (int i = 0; i < n; ++i) {
          const std::size_t j = i % pool.size();
          if (j == 0) std::shuffle(pool.begin(), pool.end(), rng);
          accounts.push_back(pool[j]);
        }
        break;
      }
      case AttackKind::kSingleton:
        if (singletons_used + n > resources.singleton_pool_size) {
          throw std::runtime_error("singleton account pool exhausted");
        }
        for (int i = 0; i < n; ++i) {
          accounts.push_back(graph.AddAccount(FreshAccountName(graph, name_counter),
                                              Registration::kNew));
        }
        singletons_used += n;
        break;
    }

    for (AccountId a : accounts) {
      InjectionSpec spec;
      spec.account = a;
      spec.product = target;
      spec.rating = PolicyRating(resources.rating_policy, config.mode, rng);
      spec.date = first_day + offset(rng);
      spec.strategy_index = k;
      ReviewId id = graph.InjectReview(spec);
      if (replica != nullptr && config.cross_target_updates) {
        replica->InjectReview(spec);
      }
      record.injected.push_back({id, a, target, k, spec.rating});
    }
    record.attacked_by[k].push_back(target);
  }
  return record;
}

nlohmann::json ToJson(const CampaignRecord& record,
                      std::span<const AttackKind> strategies) {
  nlohmann::json injected = nlohmann::json::array();
  for (const InjectedSpam& s : record.injected) {
    injected.push_back({{"review", s.id.value},
                        {"account", s.account.value},
                        {"target", s.target.value},
                        {"strategy", AttackName(strategies[s.strategy])},
                        {"rating", s.rating}});
  }
  nlohmann::json attacked = nlohmann::json::object();
  for (const auto& [k, targets] : record.attacked_by) {
    nlohmann::json list = nlohmann::json::array();
    for (ProductId v : targets) list.push_back(v.value);
    attacked[std::string(AttackName(strategies[k]))] = list;
  }
  return {{"injected", injected}, {"attacked_by", attacked}};
}

}  // namespace spamgame
