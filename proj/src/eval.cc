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

#include "spamgame/eval.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "spamgame/config.h"

namespace spamgame {
namespace {

CampaignConfig CampaignSettings(const GameConfig& config) {
  CampaignConfig c;
  c.mode = config.econ.mode;
  c.cross_target_updates = config.cross_target_updates;
  c.prior = config.detector.prior;
  c.linbp = config.detector.linbp;
  return c;
}

std::vector<double> UnitWeights(std::size_t n, std::size_t l) {
  std::vector<double> q(n, 0.0);
  q[l] = 1.0;
  return q;
}

double Objective(const AttackedSnapshot& s, std::span<const double> q,
                 double top_k_percent, const RevenueLedger& ledger,
                 std::span<const ProductId> targets) {
  return Defend(s.graph, s.campaign, s.scores, q, top_k_percent, ledger, targets)
      .report.objective;
}

}  // namespace

AttackedSnapshot Attack(const ReviewGraph& pristine, const AttackResources& resources,
                        const GameConfig& config, std::span<const double> p,
                        Rng& rng) {
  AttackedSnapshot s{pristine, {}, {}};
  MixedSpamStrategy mixed{config.attacks, {p.begin(), p.end()}, config.epsilon};
  s.campaign = RunCampaign(s.graph, resources, mixed, CampaignSettings(config), rng);
  s.scores = ScoreAll(s.graph, config.detectors, config.detector);
  return s;
}

AttackedSnapshot AttackWithAssignment(const ReviewGraph& pristine,
                                      const AttackResources& resources,
                                      const GameConfig& config,
                                      std::span<const int> assignment, Rng& rng) {
  AttackedSnapshot s{pristine, {}, {}};
  s.campaign = RunCampaignWithAssignment(s.graph, resources, config.attacks, assignment,
                                         CampaignSettings(config), rng);
  s.scores = ScoreAll(s.graph, config.detectors, config.detector);
  return s;
}

std::vector<CurvePoint> CurveFromSnapshot(const AttackedSnapshot& snapshot,
                                          std::span<const double> q,
                                          std::span<const double> thresholds,
                                          const RevenueLedger& ledger,
                                          std::span<const ProductId> targets) {
  const double injected = static_cast<double>(snapshot.campaign.injected.size());
  std::vector<CurvePoint> out;
  for (double t : thresholds) {
    if (!(t >= 0.0 && t <= 100.0)) throw std::invalid_argument("threshold outside [0,100]");
    DefenseOutcome o =
        Defend(snapshot.graph, snapshot.campaign, snapshot.scores, q, 100.0 - t, ledger, targets);
    CurvePoint pt;
    pt.threshold = t;
    pt.recall = injected > 0 ? static_cast<double>(o.removed.size()) / injected : 0.0;
    pt.objective = o.report.objective;
    out.push_back(pt);
  }
  return out;
}

std::vector<CurvePoint> PeRecallCurve(const ReviewGraph& pristine,
                                      const AttackResources& resources,
                                      const GameConfig& config,
                                      std::span<const double> p,
                                      std::span<const double> q,
                                      std::span<const double> thresholds,
                                      std::uint64_t seed) {
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (thresholds[i] > thresholds[i - 1]) {
      throw std::invalid_argument("thresholds must be descending");
    }
  }
  RevenueLedger ledger(pristine, config.econ);
  Rng rng = MakeRng(seed, 3, 0);
  AttackedSnapshot s = Attack(pristine, resources, config, p, rng);
  return CurveFromSnapshot(s, q, thresholds, ledger, resources.targets);
}

std::vector<double> WorstCaseMatrix::WorstCase() const {
  std::vector<double> out(detectors.size(), 0.0);
  for (std::size_t l = 0; l < detectors.size(); ++l) {
    for (std::size_t k = 0; k < attacks.size(); ++k) {
      if (std::abs(objective[k][l]) > std::abs(out[l])) out[l] = objective[k][l];
    }
  }
  return out;
}

double WorstCaseMatrix::BestWorstCase() const {
  std::vector<double> worst = WorstCase();
  if (worst.empty()) return 0.0;
  return *std::min_element(worst.begin(), worst.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  });
}

WorstCaseMatrix ComputeWorstCaseMatrix(const ReviewGraph& pristine,
                                       const AttackResources& resources,
                                       const GameConfig& config, std::uint64_t seed) {
  RevenueLedger ledger(pristine, config.econ);
  WorstCaseMatrix m;
  m.attacks = config.attacks;
  m.detectors = config.detectors;
  const std::size_t L = config.detectors.size();
  for (std::size_t k = 0; k < config.attacks.size(); ++k) {
    Rng rng = MakeRng(seed, 4, k);
    std::vector<int> assignment(resources.targets.size(), static_cast<int>(k));
    AttackedSnapshot s = AttackWithAssignment(pristine, resources, config, assignment, rng);
    std::vector<double> row;
    for (std::size_t l = 0; l < L; ++l) {
      row.push_back(Objective(s, UnitWeights(L, l), config.top_k_percent, ledger,
                              resources.targets));
    }
    m.objective.push_back(std::move(row));
  }
  return m;
}

double EvaluateDefender(const ReviewGraph& pristine, const AttackResources& resources,
                        const GameConfig& config, std::span<const double> p,
                        std::span<const double> q, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  RevenueLedger ledger(pristine, config.econ);
  double total = 0.0;
  for (int i = 0; i < trials; ++i) {
    Rng rng = MakeRng(seed, 5, static_cast<std::uint64_t>(i));
    AttackedSnapshot s = Attack(pristine, resources, config, p, rng);
    total += Objective(s, q, config.top_k_percent, ledger, resources.targets);
  }
  return total / trials;
}

std::vector<Defender> DeploymentDefenders(std::span<const double> q_star,
                                          std::span<const DetectorKind> detectors) {
  std::vector<Defender> out;
  out.push_back({"Trained", {q_star.begin(), q_star.end()}});
  for (std::size_t l = 0; l < detectors.size(); ++l) {
    out.push_back({std::string(DetectorName(detectors[l])),
                   UnitWeights(detectors.size(), l)});
  }
  out.push_back({"Equal-Weights",
                 std::vector<double>(detectors.size(), 1.0 / detectors.size())});
  return out;
}

std::vector<DefenderSummary> DeploymentTest(const ReviewGraph& pristine,
                                            const AttackResources& resources,
                                            const GameConfig& config,
                                            std::span<const Defender> defenders,
                                            int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  RevenueLedger ledger(pristine, config.econ);
  const int K = static_cast<int>(config.attacks.size());
  std::vector<DefenderSummary> out(defenders.size());
  for (std::size_t d = 0; d < defenders.size(); ++d) out[d].name = defenders[d].name;
  for (int i = 0; i < trials; ++i) {
    Rng rng = MakeRng(seed, 6, static_cast<std::uint64_t>(i));
    std::uniform_int_distribution<int> pick(0, K - 1);
    std::vector<int> assignment;
    for (std::size_t t = 0; t < resources.targets.size(); ++t) {
      assignment.push_back(pick(rng));
    }
    AttackedSnapshot s = AttackWithAssignment(pristine, resources, config, assignment, rng);
    for (std::size_t d = 0; d < defenders.size(); ++d) {
      out[d].samples.push_back(
          Objective(s, defenders[d].q, config.top_k_percent, ledger, resources.targets));
    }
  }
  for (DefenderSummary& row : out) {
    const double n = static_cast<double>(row.samples.size());
    row.mean = std::accumulate(row.samples.begin(), row.samples.end(), 0.0) / n;
    double var = 0.0;
    for (double x : row.samples) var += (x - row.mean) * (x - row.mean);
    row.stdev = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
  }
  return out;
}

SweepAxis ParseSweepAxis(std::string_view name) {
  for (SweepAxis a : {SweepAxis::kTopK, SweepAxis::kEliteThreshold, SweepAxis::kDemotion,
                      SweepAxis::kCamouflage, SweepAxis::kLeaveOneOut}) {
    if (SweepAxisName(a) == name) return a;
  }
  throw std::invalid_argument("unknown sweep axis: " + std::string(name));
}

std::string_view SweepAxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kTopK: return "TopK";
    case SweepAxis::kEliteThreshold: return "EliteThreshold";
    case SweepAxis::kDemotion: return "Demotion";
    case SweepAxis::kCamouflage: return "Camouflage";
    case SweepAxis::kLeaveOneOut: return "LeaveOneOut";
  }
  return "?";
}

std::vector<SweepRow> SensitivitySweep(SweepAxis axis,
                                       std::span<const std::string> values,
                                       const ReviewGraph& pristine,
                                       const ResourceConfig& resources,
                                       const GameConfig& base) {
  std::vector<SweepRow> rows;
  for (const std::string& value : values) {
    GameConfig game = base;
    ResourceConfig res = resources;
    switch (axis) {
      case SweepAxis::kTopK:
        game.top_k_percent = std::stod(value);
        break;
      case SweepAxis::kEliteThreshold:
        game.econ.elite_threshold = std::stoi(value);
        break;
      case SweepAxis::kDemotion:
        if (value == "promotion") {
          game.econ.mode = EconMode::kPromotion;
        } else if (value == "demotion") {
          game.econ.mode = EconMode::kDemotion;
        } else {
          throw std::invalid_argument("Demotion axis takes promotion|demotion");
        }
        break;
      case SweepAxis::kCamouflage:
        res.camouflage = ParseCamouflage(value);
        break;
      case SweepAxis::kLeaveOneOut: {
        auto drop = [&](auto& list, auto kind) {
          auto it = std::find(list.begin(), list.end(), kind);
          if (it == list.end()) throw std::invalid_argument("not present: " + value);
          list.erase(it);
        };
        bool is_attack = false;
        for (AttackKind k : kAllAttacks) is_attack |= AttackName(k) == value;
        if (is_attack) {
          drop(game.attacks, ParseAttack(value));
          game.p0.clear();
        } else {
          drop(game.detectors, ParseDetector(value));
          game.q0.clear();
        }
        break;
      }
    }
    AttackResources selected = SelectResources(pristine, res, game.econ.elite_threshold,
                                               game.detector.prior);
    SweepRow row;
    row.value = value;
    row.config = {{"axis", SweepAxisName(axis)},
                  {"value", value},
                  {"game", ToJson(game)},
                  {"resources", ToJson(res)}};
    row.result = Train(pristine, selected, game);
    for (AttackKind k : game.attacks) row.attacks.emplace_back(AttackName(k));
    for (DetectorKind k : game.detectors) row.detectors.emplace_back(DetectorName(k));
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteCurveCsv(std::span<const CurvePoint> curve, std::ostream& out) {
  out.precision(17);
  out << "threshold,recall,objective\n";
  for (const CurvePoint& c : curve) {
    out << c.threshold << ',' << c.recall << ',' << c.objective << '\n';
  }
}

void WriteMatrixCsv(const WorstCaseMatrix& matrix, std::ostream& out) {
  out.precision(17);
  out << "attack";
  for (DetectorKind d : matrix.detectors) out << ',' << DetectorName(d);
  out << '\n';
  for (std::size_t k = 0; k < matrix.attacks.size(); ++k) {
    out << AttackName(matrix.attacks[k]);
    for (double x : matrix.objective[k]) out << ',' << x;
    out << '\n';
  }
  out << "worst";
  for (double x : matrix.WorstCase()) out << ',' << x;
  out << '\n';
}

void WriteDeploymentCsv(std::span<const DefenderSummary> rows, std::ostream& out) {
  out.precision(17);
  out << "defender,mean,stdev";
  const std::size_t n = rows.empty() ? 0 : rows.front().samples.size();
  for (std::size_t i = 0; i < n; ++i) out << ",trial" << i;
  out << '\n';
  for (const DefenderSummary& r : rows) {
    out << r.name << ',' << r.mean << ',' << r.stdev;
    for (double x : r.samples) out << ',' << x;
    out << '\n';
  }
}

nlohmann::json ToJson(const SweepRow& row) {
  nlohmann::json objectives = nlohmann::json::array();
  nlohmann::json losses = nlohmann::json::array();
  for (const EpisodeTrace& t : row.result.traces) {
    objectives.push_back(t.objective);
    losses.push_back(t.loss);
  }
  return {{"value", row.value},
          {"config", row.config},
          {"attacks", row.attacks},
          {"detectors", row.detectors},
          {"p", row.result.p_star},
          {"q", row.result.q_star},
          {"objectives", objectives},
          {"losses", losses},
          {"converged", row.result.converged}};
}

}  // namespace spamgame
