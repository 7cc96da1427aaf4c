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

// Experiment drivers: practical-effect vs. recall curves, the attack x
// detector worst-case matrix, deployment tests and sensitivity sweeps.

#ifndef SPAMGAME_EVAL_H_
#define SPAMGAME_EVAL_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "spamgame/attacks.h"
#include "spamgame/detectors.h"
#include "spamgame/economics.h"
#include "spamgame/game.h"
#include "spamgame/review_graph.h"

namespace spamgame {

struct CurvePoint {
  // Percentile threshold: reviews ranked in the top (100 - threshold)% are
  // inspected.
  double threshold = 0.0;
  double recall = 0.0;
  double objective = 0.0;
};

// One attacked graph with its campaign and detector scores.
struct AttackedSnapshot {
  ReviewGraph graph;
  CampaignRecord campaign;
  ScoreMatrix scores;
};

// Runs a campaign of A(p) (epsilon from `config`) on a copy of `pristine`
// and scores it with config.detectors.
AttackedSnapshot Attack(const ReviewGraph& pristine, const AttackResources& resources,
                        const GameConfig& config, std::span<const double> p,
                        Rng& rng);

// Same with a fixed strategy per target.
AttackedSnapshot AttackWithAssignment(const ReviewGraph& pristine,
                                      const AttackResources& resources,
                                      const GameConfig& config,
                                      std::span<const int> assignment, Rng& rng);

std::vector<CurvePoint> CurveFromSnapshot(const AttackedSnapshot& snapshot,
                                          std::span<const double> q,
                                          std::span<const double> thresholds,
                                          const RevenueLedger& ledger,
                                          std::span<const ProductId> targets);

std::vector<CurvePoint> PeRecallCurve(const ReviewGraph& pristine,
                                      const AttackResources& resources,
                                      const GameConfig& config,
                                      std::span<const double> p,
                                      std::span<const double> q,
                                      std::span<const double> thresholds,
                                      std::uint64_t seed);

struct WorstCaseMatrix {
  std::vector<AttackKind> attacks;
  std::vector<DetectorKind> detectors;
  // objective[k][l]: pure attack k against detector l at weight 1.
  std::vector<std::vector<double>> objective;

  // max over attacks, per detector.
  std::vector<double> WorstCase() const;
  // min over detectors of WorstCase().
  double BestWorstCase() const;
};

WorstCaseMatrix ComputeWorstCaseMatrix(const ReviewGraph& pristine,
                                       const AttackResources& resources,
                                       const GameConfig& config, std::uint64_t seed);

// Mean objective of weights q against `trials` fresh campaigns of A(p).
double EvaluateDefender(const ReviewGraph& pristine, const AttackResources& resources,
                        const GameConfig& config, std::span<const double> p,
                        std::span<const double> q, int trials, std::uint64_t seed);

struct Defender {
  std::string name;
  std::vector<double> q;
};

// The trained weights, every single detector at weight 1 and equal weights.
std::vector<Defender> DeploymentDefenders(std::span<const double> q_star,
                                          std::span<const DetectorKind> detectors);

struct DefenderSummary {
  std::string name;
  std::vector<double> samples;
  double mean = 0.0;
  double stdev = 0.0;
};

// Each trial samples every target's strategy uniformly; all defenders face
// the same campaigns.
std::vector<DefenderSummary> DeploymentTest(const ReviewGraph& pristine,
                                            const AttackResources& resources,
                                            const GameConfig& config,
                                            std::span<const Defender> defenders,
                                            int trials, std::uint64_t seed);

enum class SweepAxis { kTopK, kEliteThreshold, kDemotion, kCamouflage, kLeaveOneOut };

SweepAxis ParseSweepAxis(std::string_view name);
std::string_view SweepAxisName(SweepAxis axis);

struct SweepRow {
  std::string value;
  nlohmann::json config;
  TrainResult result;
  std::vector<std::string> attacks;
  std::vector<std::string> detectors;
};

// Retrains once per value. Values per axis: TopK a percentage, EliteThreshold
// an integer, Demotion "promotion" or "demotion", Camouflage a level name,
// LeaveOneOut an attack or detector name.
std::vector<SweepRow> SensitivitySweep(SweepAxis axis,
                                       std::span<const std::string> values,
                                       const ReviewGraph& pristine,
                                       const ResourceConfig& resources,
                                       const GameConfig& base);

void WriteCurveCsv(std::span<const CurvePoint> curve, std::ostream& out);
void WriteMatrixCsv(const WorstCaseMatrix& matrix, std::ostream& out);
void WriteDeploymentCsv(std::span<const DefenderSummary> rows, std::ostream& out);
nlohmann::json ToJson(const SweepRow& row);

}  // namespace spamgame

#endif  // SPAMGAME_EVAL_H_
