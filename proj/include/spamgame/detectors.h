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

// The base-detector ensemble: scoring, spam probability, top-k% screening
// and the cost-sensitive loss on false negatives.

#ifndef SPAMGAME_DETECTORS_H_
#define SPAMGAME_DETECTORS_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spamgame/behavior.h"
#include "spamgame/fbox.h"
#include "spamgame/fraudar.h"
#include "spamgame/linbp.h"
#include "spamgame/loopy_bp.h"
#include "spamgame/review_graph.h"

namespace spamgame {

enum class DetectorKind { kGang, kSpEagle, kFBox, kFraudar, kPrior };

inline constexpr DetectorKind kAllDetectors[] = {
    DetectorKind::kGang, DetectorKind::kSpEagle, DetectorKind::kFBox,
    DetectorKind::kFraudar, DetectorKind::kPrior};

std::string_view DetectorName(DetectorKind kind);
// Case-sensitive inverse of DetectorName. Throws std::invalid_argument.
DetectorKind ParseDetector(std::string_view name);

struct DetectorConfig {
  PriorConfig prior;
  LinBPConfig linbp;
  SpEagleConfig speagle;
  FBoxConfig fbox;
  FraudarConfig fraudar;
  // Score the base detectors on separate threads.
  bool parallel = false;
};

// Row-major review x detector score table over the live reviews of one
// snapshot, ids ascending.
struct ScoreMatrix {
  std::vector<ReviewId> ids;
  std::vector<DetectorKind> detectors;
  std::vector<double> values;

  std::size_t num_reviews() const { return ids.size(); }
  std::size_t num_detectors() const { return detectors.size(); }
  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * detectors.size(), detectors.size()};
  }
  // Index of `id` in ids; throws std::out_of_range.
  std::size_t IndexOf(ReviewId id) const;
};

ScoreMatrix ScoreAll(const ReviewGraph& graph,
                     std::span<const DetectorKind> detectors,
                     const DetectorConfig& config = {});

double Sigmoid(double x);

// sigma(q . d)
double EnsembleProbability(std::span<const double> d, std::span<const double> q);

std::vector<double> EnsembleProbabilities(const ScoreMatrix& scores,
                                          std::span<const double> q);

// Number of reviews inspected under top-k% screening of n reviews.
std::size_t ScreenedCount(std::size_t n, double top_k_percent);

// Ranks `ids` by probability (descending, ties by ascending id), inspects the
// top floor(k% * n) and returns the injected ones among them, ascending.
std::vector<ReviewId> RankAndRemove(const ReviewGraph& graph,
                                    std::span<const ReviewId> ids,
                                    std::span<const double> probabilities,
                                    double top_k_percent);

struct FalseNegative {
  double cost = 0.0;
  std::vector<double> scores;
};

struct LossGradient {
  double loss = 0.0;
  std::vector<double> gradient;
};

// loss = (1/N) sum -C log sigma(q.d),
// grad = (1/N) sum -C (1 - sigma(q.d)) d.
LossGradient DetectorLoss(std::span<const FalseNegative> samples,
                          std::span<const double> q);

// One projected gradient step: q <- max(0, q - rate * grad).
void ProjectedStep(std::vector<double>& q, std::span<const double> gradient,
                   double rate);

// Columnar CSV: review_id, one column per detector, probability.
void WriteScoresCsv(const ScoreMatrix& scores, std::span<const double> probabilities,
                    std::ostream& out);

}  // namespace spamgame

#endif  // SPAMGAME_DETECTORS_H_
