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

// fBox: accounts whose rows of the binary account-product adjacency are
// poorly captured by its top singular subspace.

#ifndef SPAMGAME_FBOX_H_
#define SPAMGAME_FBOX_H_

#include <vector>

#include "spamgame/review_graph.h"
#include "spamgame/score_vector.h"

namespace spamgame {

struct FBoxConfig {
  // Percentile (0, 100] of the reconstruction fractions used as threshold.
  double tau_percent = 20.0;
  int rank_k = 50;
};

struct FBoxResult {
  // ||A_u V_k|| / ||A_u|| per account id; 1 for accounts without reviews.
  std::vector<double> reconstruction;
  std::vector<bool> culprit;
  double threshold = 0.0;
  // Singular directions actually used (<= rank_k).
  int rank_used = 0;
  ScoreVector scores;
};

// Culprit reviews take their score from `prior_scores`; all others score 0.
// Throws std::invalid_argument when rank_k exceeds the number of active
// accounts or products.
FBoxResult RunFBox(const ReviewGraph& graph, const ScoreVector& prior_scores,
                   const FBoxConfig& config = {});

}  // namespace spamgame

#endif  // SPAMGAME_FBOX_H_
