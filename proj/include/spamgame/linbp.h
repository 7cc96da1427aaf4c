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

// Linearized belief propagation on the account-product graph and the GANG
// detector built on it.
//
// Beliefs are kept as residuals around 0.5. The fixed point solves
//   b = phi + eps * A * b
// where A is the symmetric account-product adjacency with review
// multiplicities as weights.

#ifndef SPAMGAME_LINBP_H_
#define SPAMGAME_LINBP_H_

#include <vector>

#include "spamgame/behavior.h"
#include "spamgame/review_graph.h"
#include "spamgame/score_vector.h"

namespace spamgame {

struct LinBPConfig {
  int max_iterations = 100;
  double tolerance = 1e-6;
  // Coupling strength; <= 0 selects DefaultCoupling(graph).
  double coupling = 0.0;
};

struct LinBPResult {
  // Posterior spam beliefs in [0,1], indexed by account / product id.
  std::vector<double> account_belief;
  std::vector<double> product_belief;
  double coupling = 0.0;
  int iterations = 0;
  bool converged = false;
};

// 0.5 / sqrt(max account degree * max product degree), which bounds the
// spectral radius of eps * A by 0.5. Returns 0 for an empty graph.
double DefaultCoupling(const ReviewGraph& graph);

// Priors are probabilities in [0,1] indexed by id.
LinBPResult RunLinBP(const ReviewGraph& graph,
                     const std::vector<double>& account_prior,
                     const std::vector<double>& product_prior,
                     const LinBPConfig& config = {});

struct GangResult {
  ScoreVector scores;
  LinBPResult propagation;
};

// Account priors come from the Prior account scores, products start neutral.
// A review scores the mean of its account posterior and its review prior.
GangResult RunGang(const ReviewGraph& graph, const PriorResult& prior,
                   const LinBPConfig& config = {});

}  // namespace spamgame

#endif  // SPAMGAME_LINBP_H_
