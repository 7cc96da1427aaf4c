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

// Loopy belief propagation on pairwise binary Markov random fields, and the
// SpEagle detector that runs it over accounts, reviews and products.

#ifndef SPAMGAME_LOOPY_BP_H_
#define SPAMGAME_LOOPY_BP_H_

#include <vector>

#include "spamgame/behavior.h"
#include "spamgame/review_graph.h"
#include "spamgame/score_vector.h"

namespace spamgame {

// Binary variables with unary priors P(x=1) and homophily edges whose
// compatibility is 1-e on agreement and e on disagreement.
class PairwiseMrf {
 public:
  struct Edge {
    int u = 0;
    int v = 0;
    double disagreement = 0.1;
  };

  explicit PairwiseMrf(std::vector<double> priors);

  int AddEdge(int u, int v, double disagreement);

  int num_nodes() const { return static_cast<int>(priors_.size()); }
  const std::vector<double>& priors() const { return priors_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<double> priors_;
  std::vector<Edge> edges_;
};

struct LoopyBpConfig {
  int max_iterations = 100;
  double tolerance = 1e-6;
  // Weight of the previous message in each update.
  double damping = 0.5;
  // Priors are clamped into [floor, 1 - floor] before taking log-odds.
  double prior_floor = 1e-6;
};

struct LoopyBpResult {
  std::vector<double> belief;
  int iterations = 0;
  bool converged = false;
};

// Synchronous damped updates in the log-odds domain. On trees the fixed
// point equals the exact marginals.
LoopyBpResult RunLoopyBp(const PairwiseMrf& mrf, const LoopyBpConfig& config = {});

struct SpEagleConfig {
  LoopyBpConfig bp;
  double disagreement = 0.1;
};

struct SpEagleResult {
  ScoreVector scores;
  std::vector<double> account_belief;
  int iterations = 0;
  bool converged = false;
};

// Accounts take their Prior account score as prior, reviews their
// review-feature score, products 0.5. Each review links to its account and
// its product. A review scores its posterior spam belief.
SpEagleResult RunSpEagle(const ReviewGraph& graph, const PriorResult& prior,
                         const SpEagleConfig& config = {});

}  // namespace spamgame

#endif  // SPAMGAME_LOOPY_BP_H_
