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

// Fraudar: greedy peeling for dense account-product blocks with
// logarithmic column weights.

#ifndef SPAMGAME_FRAUDAR_H_
#define SPAMGAME_FRAUDAR_H_

#include <vector>

#include "spamgame/review_graph.h"
#include "spamgame/score_vector.h"

namespace spamgame {

// A weighted bipartite edge list over left nodes [0, n_left) and right nodes
// [0, n_right).
struct WeightedBipartite {
  int n_left = 0;
  int n_right = 0;
  struct Edge {
    int left = 0;
    int right = 0;
    double weight = 0.0;
  };
  std::vector<Edge> edges;
};

struct PeelResult {
  std::vector<int> left;
  std::vector<int> right;
  // Total edge weight inside the block divided by its node count.
  double density = 0.0;
};

// Repeatedly deletes the node with the least incident weight and returns the
// densest intermediate node set. Ties are broken by lower index, left side
// first.
PeelResult PeelDensest(const WeightedBipartite& graph);

// Density of an arbitrary node subset; 0 for the empty set.
double SubsetDensity(const WeightedBipartite& graph,
                     const std::vector<bool>& left_in,
                     const std::vector<bool>& right_in);

struct FraudarConfig {
  int max_blocks = 5;
  // Column weight is 1 / log(product degree + offset).
  double log_offset = 5.0;
};

struct DenseBlock {
  std::vector<AccountId> accounts;
  std::vector<ProductId> products;
  double density = 0.0;
};

struct FraudarResult {
  // Detected blocks in order; the final entry is the residual graph when any
  // account was left over.
  std::vector<DenseBlock> blocks;
  // Raw density of each account's block; 0 for accounts without reviews.
  std::vector<double> account_density;
  ScoreVector scores;
};

// Weighted binary adjacency of `graph` with Fraudar column weights.
WeightedBipartite FraudarAdjacency(const ReviewGraph& graph,
                                   double log_offset = 5.0);

// Reviews score their account's block density, min-max normalized over
// accounts with reviews. A constant density maps to 0.
FraudarResult RunFraudar(const ReviewGraph& graph, const FraudarConfig& config = {});

}  // namespace spamgame

#endif  // SPAMGAME_FRAUDAR_H_
