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

#include "test_graphs.h"

#include <string>

#include "spamgame/dataset.h"

namespace spamgame::testing {

ReviewGraph SmallGraph(std::uint64_t seed) {
  GeneratorConfig c;
  c.n_accounts = 400;
  c.n_products = 25;
  c.n_reviews = 4000;
  c.elite_fraction = 0.1;
  c.regular_degree_exponent = 0.5;
  c.seed = seed;
  return GenerateSynthetic(c);
}

AttackResources SmallResources(const ReviewGraph& graph) {
  ResourceConfig c;
  c.n_elite = 12;
  c.n_targets = 5;
  c.spams_per_target = 3;
  c.singleton_pool = 15;
  return SelectResources(graph, c, 10);
}

GameConfig SmallGame(std::uint64_t seed) {
  GameConfig g;
  g.episodes = 4;
  g.top_k_percent = 1.0;
  g.detector.fbox.rank_k = 5;
  g.seed = seed;
  return g;
}

std::vector<AccountId> AddAccounts(ReviewGraph& graph, int n) {
  std::vector<AccountId> out;
  const std::size_t base = graph.num_accounts();
  for (int i = 0; i < n; ++i) {
    out.push_back(graph.AddAccount("a" + std::to_string(base + i)));
  }
  return out;
}

std::vector<ProductId> AddProducts(ReviewGraph& graph, int n) {
  std::vector<ProductId> out;
  const std::size_t base = graph.num_products();
  for (int i = 0; i < n; ++i) {
    out.push_back(graph.AddProduct("p" + std::to_string(base + i)));
  }
  return out;
}

}  // namespace spamgame::testing
