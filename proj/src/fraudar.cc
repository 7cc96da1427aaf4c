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

#include "spamgame/fraudar.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace spamgame {

PeelResult PeelDensest(const WeightedBipartite& graph) {
  const int nl = graph.n_left, nr = graph.n_right, n = nl + nr;
  // Node ids: left i -> i, right j -> nl + j.
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  std::vector<double> incident(n, 0.0);
  double total = 0.0;
  for (const auto& e : graph.edges) {
    const int u = e.left, v = nl + e.right;
    adj[u].emplace_back(v, e.weight);
    adj[v].emplace_back(u, e.weight);
    incident[u] += e.weight;
    incident[v] += e.weight;
    total += e.weight;
  }

  std::set<std::pair<double, int>> queue;
  for (int i = 0; i < n; ++i) queue.emplace(incident[i], i);
  std::vector<bool> alive(n, true);
  std::vector<int> order;
  order.reserve(n);

  double best = n > 0 ? total / n : 0.0;
  std::size_t best_removed = 0;
  int remaining = n;
  while (!queue.empty()) {
    auto [w, node] = *queue.begin();
    queue.erase(queue.begin());
    alive[node] = false;
    order.push_back(node);
    total -= w;
    --remaining;
    for (auto [nb, weight] : adj[node]) {
      if (!alive[nb]) continue;
      queue.erase({incident[nb], nb});
      incident[nb] -= weight;
      queue.emplace(incident[nb], nb);
    }
    if (remaining > 0 && total / remaining > best) {
      best = total / remaining;
      best_removed = order.size();
    }
  }

  std::vector<bool> in_block(n, true);
  for (std::size_t i = 0; i < best_removed; ++i) in_block[order[i]] = false;
  PeelResult out;
  out.density = best;
  for (int i = 0; i < nl; ++i) {
    if (in_block[i]) out.left.push_back(i);
  }
  for (int j = 0; j < nr; ++j) {
    if (in_block[nl + j]) out.right.push_back(j);
  }
  if (n == 0) out.density = 0.0;
  return out;
}

double SubsetDensity(const WeightedBipartite& graph,
                     const std::vector<bool>& left_in,
                     const std::vector<bool>& right_in) {
  double size = 0.0, total = 0.0;
  for (bool b : left_in) size += b;
  for (bool b : right_in) size += b;
  if (size == 0.0) return 0.0;
  for (const auto& e : graph.edges) {
    if (left_in[e.left] && right_in[e.right]) total += e.weight;
  }
  return total / size;
}

WeightedBipartite FraudarAdjacency(const ReviewGraph& graph, double log_offset) {
  WeightedBipartite out;
  out.n_left = static_cast<int>(graph.num_accounts());
  out.n_right = static_cast<int>(graph.num_products());
  std::vector<std::pair<int, int>> pairs;
  graph.ForEachReview([&](const Review& r) {
    pairs.emplace_back(static_cast<int>(r.account.value),
                       static_cast<int>(r.product.value));
  });
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<int> degree(out.n_right, 0);
  for (const auto& [a, p] : pairs) ++degree[p];
  out.edges.reserve(pairs.size());
  for (const auto& [a, p] : pairs) {
    out.edges.push_back({a, p, 1.0 / std::log(degree[p] + log_offset)});
  }
  return out;
}

FraudarResult RunFraudar(const ReviewGraph& graph, const FraudarConfig& config) {
  if (config.max_blocks < 1) throw std::invalid_argument("max_blocks must be >= 1");
  if (!(config.log_offset > 1.0)) {
    throw std::invalid_argument("log_offset must exceed 1");
  }
  FraudarResult out;
  const std::size_t na = graph.num_accounts();
  out.account_density.assign(na, 0.0);
  std::vector<bool> assigned(na, false);
  std::size_t unassigned = 0;
  for (std::uint32_t a = 0; a < na; ++a) {
    if (graph.AccountDegree(AccountId(a)) > 0) ++unassigned;
  }

  WeightedBipartite residual = FraudarAdjacency(graph, config.log_offset);
  auto assign = [&](const DenseBlock& block) {
    for (AccountId a : block.accounts) {
      if (graph.AccountDegree(a) == 0 || assigned[a.value]) continue;
      assigned[a.value] = true;
      out.account_density[a.value] = block.density;
      --unassigned;
    }
  };

  for (int b = 0; b < config.max_blocks && unassigned > 0 && !residual.edges.empty();
       ++b) {
    // Column weights follow the degrees of the residual graph.
    std::vector<int> degree(residual.n_right, 0);
    for (const auto& e : residual.edges) ++degree[e.right];
    for (auto& e : residual.edges) {
      e.weight = 1.0 / std::log(degree[e.right] + config.log_offset);
    }
    PeelResult peel = PeelDensest(residual);
    DenseBlock block;
    block.density = peel.density;
    std::vector<bool> left_in(residual.n_left, false), right_in(residual.n_right, false);
    for (int i : peel.left) {
      left_in[i] = true;
      block.accounts.emplace_back(i);
    }
    for (int j : peel.right) {
      right_in[j] = true;
      block.products.emplace_back(j);
    }
    assign(block);
    out.blocks.push_back(std::move(block));
    std::erase_if(residual.edges, [&](const WeightedBipartite::Edge& e) {
      return left_in[e.left] && right_in[e.right];
    });
  }

  if (unassigned > 0) {
    DenseBlock rest;
    std::vector<bool> right_in(residual.n_right, false);
    double total = 0.0;
    std::vector<bool> left_in(residual.n_left, false);
    for (const auto& e : residual.edges) {
      total += e.weight;
      left_in[e.left] = true;
      right_in[e.right] = true;
    }
    for (std::uint32_t a = 0; a < na; ++a) {
      if (graph.AccountDegree(AccountId(a)) > 0 && !assigned[a]) {
        left_in[a] = true;
      }
    }
    double size = 0.0;
    for (int i = 0; i < residual.n_left; ++i) {
      if (left_in[i]) {
        rest.accounts.emplace_back(i);
        size += 1.0;
      }
    }
    for (int j = 0; j < residual.n_right; ++j) {
      if (right_in[j]) {
        rest.products.emplace_back(j);
        size += 1.0;
      }
    }
    rest.density = size > 0.0 ? total / size : 0.0;
    assign(rest);
    out.blocks.push_back(std::move(rest));
  }

  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (std::uint32_t a = 0; a < na; ++a) {
    if (graph.AccountDegree(AccountId(a)) == 0) continue;
    double d = out.account_density[a];
    lo = first ? d : std::min(lo, d);
    hi = first ? d : std::max(hi, d);
    first = false;
  }
  out.scores.ids = graph.ReviewIds();
  out.scores.values.assign(out.scores.ids.size(), 0.0);
  if (hi > lo) {
    for (std::size_t i = 0; i < out.scores.ids.size(); ++i) {
      const Review& r = graph.review(out.scores.ids[i]);
      out.scores.values[i] = (out.account_density[r.account.value] - lo) / (hi - lo);
    }
  }
  return out;
}

}  // namespace spamgame
