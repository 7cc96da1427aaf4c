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

#include "spamgame/linbp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spamgame {

double DefaultCoupling(const ReviewGraph& graph) {
  int max_account = 0, max_product = 0;
  for (std::uint32_t a = 0; a < graph.num_accounts(); ++a) {
    max_account = std::max(max_account, graph.AccountDegree(AccountId(a)));
  }
  for (std::uint32_t p = 0; p < graph.num_products(); ++p) {
    max_product = std::max(max_product, graph.ProductDegree(ProductId(p)));
  }
  if (max_account == 0 || max_product == 0) return 0.0;
  return 0.5 / std::sqrt(static_cast<double>(max_account) * max_product);
}

LinBPResult RunLinBP(const ReviewGraph& graph,
                     const std::vector<double>& account_prior,
                     const std::vector<double>& product_prior,
                     const LinBPConfig& config) {
  const std::size_t na = graph.num_accounts();
  const std::size_t np = graph.num_products();
  if (account_prior.size() != na || product_prior.size() != np) {
    throw std::invalid_argument("prior size does not match the graph");
  }
  LinBPResult result;
  result.coupling =
      config.coupling > 0.0 ? config.coupling : DefaultCoupling(graph);
  const double eps = result.coupling;

  std::vector<double> phi_a(na), phi_p(np);
  for (std::size_t i = 0; i < na; ++i) phi_a[i] = account_prior[i] - 0.5;
  for (std::size_t i = 0; i < np; ++i) phi_p[i] = product_prior[i] - 0.5;

  std::vector<double> ba = phi_a, bp = phi_p;
  std::vector<double> next_a(na), next_p(np);
  for (int it = 0; it < config.max_iterations; ++it) {
    double delta = 0.0;
    for (std::size_t a = 0; a < na; ++a) {
      double s = 0.0;
      for (ReviewId id : graph.ReviewsOfAccount(AccountId(a))) {
        s += bp[graph.review(id).product.value];
      }
      next_a[a] = phi_a[a] + eps * s;
      delta = std::max(delta, std::abs(next_a[a] - ba[a]));
    }
    for (std::size_t p = 0; p < np; ++p) {
      double s = 0.0;
      for (ReviewId id : graph.ReviewsOfProduct(ProductId(p))) {
        s += ba[graph.review(id).account.value];
      }
      next_p[p] = phi_p[p] + eps * s;
      delta = std::max(delta, std::abs(next_p[p] - bp[p]));
    }
    ba.swap(next_a);
    bp.swap(next_p);
    result.iterations = it + 1;
    if (delta < config.tolerance) {
      result.converged = true;
      break;
    }
  }

  result.account_belief.resize(na);
  result.product_belief.resize(np);
  for (std::size_t i = 0; i < na; ++i) {
    result.account_belief[i] = std::clamp(0.5 + ba[i], 0.0, 1.0);
  }
  for (std::size_t i = 0; i < np; ++i) {
    result.product_belief[i] = std::clamp(0.5 + bp[i], 0.0, 1.0);
  }
  return result;
}

GangResult RunGang(const ReviewGraph& graph, const PriorResult& prior,
                   const LinBPConfig& config) {
  GangResult out;
  std::vector<double> product_prior(graph.num_products(), 0.5);
  out.propagation = RunLinBP(graph, prior.account_score, product_prior, config);
  out.scores.ids = prior.review_score.ids;
  out.scores.values.resize(out.scores.ids.size());
  for (std::size_t i = 0; i < out.scores.ids.size(); ++i) {
    const Review& r = graph.review(out.scores.ids[i]);
    double s = 0.5 * (out.propagation.account_belief[r.account.value] +
                      prior.review_feature_score[r.id.value]);
    out.scores.values[i] = std::clamp(s, 0.0, 1.0);
  }
  return out;
}

}  // namespace spamgame
