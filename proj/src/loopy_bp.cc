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

#include "spamgame/loopy_bp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spamgame {
namespace {

double Logit(double p, double floor) {
  p = std::clamp(p, floor, 1.0 - floor);
  return std::log(p) - std::log1p(-p);
}

double Sigmoid(double x) {
  return x >= 0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

// log(exp(a) + exp(b))
double LogAdd(double a, double b) {
  double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

// Log-ratio message sent by a node with cavity log-odds h across a homophily
// edge with disagreement weight e.
double Message(double h, double log_agree, double log_disagree) {
  return LogAdd(log_agree + h, log_disagree) - LogAdd(log_disagree + h, log_agree);
}

}  // namespace

PairwiseMrf::PairwiseMrf(std::vector<double> priors)
    : priors_(std::move(priors)) {
  for (double p : priors_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("prior outside [0,1]");
    }
  }
}

int PairwiseMrf::AddEdge(int u, int v, double disagreement) {
  if (u < 0 || v < 0 || u >= num_nodes() || v >= num_nodes() || u == v) {
    throw std::invalid_argument("bad edge endpoints");
  }
  if (!(disagreement > 0.0 && disagreement < 1.0)) {
    throw std::invalid_argument("disagreement weight must be in (0,1)");
  }
  edges_.push_back({u, v, disagreement});
  return static_cast<int>(edges_.size()) - 1;
}

LoopyBpResult RunLoopyBp(const PairwiseMrf& mrf, const LoopyBpConfig& config) {
  const int n = mrf.num_nodes();
  const auto& edges = mrf.edges();
  const std::size_t m = edges.size();

  std::vector<double> h0(n);
  for (int i = 0; i < n; ++i) h0[i] = Logit(mrf.priors()[i], config.prior_floor);
  std::vector<double> log_agree(m), log_disagree(m);
  for (std::size_t e = 0; e < m; ++e) {
    log_agree[e] = std::log1p(-edges[e].disagreement);
    log_disagree[e] = std::log(edges[e].disagreement);
  }

  // to_v[e]: message u -> v, to_u[e]: message v -> u.
  std::vector<double> to_v(m, 0.0), to_u(m, 0.0);
  std::vector<double> incoming(n);
  LoopyBpResult result;
  for (int it = 0; it < config.max_iterations; ++it) {
    std::fill(incoming.begin(), incoming.end(), 0.0);
    for (std::size_t e = 0; e < m; ++e) {
      incoming[edges[e].v] += to_v[e];
      incoming[edges[e].u] += to_u[e];
    }
    double delta = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
      const int u = edges[e].u, v = edges[e].v;
      double mv = Message(h0[u] + incoming[u] - to_u[e], log_agree[e],
                          log_disagree[e]);
      double mu = Message(h0[v] + incoming[v] - to_v[e], log_agree[e],
                          log_disagree[e]);
      mv = config.damping * to_v[e] + (1.0 - config.damping) * mv;
      mu = config.damping * to_u[e] + (1.0 - config.damping) * mu;
      delta = std::max({delta, std::abs(mv - to_v[e]), std::abs(mu - to_u[e])});
      to_v[e] = mv;
      to_u[e] = mu;
    }
    result.iterations = it + 1;
    if (delta < config.tolerance) {
      result.converged = true;
      break;
    }
  }

  std::fill(incoming.begin(), incoming.end(), 0.0);
  for (std::size_t e = 0; e < m; ++e) {
    incoming[edges[e].v] += to_v[e];
    incoming[edges[e].u] += to_u[e];
  }
  result.belief.resize(n);
  for (int i = 0; i < n; ++i) result.belief[i] = Sigmoid(h0[i] + incoming[i]);
  return result;
}

SpEagleResult RunSpEagle(const ReviewGraph& graph, const PriorResult& prior,
                         const SpEagleConfig& config) {
  const int na = static_cast<int>(graph.num_accounts());
  const int np = static_cast<int>(graph.num_products());
  const auto& ids = prior.review_score.ids;

  std::vector<double> priors;
  priors.reserve(na + np + ids.size());
  priors.insert(priors.end(), prior.account_score.begin(),
                prior.account_score.end());
  priors.insert(priors.end(), np, 0.5);
  for (ReviewId id : ids) priors.push_back(prior.review_feature_score[id.value]);

  PairwiseMrf mrf(std::move(priors));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Review& r = graph.review(ids[i]);
    const int node = na + np + static_cast<int>(i);
    mrf.AddEdge(node, static_cast<int>(r.account.value), config.disagreement);
    mrf.AddEdge(node, na + static_cast<int>(r.product.value),
                config.disagreement);
  }
  LoopyBpResult bp = RunLoopyBp(mrf, config.bp);

  SpEagleResult out;
  out.iterations = bp.iterations;
  out.converged = bp.converged;
  out.account_belief.assign(bp.belief.begin(), bp.belief.begin() + na);
  out.scores.ids = ids;
  out.scores.values.assign(bp.belief.begin() + na + np, bp.belief.end());
  return out;
}

}  // namespace spamgame
