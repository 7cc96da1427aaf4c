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

#include "spamgame/detectors.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace spamgame {

std::string_view DetectorName(DetectorKind kind) {
  switch (kind) {
    case DetectorKind::kGang: return "GANG";
    case DetectorKind::kSpEagle: return "SpEagle";
    case DetectorKind::kFBox: return "fBox";
    case DetectorKind::kFraudar: return "Fraudar";
    case DetectorKind::kPrior: return "Prior";
  }
  return "?";
}

DetectorKind ParseDetector(std::string_view name) {
  for (DetectorKind k : kAllDetectors) {
    if (DetectorName(k) == name) return k;
  }
  throw std::invalid_argument("unknown detector: " + std::string(name));
}

std::size_t ScoreMatrix::IndexOf(ReviewId id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) throw std::out_of_range("review not scored");
  return static_cast<std::size_t>(it - ids.begin());
}

ScoreMatrix ScoreAll(const ReviewGraph& graph,
                     std::span<const DetectorKind> detectors,
                     const DetectorConfig& config) {
  const PriorResult prior = ComputePrior(graph, config.prior);
  auto score_one = [&](DetectorKind kind) -> std::vector<double> {
    switch (kind) {
      case DetectorKind::kGang:
        return RunGang(graph, prior, config.linbp).scores.values;
      case DetectorKind::kSpEagle:
        return RunSpEagle(graph, prior, config.speagle).scores.values;
      case DetectorKind::kFBox:
        return RunFBox(graph, prior.review_score, config.fbox).scores.values;
      case DetectorKind::kFraudar:
        return RunFraudar(graph, config.fraudar).scores.values;
      case DetectorKind::kPrior:
        return prior.review_score.values;
    }
    return {};
  };

  std::vector<std::vector<double>> columns(detectors.size());
  if (config.parallel) {
    std::vector<std::future<std::vector<double>>> jobs;
    for (DetectorKind k : detectors) {
      jobs.push_back(std::async(std::launch::async, score_one, k));
    }
    for (std::size_t l = 0; l < jobs.size(); ++l) columns[l] = jobs[l].get();
  } else {
    for (std::size_t l = 0; l < detectors.size(); ++l) {
      columns[l] = score_one(detectors[l]);
    }
  }

  ScoreMatrix out;
  out.ids = prior.review_score.ids;
  out.detectors.assign(detectors.begin(), detectors.end());
  const std::size_t n = out.ids.size(), L = detectors.size();
  out.values.resize(n * L);
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      out.values[i * L + l] = std::clamp(columns[l][i], 0.0, 1.0);
    }
  }
  return out;
}

double Sigmoid(double x) {
  return x >= 0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

double EnsembleProbability(std::span<const double> d, std::span<const double> q) {
  if (d.size() != q.size()) throw std::invalid_argument("score/weight size mismatch");
  return Sigmoid(std::inner_product(d.begin(), d.end(), q.begin(), 0.0));
}

std::vector<double> EnsembleProbabilities(const ScoreMatrix& scores,
                                          std::span<const double> q) {
  std::vector<double> out(scores.num_reviews());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = EnsembleProbability(scores.row(i), q);
  }
  return out;
}

std::size_t ScreenedCount(std::size_t n, double top_k_percent) {
  if (!(top_k_percent >= 0.0 && top_k_percent <= 100.0)) {
    throw std::invalid_argument("top_k_percent must be in [0, 100]");
  }
  // Integer percent-of-n computed exactly where possible.
  const long double exact = static_cast<long double>(n) * top_k_percent / 100.0L;
  return std::min(n, static_cast<std::size_t>(std::floor(exact + 1e-9L)));
}

std::vector<ReviewId> RankAndRemove(const ReviewGraph& graph,
                                    std::span<const ReviewId> ids,
                                    std::span<const double> probabilities,
                                    double top_k_percent) {
  if (ids.size() != probabilities.size()) {
    throw std::invalid_argument("ids/probabilities size mismatch");
  }
  const std::size_t take = ScreenedCount(ids.size(), top_k_percent);
  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  auto before = [&](std::size_t a, std::size_t b) {
    if (probabilities[a] != probabilities[b]) return probabilities[a] > probabilities[b];
    return ids[a] < ids[b];
  };
  std::partial_sort(order.begin(), order.begin() + take, order.end(), before);
  std::vector<ReviewId> removed;
  for (std::size_t i = 0; i < take; ++i) {
    ReviewId id = ids[order[i]];
    if (graph.review(id).origin == Origin::kInjected) removed.push_back(id);
  }
  std::sort(removed.begin(), removed.end());
  return removed;
}

LossGradient DetectorLoss(std::span<const FalseNegative> samples,
                          std::span<const double> q) {
  LossGradient out;
  out.gradient.assign(q.size(), 0.0);
  if (samples.empty()) return out;
  const double n = static_cast<double>(samples.size());
  for (const FalseNegative& s : samples) {
    if (s.cost < 0.0) throw std::invalid_argument("negative false-negative cost");
    const double z = std::inner_product(s.scores.begin(), s.scores.end(), q.begin(), 0.0);
    // -log sigma(z) = log(1 + exp(-z))
    const double nll = z >= 0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z));
    out.loss += s.cost * nll / n;
    const double g = -s.cost * (1.0 - Sigmoid(z)) / n;
    for (std::size_t l = 0; l < q.size(); ++l) out.gradient[l] += g * s.scores[l];
  }
  return out;
}

void ProjectedStep(std::vector<double>& q, std::span<const double> gradient,
                   double rate) {
  for (std::size_t l = 0; l < q.size(); ++l) {
    q[l] = std::max(0.0, q[l] - rate * gradient[l]);
  }
}

void WriteScoresCsv(const ScoreMatrix& scores, std::span<const double> probabilities,
                    std::ostream& out) {
  out << "review_id";
  for (DetectorKind k : scores.detectors) out << ',' << DetectorName(k);
  out << ",probability\n";
  out.precision(17);
  for (std::size_t i = 0; i < scores.num_reviews(); ++i) {
    out << scores.ids[i].value;
    for (double v : scores.row(i)) out << ',' << v;
    out << ',' << probabilities[i] << '\n';
  }
}

}  // namespace spamgame
