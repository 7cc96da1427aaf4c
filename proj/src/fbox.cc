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

#include "spamgame/fbox.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spamgame {
namespace {

constexpr double kExactTolerance = 1e-9;

}  // namespace

FBoxResult RunFBox(const ReviewGraph& graph, const ScoreVector& prior_scores,
                   const FBoxConfig& config) {
  if (!(config.tau_percent > 0.0 && config.tau_percent <= 100.0)) {
    throw std::invalid_argument("tau_percent must be in (0, 100]");
  }
  if (config.rank_k < 1) throw std::invalid_argument("rank_k must be >= 1");

  const std::size_t na = graph.num_accounts();
  // Row/column indices of active accounts and products.
  std::vector<int> row(na, -1), col(graph.num_products(), -1);
  std::vector<std::vector<int>> rows;
  int n_cols = 0;
  for (std::uint32_t p = 0; p < graph.num_products(); ++p) {
    if (graph.ProductDegree(ProductId(p)) > 0) col[p] = n_cols++;
  }
  for (std::uint32_t a = 0; a < na; ++a) {
    auto reviews = graph.ReviewsOfAccount(AccountId(a));
    if (reviews.empty()) continue;
    std::vector<int> cols;
    for (ReviewId id : reviews) cols.push_back(col[graph.review(id).product.value]);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    row[a] = static_cast<int>(rows.size());
    rows.push_back(std::move(cols));
  }
  const int n_rows = static_cast<int>(rows.size());

  FBoxResult out;
  out.reconstruction.assign(na, 1.0);
  out.culprit.assign(na, false);
  out.scores.ids = prior_scores.ids;
  out.scores.values.assign(prior_scores.size(), 0.0);
  if (n_rows == 0) return out;
  if (config.rank_k > std::min(n_rows, n_cols)) {
    throw std::invalid_argument("rank_k exceeds min(|U|, |V|)");
  }

  // Right singular vectors V_k (n_cols x r) from the Gram matrix of the
  // smaller side.
  Eigen::MatrixXd v_k;
  if (n_cols <= n_rows) {
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n_cols, n_cols);
    for (const auto& cols : rows) {
      for (int i : cols) {
        for (int j : cols) gram(i, j) += 1.0;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    const double cutoff = kExactTolerance * std::max(1.0, lambda(n_cols - 1));
    int r = 0;
    while (r < config.rank_k && lambda(n_cols - 1 - r) > cutoff) ++r;
    v_k = eig.eigenvectors().rightCols(r).rowwise().reverse();
  } else {
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n_rows, n_cols);
    for (int i = 0; i < n_rows; ++i) {
      for (int j : rows[i]) dense(i, j) = 1.0;
    }
    Eigen::MatrixXd gram = dense * dense.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    const double cutoff = kExactTolerance * std::max(1.0, lambda(n_rows - 1));
    int r = 0;
    while (r < config.rank_k && lambda(n_rows - 1 - r) > cutoff) ++r;
    v_k.resize(n_cols, r);
    for (int c = 0; c < r; ++c) {
      const int idx = n_rows - 1 - c;
      v_k.col(c) = dense.transpose() * eig.eigenvectors().col(idx) /
                   std::sqrt(lambda(idx));
    }
  }
  out.rank_used = static_cast<int>(v_k.cols());

  std::vector<double> fractions;
  fractions.reserve(n_rows);
  Eigen::VectorXd proj(v_k.cols());
  for (std::uint32_t a = 0; a < na; ++a) {
    if (row[a] < 0) continue;
    const auto& cols = rows[row[a]];
    proj.setZero();
    for (int j : cols) proj += v_k.row(j).transpose();
    double frac = proj.norm() / std::sqrt(static_cast<double>(cols.size()));
    if (frac >= 1.0 - kExactTolerance) frac = 1.0;
    out.reconstruction[a] = frac;
    fractions.push_back(frac);
  }

  std::sort(fractions.begin(), fractions.end());
  const bool everyone = config.tau_percent >= 100.0;
  std::size_t rank = static_cast<std::size_t>(
      std::ceil(config.tau_percent / 100.0 * fractions.size()));
  rank = std::clamp<std::size_t>(rank, 1, fractions.size());
  out.threshold = fractions[rank - 1];
  for (std::uint32_t a = 0; a < na; ++a) {
    if (row[a] < 0) continue;
    out.culprit[a] = everyone || out.reconstruction[a] < out.threshold - kExactTolerance;
  }
  for (std::size_t i = 0; i < out.scores.ids.size(); ++i) {
    const Review& r = graph.review(out.scores.ids[i]);
    if (out.culprit[r.account.value]) {
      out.scores.values[i] = prior_scores.values[i];
    }
  }
  return out;
}

}  // namespace spamgame
