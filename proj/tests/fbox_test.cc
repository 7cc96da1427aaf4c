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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "spamgame/behavior.h"
#include "test_graphs.h"

namespace spamgame {
namespace {

using testing::AddAccounts;
using testing::AddProducts;

// Rows of a 6 x 4 binary matrix. Account 3 skips the most popular product
// and is the worst fit of the rank-2 subspace.
constexpr int kToy[6][4] = {
    {1, 1, 1, 0}, {1, 1, 1, 0}, {1, 1, 0, 0},
    {0, 1, 1, 0}, {1, 1, 1, 1}, {0, 0, 1, 1},
};

ReviewGraph ToyGraph() {
  ReviewGraph g;
  auto a = AddAccounts(g, 6);
  auto p = AddProducts(g, 4);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (kToy[i][j]) g.AddReview(a[i], p[j], 4, i + j);
    }
  }
  // Repeated reviews do not change the binary adjacency.
  g.AddReview(a[0], p[0], 5, 9);
  return g;
}

ScoreVector PriorOf(const ReviewGraph& g) {
  return PriorScores(g, PriorConfig());
}

TEST(FBoxTest, MatchesDenseSvdOracle) {
  ReviewGraph g = ToyGraph();
  Eigen::MatrixXd m(6, 4);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = kToy[i][j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  ASSERT_GT(svd.singularValues()(1) - svd.singularValues()(2), 1e-3);
  Eigen::MatrixXd v2 = svd.matrixV().leftCols(2);

  FBoxConfig config;
  config.rank_k = 2;
  config.tau_percent = 20.0;
  FBoxResult r = RunFBox(g, PriorOf(g), config);
  EXPECT_EQ(r.rank_used, 2);

  std::vector<double> expected(6);
  for (int i = 0; i < 6; ++i) {
    expected[i] = (m.row(i) * v2).norm() / m.row(i).norm();
    EXPECT_NEAR(r.reconstruction[i], expected[i], 1e-9) << "account " << i;
  }
  // Nearest-rank 20th percentile of six values is the second smallest.
  std::vector<double> sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_NEAR(r.threshold, sorted[1], 1e-9);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(r.culprit[i], expected[i] < sorted[1] - 1e-9) << "account " << i;
  }
  EXPECT_TRUE(r.culprit[3]);
  EXPECT_EQ(std::count(r.culprit.begin(), r.culprit.end(), true), 1);
}

TEST(FBoxTest, CulpritReviewsCarryPriorScores) {
  ReviewGraph g = ToyGraph();
  ScoreVector prior = PriorOf(g);
  FBoxConfig config;
  config.rank_k = 2;
  FBoxResult r = RunFBox(g, prior, config);
  ASSERT_EQ(r.scores.ids, prior.ids);
  for (std::size_t i = 0; i < prior.size(); ++i) {
    const Review& rv = g.review(prior.ids[i]);
    EXPECT_EQ(r.scores.values[i], r.culprit[rv.account.value] ? prior.values[i] : 0.0);
  }
}

TEST(FBoxTest, FullRankReconstructsEverything) {
  ReviewGraph g = ToyGraph();
  FBoxConfig config;
  config.rank_k = 4;
  FBoxResult r = RunFBox(g, PriorOf(g), config);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(r.reconstruction[i], 1.0);
    EXPECT_FALSE(r.culprit[i]);
  }
  for (double s : r.scores.values) EXPECT_EQ(s, 0.0);
}

TEST(FBoxTest, FullPercentileFlagsEveryone) {
  ReviewGraph g = ToyGraph();
  ScoreVector prior = PriorOf(g);
  FBoxConfig config;
  config.rank_k = 2;
  config.tau_percent = 100.0;
  FBoxResult r = RunFBox(g, prior, config);
  for (int i = 0; i < 6; ++i) EXPECT_TRUE(r.culprit[i]);
  EXPECT_EQ(r.scores.values, prior.values);
}

TEST(FBoxTest, TallMatrixPathAgrees) {
  // More products than accounts exercises the account-side Gram matrix.
  ReviewGraph g;
  auto a = AddAccounts(g, 4);
  auto p = AddProducts(g, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (kToy[i][j]) g.AddReview(a[j], p[i], 4, 0);
    }
  }
  Eigen::MatrixXd m(4, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 4; ++j) m(j, i) = kToy[i][j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  Eigen::MatrixXd v2 = svd.matrixV().leftCols(2);
  FBoxConfig config;
  config.rank_k = 2;
  FBoxResult r = RunFBox(g, PriorOf(g), config);
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(r.reconstruction[j], (m.row(j) * v2).norm() / m.row(j).norm(), 1e-9);
  }
}

TEST(FBoxTest, RankDeficientUsesAvailableRank) {
  ReviewGraph g;
  auto a = AddAccounts(g, 3);
  auto p = AddProducts(g, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g.AddReview(a[i], p[j], 4, 0);
  }
  FBoxConfig config;
  config.rank_k = 3;
  FBoxResult r = RunFBox(g, PriorOf(g), config);
  EXPECT_EQ(r.rank_used, 1);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(r.reconstruction[i], 1.0);
}

TEST(FBoxTest, RejectsOversizedRank) {
  ReviewGraph g = ToyGraph();
  FBoxConfig config;
  config.rank_k = 5;
  EXPECT_THROW(RunFBox(g, PriorOf(g), config), std::invalid_argument);
  config.rank_k = 2;
  config.tau_percent = 0.0;
  EXPECT_THROW(RunFBox(g, PriorOf(g), config), std::invalid_argument);
}

TEST(FBoxTest, EmptyGraphScoresNothing) {
  ReviewGraph g;
  AddAccounts(g, 2);
  FBoxResult r = RunFBox(g, ScoreVector{});
  EXPECT_TRUE(r.scores.ids.empty());
}

}  // namespace
}  // namespace spamgame
