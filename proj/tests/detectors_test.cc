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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "test_graphs.h"

namespace spamgame {
namespace {

using testing::AddAccounts;
using testing::AddProducts;

TEST(DetectorNamesTest, RoundTrip) {
  for (DetectorKind k : kAllDetectors) EXPECT_EQ(ParseDetector(DetectorName(k)), k);
  EXPECT_THROW(ParseDetector("gang"), std::invalid_argument);
}

TEST(EnsembleTest, Probability) {
  std::vector<double> d(5, 1.0), q(5, 0.2), zero(5, 0.0);
  EXPECT_NEAR(EnsembleProbability(d, q), 0.7311, 5e-5);
  EXPECT_NEAR(EnsembleProbability(d, q), 1.0 / (1.0 + std::exp(-1.0)), 1e-15);
  EXPECT_EQ(EnsembleProbability(d, zero), 0.5);
  std::vector<double> bigger = d;
  bigger[2] = 1.5;
  EXPECT_GT(EnsembleProbability(bigger, q), EnsembleProbability(d, q));
  EXPECT_THROW(EnsembleProbability(d, std::vector<double>(4, 0.2)),
               std::invalid_argument);
}

TEST(EnsembleTest, SigmoidIsStableAtExtremes) {
  EXPECT_EQ(Sigmoid(0.0), 0.5);
  EXPECT_GT(Sigmoid(-800.0), -1e-300);
  EXPECT_EQ(Sigmoid(800.0), 1.0);
  EXPECT_NEAR(Sigmoid(-2.0) + Sigmoid(2.0), 1.0, 1e-15);
}

TEST(ScreeningTest, ScreenedCount) {
  EXPECT_EQ(ScreenedCount(1000, 1.0), 10u);
  EXPECT_EQ(ScreenedCount(50, 1.0), 0u);
  EXPECT_EQ(ScreenedCount(67845, 1.0), 678u);
  EXPECT_EQ(ScreenedCount(300, 7.0), 21u);
  EXPECT_EQ(ScreenedCount(10, 100.0), 10u);
  EXPECT_THROW(ScreenedCount(10, 101.0), std::invalid_argument);
}

struct Screened {
  ReviewGraph graph;
  std::vector<ReviewId> ids;
  std::vector<double> probs;
};

// 100 reviews; every third one injected, probabilities drawn from a few
// distinct levels so ties are common.
Screened MakeScreened(std::uint64_t seed) {
  Screened s;
  auto a = AddAccounts(s.graph, 10);
  auto p = AddProducts(s.graph, 5);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    ReviewId id = i % 3 == 0 ? s.graph.InjectReview({a[i % 10], p[i % 5], 5, 1, 0})
                             : s.graph.AddReview(a[i % 10], p[i % 5], 4, 0);
    s.ids.push_back(id);
    s.probs.push_back(0.1 * static_cast<double>(rng() % 5));
  }
  return s;
}

TEST(ScreeningTest, RemovesOnlyInjectedWithinTopK) {
  Screened s = MakeScreened(1);
  std::vector<ReviewId> removed = RankAndRemove(s.graph, s.ids, s.probs, 10.0);
  std::vector<std::size_t> order(100);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return s.probs[x] > s.probs[y]; });
  std::vector<ReviewId> expected;
  for (int i = 0; i < 10; ++i) {
    ReviewId id = s.ids[order[i]];
    if (s.graph.review(id).origin == Origin::kInjected) expected.push_back(id);
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(removed, expected);
  for (ReviewId id : removed) EXPECT_EQ(s.graph.review(id).origin, Origin::kInjected);
}

TEST(ScreeningTest, InputOrderDoesNotMatter) {
  Screened s = MakeScreened(2);
  std::vector<ReviewId> base = RankAndRemove(s.graph, s.ids, s.probs, 20.0);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> perm(s.ids.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ReviewId> ids;
    std::vector<double> probs;
    for (std::size_t i : perm) {
      ids.push_back(s.ids[i]);
      probs.push_back(s.probs[i]);
    }
    EXPECT_EQ(RankAndRemove(s.graph, ids, probs, 20.0), base);
  }
}

TEST(ScreeningTest, MonotoneInK) {
  Screened s = MakeScreened(4);
  std::vector<ReviewId> prev;
  for (double k : {0.0, 1.0, 5.0, 10.0, 25.0, 50.0, 100.0}) {
    std::vector<ReviewId> now = RankAndRemove(s.graph, s.ids, s.probs, k);
    EXPECT_TRUE(std::includes(now.begin(), now.end(), prev.begin(), prev.end()));
    prev = now;
  }
  EXPECT_EQ(prev, s.graph.InjectedReviewIds());
}

TEST(LossTest, SingleSample) {
  std::vector<FalseNegative> fn = {{1.0, {1.0}}};
  std::vector<double> q = {0.0};
  LossGradient lg = DetectorLoss(fn, q);
  EXPECT_NEAR(lg.loss, std::log(2.0), 1e-15);
  EXPECT_NEAR(lg.loss, 0.6931, 5e-5);
  EXPECT_NEAR(lg.gradient[0], -0.5, 1e-15);
}

TEST(LossTest, NoFalseNegatives) {
  std::vector<double> q = {0.3, 0.1};
  LossGradient lg = DetectorLoss({}, q);
  EXPECT_EQ(lg.loss, 0.0);
  EXPECT_EQ(lg.gradient, (std::vector<double>{0.0, 0.0}));
}

TEST(LossTest, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0), weight(0.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + rng() % 8;
    std::vector<FalseNegative> fn(n);
    for (auto& s : fn) {
      s.cost = weight(rng);
      s.scores = {unit(rng), unit(rng), unit(rng), unit(rng), unit(rng)};
    }
    std::vector<double> q = {weight(rng), weight(rng), weight(rng), weight(rng),
                             weight(rng)};
    LossGradient lg = DetectorLoss(fn, q);
    for (int l = 0; l < 5; ++l) {
      const double h = 1e-6;
      std::vector<double> up = q, down = q;
      up[l] += h;
      down[l] -= h;
      double numeric =
          (DetectorLoss(fn, up).loss - DetectorLoss(fn, down).loss) / (2 * h);
      ASSERT_NEAR(lg.gradient[l], numeric,
                  1e-5 * std::max(1e-3, std::abs(numeric)))
          << "trial " << trial << " l " << l;
    }
  }
}

TEST(LossTest, RejectsNegativeCost) {
  std::vector<FalseNegative> fn = {{-1.0, {1.0}}};
  std::vector<double> q = {0.0};
  EXPECT_THROW(DetectorLoss(fn, q), std::invalid_argument);
}

TEST(LossTest, ProjectedStepStaysNonNegative) {
  std::vector<double> q = {0.2, 0.2, 0.2};
  std::vector<double> g = {1.0, -1.0, 0.0};
  ProjectedStep(q, g, 0.5);
  EXPECT_EQ(q, (std::vector<double>{0.0, 0.7, 0.2}));
}

TEST(ScoreAllTest, ShapeRangeAndThreading) {
  ReviewGraph g = testing::SmallGraph();
  DetectorConfig config;
  config.fbox.rank_k = 5;
  ScoreMatrix serial = ScoreAll(g, kAllDetectors, config);
  EXPECT_EQ(serial.num_reviews(), g.num_reviews());
  EXPECT_EQ(serial.num_detectors(), 5u);
  for (double v : serial.values) {
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
  config.parallel = true;
  ScoreMatrix parallel = ScoreAll(g, kAllDetectors, config);
  EXPECT_EQ(parallel.values, serial.values);
  EXPECT_EQ(serial.IndexOf(serial.ids[17]), 17u);
  EXPECT_THROW(serial.IndexOf(ReviewId(1u << 30)), std::out_of_range);
}

TEST(ScoreAllTest, ColumnsFollowRequestedOrder) {
  ReviewGraph g = testing::SmallGraph();
  DetectorConfig config;
  config.fbox.rank_k = 5;
  std::vector<DetectorKind> two = {DetectorKind::kPrior, DetectorKind::kFraudar};
  ScoreMatrix m = ScoreAll(g, two, config);
  ScoreVector prior = PriorScores(g, config.prior);
  ScoreVector fraudar = RunFraudar(g, config.fraudar).scores;
  for (std::size_t i = 0; i < m.num_reviews(); ++i) {
    ASSERT_EQ(m.row(i)[0], prior.values[i]);
    ASSERT_EQ(m.row(i)[1], fraudar.values[i]);
  }
}

TEST(ScoreAllTest, CsvHasHeaderAndRows) {
  ReviewGraph g;
  auto a = AddAccounts(g, 2);
  auto p = AddProducts(g, 1);
  g.AddReview(a[0], p[0], 5, 0);
  g.AddReview(a[1], p[0], 1, 2);
  std::vector<DetectorKind> one = {DetectorKind::kPrior};
  ScoreMatrix m = ScoreAll(g, one);
  std::vector<double> probs = {0.5, 0.6};
  std::ostringstream out;
  WriteScoresCsv(m, probs, out);
  std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "review_id,Prior,probability");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

}  // namespace
}  // namespace spamgame
