// Copyright 2026 The wavelearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wavelearn/training.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "wavelearn/datagen.hpp"
#include "wavelearn/errors.hpp"
#include "wavelearn/log.hpp"

namespace wavelearn {
namespace {

double Norm(std::span<const double> v) { return std::sqrt(testing::Dot(v, v)); }

TEST(InitFilterTest, UnitNormAndDeterministic) {
  for (int k : {2, 4, 8, 20, 64}) {
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
      const auto h = InitFilter(k, seed);
      EXPECT_EQ(h.size(), static_cast<std::size_t>(k));
      EXPECT_NEAR(Norm(h.coeffs()), 1.0, 1e-12);
      EXPECT_EQ(h, InitFilter(k, seed));
    }
  }
  EXPECT_NE(InitFilter(20, 1), InitFilter(20, 2));
}

TEST(InitFilterTest, OddLengthThrows) {
  EXPECT_THROW(InitFilter(3, 0), InvalidArgument);
  EXPECT_THROW(InitFilter(0, 0), InvalidArgument);
}

TEST(InitFilterTest, MeanTapIsUnbiasedAcrossSeeds) {
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto h = InitFilter(20, seed);
    double mean = 0.0;
    for (double v : h.coeffs()) mean += v;
    total += mean / 20.0;
  }
  EXPECT_LT(std::abs(total / 1000.0), 0.02);
}

TEST(AdamStepTest, ZeroGradientLeavesParamsUnchanged) {
  const std::vector<double> h{0.3, -0.2, 0.1, 0.4};
  const auto out = AdamStep(h, std::vector<double>(4, 0.0), AdamState::Zero(4), {});
  EXPECT_EQ(out.params, h);
  EXPECT_EQ(out.state.step, 1);
}

TEST(AdamStepTest, FirstStepWithUnitGradient) {
  const std::vector<double> h(5, 0.0);
  const auto out = AdamStep(h, std::vector<double>(5, 1.0), AdamState::Zero(5), {});
  // m_hat = 1, v_hat = 1 after bias correction.
  for (double v : out.params) EXPECT_NEAR(v, -1e-3 / (1.0 + 1e-8), 1e-18);
}

TEST(AdamStepTest, ConstantGradientGivesLearningRateSteps) {
  std::vector<double> h{0.0, 0.0};
  const std::vector<double> grad{2.5, -0.01};
  AdamState state = AdamState::Zero(2);
  std::vector<double> before;
  for (int t = 0; t < 20000; ++t) {
    before = h;
    auto out = AdamStep(h, grad, state, {});
    h = std::move(out.params);
    state = std::move(out.state);
  }
  EXPECT_NEAR(h[0] - before[0], -1e-3, 1e-9);
  EXPECT_NEAR(h[1] - before[1], 1e-3, 1e-8);
}

TEST(HaarPaddedTest, SatisfiesConstraints) {
  const auto h = HaarPadded(20);
  EXPECT_EQ(h.size(), 20u);
  EXPECT_LT(WaveletLoss(h).total, 1e-30);
}

TrainingConfig SmallConfig() {
  TrainingConfig c;
  c.filter_length = 8;
  c.levels = 3;
  c.batch_size = 8;
  c.max_steps = 300;
  c.convergence_window = 50;
  c.seed = 5;
  return c;
}

TrainingHistory ZeroDataFromHaar() {
  const std::vector<Signal> data(16, Signal(std::vector<double>(64, 0.0)));
  TrainingConfig c = SmallConfig();
  c.filter_length = 20;
  c.levels = 2;
  c.lambda1 = 0.0;
  c.max_steps = 100;
  c.convergence_window = 1000;
  return Train(data, c, HaarPadded(20));
}

TEST(TrainTest, ZeroDataAtMinimumKeepsLossNearZero) {
  const auto history = ZeroDataFromHaar();
  ASSERT_EQ(history.records.size(), 100u);
  for (const auto& r : history.records) EXPECT_LT(r.total, 1e-6);
  EXPECT_LT(WaveletLoss(history.final_h).total, 1e-8);
}

TEST(TrainTest, ZeroDataAtMinimumFilterDriftBelowMicro) {
  const auto history = ZeroDataFromHaar();
  EXPECT_LT(testing::MaxAbsDiff(history.final_h.coeffs(), HaarPadded(20).coeffs()),
            1e-6);
}

TEST(TrainTest, ConstraintOnlyRunReachesSmallResidual) {
  const std::vector<Signal> data(4, Signal(std::vector<double>(32, 0.0)));
  TrainingConfig c = SmallConfig();
  c.filter_length = 20;
  c.levels = 1;
  c.lambda1 = 0.0;
  c.lambda2 = 1.0;
  c.max_steps = 5000;
  c.convergence_window = 5000;  // run the full budget
  const auto history = Train(data, c);
  EXPECT_LT(WaveletLoss(history.final_h).total, 1e-6);
}

std::vector<Signal> SmallSineDataset(std::uint64_t seed) {
  SynthConfig s;
  s.harmonics = 3;
  s.length = 64;
  s.count = 64;
  s.cycles = 2;
  s.seed = seed;
  return MakeDataset(s);
}

TEST(TrainTest, ReproducibleBitwise) {
  auto previous = SetWarningSink({});
  const auto data = SmallSineDataset(3);
  const auto a = Train(data, SmallConfig());
  const auto b = Train(data, SmallConfig());
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].total, b.records[i].total);
    EXPECT_EQ(a.records[i].sparsity, b.records[i].sparsity);
  }
  EXPECT_EQ(a.final_h, b.final_h);
  EXPECT_EQ(a.converged, b.converged);
  SetWarningSink(std::move(previous));
}

TEST(TrainTest, HistoryStepsIncreaseAndLossDecreases) {
  auto previous = SetWarningSink({});
  const auto data = SmallSineDataset(4);
  TrainingConfig c = SmallConfig();
  c.max_steps = 3000;
  const auto history = Train(data, c);
  for (std::size_t i = 0; i < history.records.size(); ++i) {
    EXPECT_EQ(history.records[i].step, static_cast<int>(i));
  }
  EXPECT_EQ(history.final_h.size(), 8u);
  EXPECT_LT(TrailingMean(history, 50), 0.5 * history.records.front().total);
  SetWarningSink(std::move(previous));
}

TEST(TrainTest, SmoothRunsDescendWindowByWindow) {
  auto previous = SetWarningSink({});
  int monotone_runs = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto data = SmallSineDataset(100 + seed);
    TrainingConfig c = SmallConfig();
    c.lambda1 = 0.0;
    c.seed = seed;
    c.max_steps = 2000;
    const auto history = Train(data, c);
    const std::size_t w = static_cast<std::size_t>(c.convergence_window);
    std::vector<double> means;
    for (std::size_t start = 0; start + w <= history.records.size(); start += w) {
      double s = 0.0;
      for (std::size_t i = start; i < start + w; ++i) s += history.records[i].total;
      means.push_back(s / static_cast<double>(w));
    }
    bool monotone = true;
    for (std::size_t i = 1; i < means.size(); ++i) monotone &= means[i] <= means[i - 1];
    monotone_runs += monotone ? 1 : 0;
  }
  EXPECT_GE(monotone_runs, 19);
  SetWarningSink(std::move(previous));
}

TEST(TrainTest, InvalidInputsThrow) {
  const auto data = SmallSineDataset(1);
  TrainingConfig c = SmallConfig();
  EXPECT_THROW(Train({}, c), InvalidArgument);
  c.filter_length = 7;
  EXPECT_THROW(Train(data, c), InvalidArgument);
  c = SmallConfig();
  c.levels = 7;  // 64 samples support at most 6 levels
  EXPECT_THROW(Train(data, c), InvalidArgument);
  c = SmallConfig();
  c.learning_rate = 0.0;
  EXPECT_THROW(Train(data, c), InvalidArgument);
  c = SmallConfig();
  c.lambda2 = -1.0;
  EXPECT_THROW(Train(data, c), InvalidArgument);
  c = SmallConfig();
  EXPECT_THROW(Train(data, c, HaarPadded(4)), InvalidArgument);
  std::vector<Signal> mixed = data;
  mixed.emplace_back(std::vector<double>(32, 0.0));
  EXPECT_THROW(Train(mixed, SmallConfig()), InvalidArgument);
}

}  // namespace
}  // namespace wavelearn
