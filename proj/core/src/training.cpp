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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "wavelearn/errors.hpp"
#include "wavelearn/grad.hpp"
#include "wavelearn/log.hpp"
#include "wavelearn/random.hpp"

namespace wavelearn {
namespace {

// Stream tags so that initialization and shuffling never share a sequence.
constexpr std::uint64_t kInitStream = 0x696e6974;     // "init"
constexpr std::uint64_t kShuffleStream = 0x73687566;  // "shuf"

void Require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

}  // namespace

void Validate(const TrainingConfig& c) {
  Require(c.filter_length >= 2 && c.filter_length % 2 == 0,
          "filter length must be even and >= 2");
  Require(c.levels >= 1, "levels must be >= 1");
  Require(c.lambda1 >= 0.0 && c.lambda2 >= 0.0,
          "loss weights must be non-negative");
  Require(c.batch_size >= 1, "batch size must be >= 1");
  Require(c.learning_rate > 0.0, "learning rate must be > 0");
  Require(c.adam_beta1 > 0.0 && c.adam_beta1 < 1.0, "beta1 must be in (0, 1)");
  Require(c.adam_beta2 > 0.0 && c.adam_beta2 < 1.0, "beta2 must be in (0, 1)");
  Require(c.adam_eps > 0.0, "adam epsilon must be > 0");
  Require(c.max_steps >= 1, "max steps must be >= 1");
  Require(c.convergence_tol > 0.0, "convergence tolerance must be > 0");
  Require(c.convergence_window >= 1, "convergence window must be >= 1");
}

AdamParams AdamParamsFrom(const TrainingConfig& c) {
  return {c.learning_rate, c.adam_beta1, c.adam_beta2, c.adam_eps};
}

AdamUpdate AdamStep(std::span<const double> params, std::span<const double> grad,
                    const AdamState& state, const AdamParams& adam) {
  AdamUpdate out{std::vector<double>(params.begin(), params.end()), state};
  AdamState& s = out.state;
  if (s.first_moment.size() != params.size()) {
    s = AdamState::Zero(params.size());
  }
  ++s.step;
  const double t = static_cast<double>(s.step);
  const double bias1 = 1.0 - std::pow(adam.beta1, t);
  const double bias2 = 1.0 - std::pow(adam.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    s.first_moment[i] = adam.beta1 * s.first_moment[i] + (1.0 - adam.beta1) * grad[i];
    s.second_moment[i] =
        adam.beta2 * s.second_moment[i] + (1.0 - adam.beta2) * grad[i] * grad[i];
    const double m_hat = s.first_moment[i] / bias1;
    const double v_hat = s.second_moment[i] / bias2;
    out.params[i] -= adam.learning_rate * m_hat / (std::sqrt(v_hat) + adam.eps);
  }
  return out;
}

ScalingFilter InitFilter(int k, std::uint64_t seed) {
  Require(k >= 2 && k % 2 == 0, "filter length must be even and >= 2, got " +
                                    std::to_string(k));
  auto gen = MakeGenerator(seed, {kInitStream});
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> h(static_cast<std::size_t>(k));
  double norm2 = 0.0;
  // An all-zero draw has probability zero; redraw anyway rather than divide.
  while (norm2 == 0.0) {
    for (double& v : h) v = normal(gen);
    norm2 = 0.0;
    for (double v : h) norm2 += v * v;
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (double& v : h) v *= scale;
  return ScalingFilter(std::move(h));
}

ScalingFilter HaarPadded(int k) {
  Require(k >= 2 && k % 2 == 0, "filter length must be even and >= 2");
  std::vector<double> h(static_cast<std::size_t>(k), 0.0);
  h[0] = h[1] = 1.0 / std::sqrt(2.0);
  return ScalingFilter(std::move(h));
}

double TrailingMean(const TrainingHistory& history, int window) {
  const auto& r = history.records;
  if (r.empty()) return 0.0;
  const std::size_t w = std::min(r.size(), static_cast<std::size_t>(window));
  double s = 0.0;
  for (std::size_t i = r.size() - w; i < r.size(); ++i) s += r[i].total;
  return s / static_cast<double>(w);
}

TrainingHistory Train(std::span<const Signal> dataset,
                      const TrainingConfig& config,
                      std::optional<ScalingFilter> initial) {
  Validate(config);
  Require(!dataset.empty(), "dataset is empty");
  const std::size_t n = dataset.front().size();
  for (const Signal& x : dataset) {
    Require(x.size() == n, "dataset mixes signal lengths");
  }
  CheckDepth(n, config.levels);
  if (initial && initial->size() != static_cast<std::size_t>(config.filter_length)) {
    throw InvalidArgument("initial filter length does not match config");
  }
  for (const auto& w : DepthWarnings(n, config.levels,
                                     static_cast<std::size_t>(config.filter_length))) {
    Warn(w);
  }

  const ScalingFilter start =
      initial ? *initial : InitFilter(config.filter_length, config.seed);
  std::vector<double> params(start.coeffs().begin(), start.coeffs().end());
  AdamState state = AdamState::Zero(params.size());
  const AdamParams adam = AdamParamsFrom(config);

  const std::size_t m = dataset.size();
  const std::size_t batch_size =
      std::min(m, static_cast<std::size_t>(config.batch_size));
  std::vector<std::size_t> order(m);
  std::size_t cursor = m;
  std::uint64_t epoch = 0;
  std::vector<Signal> batch;
  batch.reserve(batch_size);

  const auto window = static_cast<std::size_t>(config.convergence_window);
  double window_sum = 0.0;       // last `window` totals
  double prev_window_sum = 0.0;  // the `window` totals before those

  TrainingHistory history;
  history.records.reserve(static_cast<std::size_t>(config.max_steps));
  for (int step = 0; step < config.max_steps; ++step) {
    if (cursor >= m) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      auto gen = MakeGenerator(config.seed, {kShuffleStream, epoch++});
      std::shuffle(order.begin(), order.end(), gen);
      cursor = 0;
    }
    const std::size_t end = std::min(m, cursor + batch_size);
    batch.clear();
    for (std::size_t i = cursor; i < end; ++i) batch.push_back(dataset[order[i]]);
    cursor = end;

    const GradResult r =
        LossAndGrad(batch, params, config.lambda1, config.lambda2, config.levels);
    history.records.push_back({step, r.loss, r.parts.reconstruction,
                               r.parts.sparsity, r.parts.constraint});
    AdamUpdate update = AdamStep(params, r.grad_h, state, adam);
    params = std::move(update.params);
    state = std::move(update.state);

    // Sliding sums over the last two windows, in record order.
    const auto& rec = history.records;
    const std::size_t count = rec.size();
    window_sum += r.loss;
    if (count > window) {
      const double leaving = rec[count - 1 - window].total;
      window_sum -= leaving;
      prev_window_sum += leaving;
      if (count > 2 * window) prev_window_sum -= rec[count - 1 - 2 * window].total;
    }
    if (count >= 2 * window) {
      const double improvement =
          prev_window_sum == 0.0
              ? 0.0
              : (prev_window_sum - window_sum) / std::abs(prev_window_sum);
      if (improvement < config.convergence_tol) {
        history.converged = true;
        break;
      }
    }
  }
  history.final_h = ScalingFilter(std::move(params));
  return history;
}

}  // namespace wavelearn
