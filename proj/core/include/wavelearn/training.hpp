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

// Minibatch Adam training of the scaling filter.

#ifndef WAVELEARN_TRAINING_HPP_
#define WAVELEARN_TRAINING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wavelearn/filterbank.hpp"
#include "wavelearn/transform.hpp"

namespace wavelearn {

struct TrainingConfig {
  int filter_length = 20;
  int levels = 6;
  double lambda1 = 0.5;
  double lambda2 = 0.5;
  int batch_size = 32;
  double learning_rate = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  int max_steps = 50000;
  double convergence_tol = 1e-5;
  int convergence_window = 500;
  std::uint64_t seed = 0;
};

// Throws InvalidArgument describing the first violated field.
void Validate(const TrainingConfig& config);

struct AdamParams {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

AdamParams AdamParamsFrom(const TrainingConfig& config);

struct AdamState {
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  std::int64_t step = 0;

  static AdamState Zero(std::size_t size) {
    return {std::vector<double>(size, 0.0), std::vector<double>(size, 0.0), 0};
  }
};

struct AdamUpdate {
  std::vector<double> params;
  AdamState state;
};

// Bias-corrected Adam: params - lr * m_hat / (sqrt(v_hat) + eps).
AdamUpdate AdamStep(std::span<const double> params, std::span<const double> grad,
                    const AdamState& state, const AdamParams& adam);

// Standard-normal taps from a generator seeded by `seed`, scaled to unit norm.
// Throws InvalidArgument on odd or non-positive k.
ScalingFilter InitFilter(int k, std::uint64_t seed);

// Haar taps followed by zeros up to length k.
ScalingFilter HaarPadded(int k);

struct TrainingRecord {
  int step = 0;
  double total = 0.0;
  double reconstruction = 0.0;
  double sparsity = 0.0;
  double constraint = 0.0;
};

struct TrainingHistory {
  std::vector<TrainingRecord> records;
  ScalingFilter final_h{std::vector<double>{1.0, 1.0}};
  bool converged = false;
};

// Mean total loss over the last `window` records (all records if fewer).
double TrailingMean(const TrainingHistory& history, int window);

// Shuffles the dataset every epoch with a generator seeded from
// (config.seed, epoch) and stops once the relative improvement between two
// consecutive trailing windows drops below config.convergence_tol, or at
// config.max_steps. `initial` defaults to InitFilter(k, config.seed).
TrainingHistory Train(std::span<const Signal> dataset,
                      const TrainingConfig& config,
                      std::optional<ScalingFilter> initial = std::nullopt);

}  // namespace wavelearn

#endif  // WAVELEARN_TRAINING_HPP_
