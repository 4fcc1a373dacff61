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

// Autoencoder loss and its exact gradient with respect to the scaling filter.
//
// For a batch x_1..x_M, with W the J-level analysis transform and x_hat its
// weight-tied synthesis,
//
//   L(h) = 1/M sum ||x_i - x_hat_i||^2
//        + lambda1 * 1/M sum ||W(x_i)||_1
//        + lambda2 * L_w(h)
//
// The gradient is obtained by running the adjoint of each filter-bank level
// backwards through synthesis and then analysis, accumulating tap gradients
// for h and g separately, and finally folding dL/dg back onto h through the
// alternating flip. The subgradient of |c| at c = 0 is taken as 0.

#ifndef WAVELEARN_GRAD_HPP_
#define WAVELEARN_GRAD_HPP_

#include <span>
#include <vector>

#include "wavelearn/transform.hpp"

namespace wavelearn {

struct LossParts {
  double reconstruction = 0.0;  // 1/M sum ||x - x_hat||^2
  double sparsity = 0.0;        // lambda1 * 1/M sum ||W(x)||_1
  double constraint = 0.0;      // lambda2 * L_w(h)
};

struct GradResult {
  double loss = 0.0;
  std::vector<double> grad_h;
  LossParts parts;
};

// Throws InvalidArgument on an empty batch, mixed signal lengths, an odd or
// short filter, negative weights or an infeasible depth.
GradResult LossAndGrad(std::span<const Signal> batch, std::span<const double> h,
                       double lambda1, double lambda2, int levels);

// Loss value only, computed through the public DwtStep/IdwtStep path.
double EvaluateLoss(std::span<const Signal> batch, std::span<const double> h,
                    double lambda1, double lambda2, int levels);

struct FdReport {
  std::vector<double> analytic;
  std::vector<double> numeric;
  // max_i |a_i - n_i| / max(1e-8, |a_i| + |n_i|)
  double max_rel_error = 0.0;
};

// Central differences with the given step, against LossAndGrad.
FdReport FdCheck(std::span<const Signal> batch, std::span<const double> h,
                 double lambda1, double lambda2, int levels, double step);

}  // namespace wavelearn

#endif  // WAVELEARN_GRAD_HPP_
