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

#include "wavelearn/grad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavelearn/errors.hpp"
#include "wavelearn/filterbank.hpp"

namespace wavelearn {
namespace {

double Sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void Validate(std::span<const Signal> batch, std::span<const double> h,
              double lambda1, double lambda2, int levels) {
  if (batch.empty()) throw InvalidArgument("batch is empty");
  const std::size_t n = batch.front().size();
  for (const Signal& x : batch) {
    if (x.size() != n) {
      throw InvalidArgument("batch mixes signal lengths " + std::to_string(n) +
                            " and " + std::to_string(x.size()));
    }
  }
  if (h.size() < 2 || h.size() % 2 != 0) {
    throw InvalidArgument("filter length must be even and >= 2");
  }
  if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0)) {
    throw InvalidArgument("loss weights must be non-negative");
  }
  CheckDepth(n, levels);
}

// Buffers for one signal's forward and backward pass. Index j of `analysis`
// holds a_j (a_0 = x); index j of `synthesis` holds the synthesis-side
// approximation at level j (synthesis[J] = a_J, synthesis[0] = x_hat).
struct Workspace {
  std::vector<std::vector<double>> analysis;
  std::vector<std::vector<double>> details;  // details[j] = d_{j+1}
  std::vector<std::vector<double>> synthesis;
  std::vector<std::vector<double>> grad_synthesis;
  std::vector<std::vector<double>> grad_analysis;
  std::vector<std::vector<double>> grad_details;

  Workspace(std::size_t n, int levels) {
    const auto J = static_cast<std::size_t>(levels);
    analysis.resize(J + 1);
    synthesis.resize(J + 1);
    grad_synthesis.resize(J + 1);
    grad_analysis.resize(J + 1);
    details.resize(J);
    grad_details.resize(J);
    for (std::size_t j = 0, len = n; j <= J; ++j, len /= 2) {
      analysis[j].resize(len);
      synthesis[j].resize(len);
      grad_synthesis[j].resize(len);
      grad_analysis[j].resize(len);
      if (j < J) {
        details[j].resize(len / 2);
        grad_details[j].resize(len / 2);
      }
    }
  }
};

}  // namespace

GradResult LossAndGrad(std::span<const Signal> batch, std::span<const double> h,
                       double lambda1, double lambda2, int levels) {
  Validate(batch, h, lambda1, lambda2, levels);
  const std::vector<double> g = DeriveQmf(h);
  const std::size_t k = h.size();
  const auto J = static_cast<std::size_t>(levels);
  const double inv_m = 1.0 / static_cast<double>(batch.size());

  std::vector<double> grad_h(k, 0.0);
  std::vector<double> grad_g(k, 0.0);
  double recon_sum = 0.0;
  double l1_sum = 0.0;
  Workspace ws(batch.front().size(), levels);

  for (const Signal& x : batch) {
    // Analysis.
    std::copy(x.samples().begin(), x.samples().end(), ws.analysis[0].begin());
    for (std::size_t j = 0; j < J; ++j) {
      DownsampleCorrelate(h, ws.analysis[j], ws.analysis[j + 1]);
      DownsampleCorrelate(g, ws.analysis[j], ws.details[j]);
    }
    // Synthesis.
    ws.synthesis[J] = ws.analysis[J];
    for (std::size_t j = J; j-- > 0;) {
      auto& out = ws.synthesis[j];
      std::fill(out.begin(), out.end(), 0.0);
      UpsampleConvolveAdd(h, ws.synthesis[j + 1], out);
      UpsampleConvolveAdd(g, ws.details[j], out);
    }

    // Loss terms and dL/dx_hat.
    auto& grad_xhat = ws.grad_synthesis[0];
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = ws.synthesis[0][i] - x[i];
      recon_sum += r * r;
      grad_xhat[i] = 2.0 * r * inv_m;
    }
    for (const auto& d : ws.details) {
      for (double c : d) l1_sum += std::abs(c);
    }
    for (double c : ws.analysis[J]) l1_sum += std::abs(c);

    // Backward through synthesis, finest level first.
    for (std::size_t j = 0; j < J; ++j) {
      const auto& upstream = ws.grad_synthesis[j];
      AccumulateTapGradient(ws.synthesis[j + 1], upstream, grad_h);
      AccumulateTapGradient(ws.details[j], upstream, grad_g);
      DownsampleCorrelate(h, upstream, ws.grad_synthesis[j + 1]);
      DownsampleCorrelate(g, upstream, ws.grad_details[j]);
    }

    // Sparsity subgradient on every coefficient.
    const double l1_weight = lambda1 * inv_m;
    for (std::size_t j = 0; j < J; ++j) {
      auto& gd = ws.grad_details[j];
      const auto& d = ws.details[j];
      for (std::size_t p = 0; p < d.size(); ++p) gd[p] += l1_weight * Sign(d[p]);
    }
    auto& grad_aj = ws.grad_analysis[J];
    for (std::size_t p = 0; p < grad_aj.size(); ++p) {
      grad_aj[p] = ws.grad_synthesis[J][p] + l1_weight * Sign(ws.analysis[J][p]);
    }

    // Backward through analysis, coarsest level first.
    for (std::size_t j = J; j-- > 0;) {
      AccumulateTapGradient(ws.grad_analysis[j + 1], ws.analysis[j], grad_h);
      AccumulateTapGradient(ws.grad_details[j], ws.analysis[j], grad_g);
      if (j == 0) break;
      auto& ga = ws.grad_analysis[j];
      std::fill(ga.begin(), ga.end(), 0.0);
      UpsampleConvolveAdd(h, ws.grad_analysis[j + 1], ga);
      UpsampleConvolveAdd(g, ws.grad_details[j], ga);
    }
  }

  // g[n] = (-1)^n h[k-1-n].
  for (std::size_t n = 0; n < k; ++n) {
    grad_h[k - 1 - n] += (n % 2 == 0) ? grad_g[n] : -grad_g[n];
  }
  AccumulateWaveletLossGradient(h, lambda2, grad_h);

  GradResult result;
  result.parts.reconstruction = recon_sum * inv_m;
  result.parts.sparsity = lambda1 * l1_sum * inv_m;
  result.parts.constraint = lambda2 * WaveletLoss(h).total;
  result.loss = result.parts.reconstruction + result.parts.sparsity +
                result.parts.constraint;
  result.grad_h = std::move(grad_h);
  return result;
}

double EvaluateLoss(std::span<const Signal> batch, std::span<const double> h,
                    double lambda1, double lambda2, int levels) {
  Validate(batch, h, lambda1, lambda2, levels);
  const FilterPair pair(ScalingFilter(std::vector<double>(h.begin(), h.end())));
  double recon = 0.0;
  double l1 = 0.0;
  for (const Signal& x : batch) {
    std::vector<std::vector<double>> details;
    std::vector<double> a(x.samples().begin(), x.samples().end());
    for (int j = 0; j < levels; ++j) {
      StepOutput step = DwtStep(a, pair);
      for (double c : step.detail) l1 += std::abs(c);
      details.push_back(std::move(step.detail));
      a = std::move(step.approx);
    }
    for (double c : a) l1 += std::abs(c);
    for (int j = levels; j-- > 0;) a = IdwtStep(a, details[j], pair);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = a[i] - x[i];
      recon += r * r;
    }
  }
  const double inv_m = 1.0 / static_cast<double>(batch.size());
  return recon * inv_m + lambda1 * l1 * inv_m + lambda2 * WaveletLoss(h).total;
}

FdReport FdCheck(std::span<const Signal> batch, std::span<const double> h,
                 double lambda1, double lambda2, int levels, double step) {
  if (!(step > 0.0)) throw InvalidArgument("finite-difference step must be > 0");
  FdReport report;
  report.analytic = LossAndGrad(batch, h, lambda1, lambda2, levels).grad_h;
  std::vector<double> probe(h.begin(), h.end());
  report.numeric.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    probe[i] = h[i] + step;
    const double up = EvaluateLoss(batch, probe, lambda1, lambda2, levels);
    probe[i] = h[i] - step;
    const double down = EvaluateLoss(batch, probe, lambda1, lambda2, levels);
    probe[i] = h[i];
    report.numeric[i] = (up - down) / (2.0 * step);
    const double a = report.analytic[i];
    const double num = report.numeric[i];
    report.max_rel_error =
        std::max(report.max_rel_error,
                 std::abs(a - num) / std::max(1e-8, std::abs(a) + std::abs(num)));
  }
  return report;
}

}  // namespace wavelearn
