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

#include "wavelearn/filterbank.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "wavelearn/errors.hpp"

namespace wavelearn {

ScalingFilter::ScalingFilter(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2 || coeffs_.size() % 2 != 0) {
    throw InvalidArgument("scaling filter length must be even and >= 2, got " +
                          std::to_string(coeffs_.size()));
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) {
      throw InvalidArgument("scaling filter has a non-finite tap");
    }
  }
}

std::vector<double> DeriveQmf(std::span<const double> h) {
  const std::size_t k = h.size();
  std::vector<double> g(k);
  for (std::size_t n = 0; n < k; ++n) {
    const double tap = h[k - 1 - n];
    g[n] = (n % 2 == 0) ? tap : -tap;
  }
  return g;
}

FilterPair::FilterPair(ScalingFilter h)
    : h_(std::move(h)), g_(DeriveQmf(h_.coeffs())) {}

namespace {

double Norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double Mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// mean(g) from h directly: sum over n of (-1)^n h[k-1-n].
double QmfMean(std::span<const double> h) {
  const std::size_t k = h.size();
  double s = 0.0;
  for (std::size_t n = 0; n < k; ++n) {
    const double tap = h[k - 1 - n];
    s += (n % 2 == 0) ? tap : -tap;
  }
  return s / static_cast<double>(k);
}

}  // namespace

ConstraintReport WaveletLoss(std::span<const double> h) {
  const double k = static_cast<double>(h.size());
  const double norm_dev = Norm2(h) - 1.0;
  const double mean_dev = Mean(h) - std::numbers::sqrt2 / k;
  const double mean_g = QmfMean(h);
  ConstraintReport r;
  r.l2_residual = norm_dev * norm_dev;
  r.mean_h_residual = mean_dev * mean_dev;
  r.mean_g_residual = mean_g * mean_g;
  r.total = r.l2_residual + r.mean_h_residual + r.mean_g_residual;
  return r;
}

void AccumulateWaveletLossGradient(std::span<const double> h, double weight,
                                   std::span<double> grad) {
  const std::size_t k = h.size();
  const double kd = static_cast<double>(k);
  const double norm = Norm2(h);
  const double norm_scale = norm > 0.0 ? 2.0 * (norm - 1.0) / norm : 0.0;
  const double mean_h_scale = 2.0 * (Mean(h) - std::numbers::sqrt2 / kd) / kd;
  const double mean_g_scale = 2.0 * QmfMean(h) / kd;
  for (std::size_t i = 0; i < k; ++i) {
    // h[i] enters g at n = k-1-i with sign (-1)^n.
    const std::size_t n = k - 1 - i;
    const double g_sign = (n % 2 == 0) ? 1.0 : -1.0;
    grad[i] += weight * (norm_scale * h[i] + mean_h_scale +
                         mean_g_scale * g_sign);
  }
}

OrthonormalityReport ValidateOrthonormal(std::span<const double> h,
                                         double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  OrthonormalityReport r;
  double sum = 0.0;
  for (double x : h) sum += x;
  r.sum_error = std::abs(sum - std::numbers::sqrt2);
  r.norm_error = std::abs(Norm2(h) - 1.0);
  const auto k = static_cast<std::ptrdiff_t>(h.size());
  for (std::ptrdiff_t shift = 2; shift < k; shift += 2) {
    double inner = 0.0;
    for (std::ptrdiff_t n = shift; n < k; ++n) inner += h[n] * h[n - shift];
    r.max_shift_inner = std::max(r.max_shift_inner, std::abs(inner));
  }
  r.ok = r.sum_error <= tol && r.norm_error <= tol && r.max_shift_inner <= tol;
  return r;
}

}  // namespace wavelearn
