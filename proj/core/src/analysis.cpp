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

#include "wavelearn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "wavelearn/errors.hpp"
#include "wavelearn/random.hpp"

namespace wavelearn {
namespace {

constexpr std::uint64_t kSampleStream = 0x73616d70;  // "samp"
constexpr double kTieTolerance = 1e-12;

// sqrt(2) * (upsample2(p) conv f), full length 2 (|p| - 1) + |f|.
std::vector<double> RefineStep(std::span<const double> p,
                               std::span<const double> f) {
  std::vector<double> out(2 * (p.size() - 1) + f.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double v = std::numbers::sqrt2 * p[i];
    for (std::size_t m = 0; m < f.size(); ++m) out[2 * i + m] += v * f[m];
  }
  return out;
}

// Iterates from `start` with h; pads with zeros to `total` samples.
std::vector<double> Iterate(std::vector<double> p, std::span<const double> h,
                            int steps, std::size_t total) {
  for (int i = 0; i < steps; ++i) p = RefineStep(p, h);
  p.resize(total, 0.0);
  return p;
}

}  // namespace

double SampledFunction::Integral() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * grid_step;
}

CascadeResult Cascade(std::span<const double> h, int iterations) {
  if (iterations < 1 || iterations > 24) {
    throw InvalidArgument("cascade iterations must be in [1, 24], got " +
                          std::to_string(iterations));
  }
  if (h.size() < 2) throw InvalidArgument("cascade needs at least two taps");
  const std::vector<double> g = DeriveQmf(h);
  const std::size_t k = h.size();
  const std::size_t total = (k - 1) * (std::size_t{1} << iterations) + 1;
  const std::size_t coarse_total =
      (k - 1) * (std::size_t{1} << (iterations - 1)) + 1;
  const double step = std::ldexp(1.0, -iterations);

  CascadeResult r;
  const std::vector<double> coarse = Iterate({1.0}, h, iterations - 1, coarse_total);
  r.phi.values = Iterate(coarse, h, 1, total);
  // Zero padding on `coarse` only adds trailing zeros after refinement.
  r.psi.values = Iterate(RefineStep(std::vector<double>{1.0}, g), h,
                         iterations - 1, total);
  r.phi.grid_step = r.psi.grid_step = step;
  for (std::size_t m = 0; m < coarse.size(); ++m) {
    r.convergence_delta =
        std::max(r.convergence_delta, std::abs(r.phi.values[2 * m] - coarse[m]));
  }
  return r;
}

std::vector<double> CircularShift(std::span<const double> h, std::ptrdiff_t i) {
  const auto k = static_cast<std::ptrdiff_t>(h.size());
  std::vector<double> out(h.size());
  for (std::ptrdiff_t n = 0; n < k; ++n) {
    out[static_cast<std::size_t>(n)] = h[static_cast<std::size_t>(((n - i) % k + k) % k)];
  }
  return out;
}

double FilterDistance(std::span<const double> a, std::span<const double> b) {
  const std::size_t k = std::max(a.size(), b.size());
  std::vector<double> x(k, 0.0), y(k, 0.0);
  std::copy(a.begin(), a.end(), x.begin());
  std::copy(b.begin(), b.end(), y.begin());
  double nx = 0.0, ny = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    nx += x[i] * x[i];
    ny += y[i] * y[i];
  }
  if (nx == 0.0 || ny == 0.0) {
    throw InvalidArgument("filter distance is undefined for a zero filter");
  }
  const double scale = 1.0 / (std::sqrt(nx) * std::sqrt(ny));
  double best = 2.0;
  for (std::size_t shift = 0; shift < k; ++shift) {
    double dot = 0.0;
    for (std::size_t n = 0; n < k; ++n) dot += x[n] * y[(n + k - shift) % k];
    best = std::min(best, 1.0 - dot * scale);
  }
  return std::clamp(best, 0.0, 2.0);
}

std::vector<WaveletMatch> ClosestWavelet(std::span<const double> h) {
  std::vector<WaveletMatch> matches;
  for (const auto& id : ClassicalWaveletIds()) {
    matches.push_back({id, FilterDistance(h, ClassicalFilter(id).coeffs()), 0});
  }
  // Database order already follows the tie-break order.
  std::stable_sort(matches.begin(), matches.end(),
                   [](const WaveletMatch& x, const WaveletMatch& y) {
                     return x.distance < y.distance;
                   });
  std::size_t group = 0;
  while (group < matches.size()) {
    std::size_t end = group + 1;
    while (end < matches.size() &&
           matches[end].distance - matches[group].distance <= kTieTolerance) {
      ++end;
    }
    std::sort(matches.begin() + static_cast<std::ptrdiff_t>(group),
              matches.begin() + static_cast<std::ptrdiff_t>(end),
              [](const WaveletMatch& x, const WaveletMatch& y) { return x.id < y.id; });
    for (std::size_t i = group; i < end; ++i) {
      matches[i].rank = static_cast<int>(group) + 1;
    }
    group = end;
  }
  return matches;
}

WaveletDecomposition SampleCoefficients(const SampleOptions& o) {
  if (!(o.density > 0.0 && o.density <= 1.0)) {
    throw InvalidArgument("density must be in (0, 1]");
  }
  CheckDepth(o.length, o.levels);
  if (o.zero_top_scales < 0 || o.zero_top_scales > o.levels) {
    throw InvalidArgument("zero_top_scales must be in [0, levels]");
  }
  auto gen = MakeGenerator(o.seed, {kSampleStream});
  std::bernoulli_distribution present(o.density);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<double> flat(o.length, 0.0);
  for (double& c : flat) {
    if (present(gen)) c = value(gen);
  }
  WaveletDecomposition d = Unflatten(std::span<const double>(flat), o.levels);
  for (int level = 1; level <= o.zero_top_scales; ++level) {
    auto& detail = d.detail(level);
    std::fill(detail.begin(), detail.end(), 0.0);
  }
  return d;
}

Signal SampleSignal(const FilterPair& pair, const SampleOptions& options) {
  return Idwt(SampleCoefficients(options), pair);
}

}  // namespace wavelearn
