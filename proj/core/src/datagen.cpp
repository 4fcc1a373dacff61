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

#include "wavelearn/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "wavelearn/errors.hpp"
#include "wavelearn/random.hpp"
#include "wavelearn/training.hpp"
#include "wavelearn/wav.hpp"

namespace wavelearn {
namespace {

constexpr std::uint64_t kSynthStream = 0x73796e74;  // "synt"
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void Require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

}  // namespace

std::string_view BaseWaveName(BaseWave base) {
  switch (base) {
    case BaseWave::kSine: return "sine";
    case BaseWave::kSawtooth: return "sawtooth";
    case BaseWave::kSquare: return "square";
  }
  return "";
}

BaseWave ParseBaseWave(std::string_view name) {
  if (name == "sine") return BaseWave::kSine;
  if (name == "sawtooth") return BaseWave::kSawtooth;
  if (name == "square") return BaseWave::kSquare;
  throw InvalidArgument("unknown base wave '" + std::string(name) +
                        "' (expected sine, sawtooth or square)");
}

double EvaluateBaseWave(BaseWave base, double t) {
  switch (base) {
    case BaseWave::kSine:
      return std::sin(t);
    case BaseWave::kSquare:
      return std::sin(t) >= 0.0 ? 1.0 : -1.0;
    case BaseWave::kSawtooth: {
      const double cycles = t / kTwoPi;
      return 2.0 * (cycles - std::floor(cycles)) - 1.0;
    }
  }
  return 0.0;
}

void Validate(const SynthConfig& c) {
  Require(c.harmonics >= 1, "harmonic count must be >= 1");
  Require(c.probability >= 0.0 && c.probability <= 1.0,
          "harmonic probability must be in [0, 1]");
  Require(IsPowerOfTwo(c.length), "signal length must be a power of two");
  Require(c.count >= 1, "dataset size must be >= 1");
  Require(c.cycles >= 1, "cycles must be >= 1");
  Require(c.harmonics < 62, "harmonic count too large");
  Require(c.window_count_min >= 1 && c.window_count_max >= c.window_count_min,
          "window count range must satisfy 1 <= min <= max");
  Require(c.window_std_fraction > 0.0, "window std fraction must be > 0");
}

HarmonicDraw DrawHarmonics(const SynthConfig& config, std::uint64_t index) {
  Validate(config);
  auto gen = MakeGenerator(config.seed, {kSynthStream, index});
  std::bernoulli_distribution indicator(config.probability);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  const auto K = static_cast<std::size_t>(config.harmonics);
  HarmonicDraw draw;
  draw.active.resize(K);
  draw.phases.resize(K);
  draw.window_centers.resize(K);
  for (std::size_t k = 0; k < K; ++k) {
    draw.active[k] = indicator(gen) ? 1 : 0;
    draw.phases[k] = phase(gen);
  }
  if (config.windowed) {
    std::uniform_int_distribution<int> count(config.window_count_min,
                                             config.window_count_max);
    std::uniform_real_distribution<double> center(
        0.0, static_cast<double>(config.length));
    for (std::size_t k = 0; k < K; ++k) {
      if (!draw.active[k]) continue;
      const int c = count(gen);
      for (int w = 0; w < c; ++w) draw.window_centers[k].push_back(center(gen));
    }
  }
  return draw;
}

std::vector<double> GaussianEnvelope(std::size_t length,
                                     std::span<const double> centers,
                                     double std_dev) {
  std::vector<double> env(length, 0.0);
  const double denom = 2.0 * std_dev * std_dev;
  for (double c : centers) {
    for (std::size_t n = 0; n < length; ++n) {
      const double d = static_cast<double>(n) - c;
      env[n] += std::exp(-d * d / denom);
    }
  }
  return env;
}

Signal RenderHarmonic(const SynthConfig& config, const HarmonicDraw& draw) {
  const std::size_t N = config.length;
  const double std_dev = config.window_std_fraction * static_cast<double>(N);
  std::vector<double> x(N, 0.0);
  for (std::size_t k = 0; k < draw.active.size(); ++k) {
    if (!draw.active[k]) continue;
    const std::uint64_t rate = static_cast<std::uint64_t>(config.cycles) << k;
    std::vector<double> env;
    if (config.windowed) env = GaussianEnvelope(N, draw.window_centers[k], std_dev);
    for (std::size_t n = 0; n < N; ++n) {
      // Reduce the integer phase index modulo N before scaling.
      const auto turns = static_cast<double>((rate * n) % N);
      const double t = kTwoPi * turns / static_cast<double>(N) + draw.phases[k];
      double v = EvaluateBaseWave(config.base, t);
      if (config.windowed) v *= env[n];
      x[n] += v;
    }
  }
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak > 1.0) {
    for (double& v : x) v /= peak;
  }
  return Signal(std::move(x));
}

Signal SynthHarmonic(const SynthConfig& config, std::uint64_t index) {
  SynthConfig plain = config;
  plain.windowed = false;
  return RenderHarmonic(plain, DrawHarmonics(plain, index));
}

Signal SynthWindowed(const SynthConfig& config, std::uint64_t index) {
  Require(config.windowed, "windowed synthesis needs windowed = true");
  return RenderHarmonic(config, DrawHarmonics(config, index));
}

std::vector<Signal> MakeDataset(const SynthConfig& config) {
  Validate(config);
  std::vector<Signal> out;
  out.reserve(config.count);
  for (std::size_t i = 0; i < config.count; ++i) {
    out.push_back(config.windowed ? SynthWindowed(config, i)
                                  : SynthHarmonic(config, i));
  }
  return out;
}

std::vector<Signal> Segment(std::span<const double> samples, std::size_t n,
                            std::size_t hop) {
  Require(IsPowerOfTwo(n), "segment length must be a power of two");
  Require(hop >= 1, "hop must be >= 1");
  std::vector<Signal> out;
  for (std::size_t start = 0; start + n <= samples.size(); start += hop) {
    auto part = samples.subspan(start, n);
    out.emplace_back(std::vector<double>(part.begin(), part.end()));
  }
  return out;
}

std::vector<Signal> LoadWavSegments(const std::string& path, std::size_t n,
                                    std::size_t hop) {
  const WavAudio audio = ReadWav16(path);
  return Segment(audio.mono, n, hop);
}

RandomWaveletResult RandomWaveletSearch(int k, std::uint64_t seed, int max_steps,
                                        double target) {
  const ScalingFilter start = InitFilter(k, seed);
  std::vector<double> h(start.coeffs().begin(), start.coeffs().end());
  AdamState state = AdamState::Zero(h.size());
  const AdamParams adam;
  std::vector<double> grad(h.size());
  RandomWaveletResult result;
  result.residual = WaveletLoss(h).total;
  while (result.residual >= target && result.steps < max_steps) {
    std::fill(grad.begin(), grad.end(), 0.0);
    AccumulateWaveletLossGradient(h, 1.0, grad);
    AdamUpdate update = AdamStep(h, grad, state, adam);
    h = std::move(update.params);
    state = std::move(update.state);
    ++result.steps;
    result.residual = WaveletLoss(h).total;
  }
  result.converged = result.residual < target;
  result.filter = ScalingFilter(std::move(h));
  return result;
}

ScalingFilter RandomWavelet(int k, std::uint64_t seed) {
  RandomWaveletResult r = RandomWaveletSearch(k, seed);
  if (!r.converged) {
    throw ConvergenceError("random wavelet search stopped after " +
                               std::to_string(r.steps) +
                               " steps with constraint residual " +
                               std::to_string(r.residual),
                           r.residual);
  }
  return r.filter;
}

}  // namespace wavelearn
