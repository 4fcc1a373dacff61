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

// Synthetic training data.
//
// A harmonic signal sums octave-spaced copies of a periodic base wave,
//
//   x[n] = sum_{k=0}^{K-1} a_k s(2^k theta_n + phi_k),
//   theta_n = 2 pi cycles n / N,
//
// with a_k ~ Bernoulli(p) and phi_k ~ Uniform[0, 2 pi]. The windowed variant
// multiplies each active octave by a sum of randomly centred Gaussian
// windows. Every signal is scaled by 1 / max(1, ||x||_inf). All draws come
// from a generator keyed by (seed, index), so signals can be produced in
// any order.

#ifndef WAVELEARN_DATAGEN_HPP_
#define WAVELEARN_DATAGEN_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavelearn/filterbank.hpp"
#include "wavelearn/transform.hpp"

namespace wavelearn {

enum class BaseWave { kSine, kSawtooth, kSquare };

std::string_view BaseWaveName(BaseWave base);
// Throws InvalidArgument for names other than sine/sawtooth/square.
BaseWave ParseBaseWave(std::string_view name);

// 2 pi-periodic base wave evaluated at phase t (radians).
double EvaluateBaseWave(BaseWave base, double t);

struct SynthConfig {
  BaseWave base = BaseWave::kSine;
  int harmonics = 5;                  // K
  double probability = 0.5;           // p
  std::size_t length = 1024;          // N
  std::size_t count = 32000;          // M
  int cycles = 4;
  bool windowed = false;
  int window_count_min = 1;
  int window_count_max = 3;
  double window_std_fraction = 0.1;   // std as a fraction of N
  std::uint64_t seed = 0;
};

void Validate(const SynthConfig& config);

// Random draws behind one signal. window_centers[k] is empty for inactive
// octaves and for non-windowed configs.
struct HarmonicDraw {
  std::vector<int> active;       // a_k in {0, 1}
  std::vector<double> phases;    // phi_k
  std::vector<std::vector<double>> window_centers;
};

HarmonicDraw DrawHarmonics(const SynthConfig& config, std::uint64_t index);

// Deterministic rendering of a draw; uses windows iff config.windowed.
Signal RenderHarmonic(const SynthConfig& config, const HarmonicDraw& draw);

// Sum of unit-peak Gaussians exp(-(n - c)^2 / (2 std^2)) over the centres.
std::vector<double> GaussianEnvelope(std::size_t length,
                                     std::span<const double> centers,
                                     double std_dev);

Signal SynthHarmonic(const SynthConfig& config, std::uint64_t index);
// Requires config.windowed.
Signal SynthWindowed(const SynthConfig& config, std::uint64_t index);

// config.count signals, windowed or not per config.
std::vector<Signal> MakeDataset(const SynthConfig& config);

// Consecutive length-n windows of a 16-bit PCM WAV file (mono or stereo,
// stereo averaged), scaled by 1/32768. A trailing partial window is dropped.
// Throws IoError with a format diagnostic on unreadable or unsupported files.
std::vector<Signal> LoadWavSegments(const std::string& path, std::size_t n,
                                    std::size_t hop);

// Segmentation of an already decoded sample stream.
std::vector<Signal> Segment(std::span<const double> samples, std::size_t n,
                            std::size_t hop);

struct RandomWaveletResult {
  ScalingFilter filter{std::vector<double>{1.0, 1.0}};
  double residual = 0.0;
  int steps = 0;
  bool converged = false;
};

// Minimizes the wavelet-constraint loss alone with Adam (default
// hyperparameters) from InitFilter(k, seed), stopping once the loss is below
// `target` or after `max_steps`.
RandomWaveletResult RandomWaveletSearch(int k, std::uint64_t seed,
                                        int max_steps = 10000,
                                        double target = 1e-8);

// As above; throws ConvergenceError carrying the achieved residual when the
// target is not reached.
ScalingFilter RandomWavelet(int k, std::uint64_t seed);

}  // namespace wavelearn

#endif  // WAVELEARN_DATAGEN_HPP_
