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

// Tools for inspecting filters: cascade rendering of phi/psi, the
// circular-shift cosine distance between filters, nearest classical
// wavelets, and signal generation from sparse coefficients.

#ifndef WAVELEARN_ANALYSIS_HPP_
#define WAVELEARN_ANALYSIS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "wavelearn/classical.hpp"
#include "wavelearn/filterbank.hpp"
#include "wavelearn/transform.hpp"

namespace wavelearn {

// Samples of a function on the grid t = support_start + i * grid_step.
struct SampledFunction {
  std::vector<double> values;
  double grid_step = 1.0;
  int support_start = 0;

  double t(std::size_t i) const {
    return support_start + static_cast<double>(i) * grid_step;
  }
  // Riemann sum: sum(values) * grid_step.
  double Integral() const;
};

struct CascadeResult {
  SampledFunction phi;
  SampledFunction psi;
  // sup |phi_i - phi_{i-1}| over the coarser grid.
  double convergence_delta = 0.0;
};

// Iterates phi <- sqrt(2) * (upsample2(phi) conv h) from a unit impulse with
// full (non-circular) convolution. psi starts with one step through g and
// then continues with h, so that psi(t) = sqrt(2) sum_n g[n] phi(2t - n) at
// the same resolution. Both outputs span [0, k-1] with (k-1) 2^i + 1
// samples. Throws InvalidArgument for iterations < 1 or > 24.
CascadeResult Cascade(std::span<const double> h, int iterations = 8);
inline CascadeResult Cascade(const ScalingFilter& h, int iterations = 8) {
  return Cascade(h.coeffs(), iterations);
}

// min over circular shifts i of 1 - <a, shift(b, i)> / (||a|| ||b||), with
// the shorter filter zero-padded. Throws InvalidArgument on a zero filter.
double FilterDistance(std::span<const double> a, std::span<const double> b);

// shift(h, i)[n] = h[(n - i) mod k].
std::vector<double> CircularShift(std::span<const double> h, std::ptrdiff_t i);

struct WaveletMatch {
  ClassicalWaveletId id;
  double distance = 0.0;
  // 1-based competition rank. Distances within 1e-12 of each other share a
  // rank (the database holds coincident entries such as sym2 and db2).
  int rank = 0;
};

// Every database filter, ascending by distance; ties in family order
// (Haar, Daubechies, Symlet, Coiflet) and then ascending order.
std::vector<WaveletMatch> ClosestWavelet(std::span<const double> h);

struct SampleOptions {
  std::size_t length = 1024;
  int levels = 6;
  double density = 0.05;
  int zero_top_scales = 3;
  std::uint64_t seed = 0;
};

// Coefficient vector (flat d_1..d_J, a_J order) where each entry is nonzero
// with probability `density` and drawn Uniform[-1, 1] when it is; then d_1
// through d_{zero_top_scales} are cleared.
WaveletDecomposition SampleCoefficients(const SampleOptions& options);

// Idwt of SampleCoefficients(options). Throws InvalidArgument on density
// outside (0, 1] or zero_top_scales outside [0, levels].
Signal SampleSignal(const FilterPair& pair, const SampleOptions& options);

}  // namespace wavelearn

#endif  // WAVELEARN_ANALYSIS_HPP_
