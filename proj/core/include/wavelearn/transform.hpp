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

// Periodic discrete wavelet transform as an unrolled two-channel filter bank.
//
// One analysis level maps a length-n sequence a to
//
//   a_next[p] = sum_m h[m] a[(m + 2p) mod n]
//   d_next[p] = sum_m g[m] a[(m + 2p) mod n],   p = 0..n/2-1
//
// i.e. a stride-2 circular correlation. Synthesis is the exact transpose:
// upsample by two and circularly convolve. For an orthonormal h the
// combined map is orthogonal at every even length, so synthesis inverts
// analysis exactly (up to rounding).

#ifndef WAVELEARN_TRANSFORM_HPP_
#define WAVELEARN_TRANSFORM_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wavelearn/filterbank.hpp"

namespace wavelearn {

bool IsPowerOfTwo(std::size_t n);

// Fixed-length real signal; length is a positive power of two.
class Signal {
 public:
  Signal() = default;
  // Throws InvalidArgument on non power-of-two length or non-finite samples.
  explicit Signal(std::vector<double> samples);

  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double operator[](std::size_t i) const { return samples_[i]; }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::vector<double> samples_;
};

// Per-level details d_1..d_J (details[0] = d_1, the finest) plus a_J.
class WaveletDecomposition {
 public:
  // Throws InvalidArgument unless details[j].size() == 2 * details[j+1].size()
  // and details.back().size() == approx.size().
  WaveletDecomposition(std::vector<std::vector<double>> details,
                       std::vector<double> approx);

  int levels() const { return static_cast<int>(details_.size()); }
  // Length of the signal this decomposes.
  std::size_t signal_size() const;

  const std::vector<double>& detail(int level) const {
    return details_[static_cast<std::size_t>(level - 1)];
  }
  std::vector<double>& detail(int level) {
    return details_[static_cast<std::size_t>(level - 1)];
  }
  const std::vector<std::vector<double>>& details() const { return details_; }
  const std::vector<double>& approx() const { return approx_; }
  std::vector<double>& approx() { return approx_; }

  friend bool operator==(const WaveletDecomposition&,
                         const WaveletDecomposition&) = default;

 private:
  std::vector<std::vector<double>> details_;
  std::vector<double> approx_;
};

// Sizes of a decomposition of an n-sample signal into `levels` levels.
// Throws InvalidArgument if n is not a power of two or levels is out of
// range [1, log2(n)].
void CheckDepth(std::size_t n, int levels);

// Messages for levels whose input is shorter than the filter, where circular
// wrap-around dominates. Empty when the depth is comfortable.
std::vector<std::string> DepthWarnings(std::size_t n, int levels,
                                       std::size_t filter_size);

// Stride-2 circular correlation: out[p] = sum_m f[m] a[(m + 2p) mod n].
// a.size() must be even; out.size() == a.size() / 2.
void DownsampleCorrelate(std::span<const double> f, std::span<const double> a,
                         std::span<double> out);

// Transpose of DownsampleCorrelate, accumulated into out:
// out[(m + 2p) mod n] += f[m] c[p] with n = out.size() = 2 c.size().
void UpsampleConvolveAdd(std::span<const double> f, std::span<const double> c,
                         std::span<double> out);

// Filter-tap gradient shared by both primitives:
// grad[m] += sum_p y[p] x[(m + 2p) mod n], n = x.size() = 2 y.size().
void AccumulateTapGradient(std::span<const double> y, std::span<const double> x,
                           std::span<double> grad);

struct StepOutput {
  std::vector<double> approx;
  std::vector<double> detail;
};

// One analysis level. Throws InvalidArgument on odd or empty input.
StepOutput DwtStep(std::span<const double> a, const FilterPair& pair);

// One synthesis level. Throws InvalidArgument on length mismatch.
std::vector<double> IdwtStep(std::span<const double> approx,
                             std::span<const double> detail,
                             const FilterPair& pair);

// `levels` analysis steps, feeding each approximation forward. Warns (see
// SetWarningSink) when a level input is shorter than the filter.
WaveletDecomposition Dwt(const Signal& x, const FilterPair& pair, int levels);

Signal Idwt(const WaveletDecomposition& decomposition, const FilterPair& pair);

struct LevelSpan {
  int level = 0;            // 1..J; for the approximation, J
  bool is_approx = false;
  std::size_t offset = 0;
  std::size_t length = 0;

  friend bool operator==(const LevelSpan&, const LevelSpan&) = default;
};

// Concatenation d_1, d_2, ..., d_J, a_J.
struct FlatCoefficients {
  std::vector<double> values;
  std::vector<LevelSpan> layout;
};

std::vector<LevelSpan> FlatLayout(std::size_t n, int levels);

FlatCoefficients Flatten(const WaveletDecomposition& decomposition);
WaveletDecomposition Unflatten(const FlatCoefficients& flat, int levels);
WaveletDecomposition Unflatten(std::span<const double> values, int levels);

}  // namespace wavelearn

#endif  // WAVELEARN_TRANSFORM_HPP_
