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

// Filter representations for a two-channel orthogonal filter bank.
//
// The scaling (lowpass) filter h is the only free parameter. The wavelet
// (highpass) filter g is always derived from h by the alternating flip
//
//   g[n] = (-1)^n h[k-1-n],  n = 0..k-1
//
// so g occupies the same index range as h.

#ifndef WAVELEARN_FILTERBANK_HPP_
#define WAVELEARN_FILTERBANK_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace wavelearn {

// Scaling filter taps. Length is even and at least 2; all taps finite.
class ScalingFilter {
 public:
  // Throws InvalidArgument when the invariants do not hold.
  explicit ScalingFilter(std::vector<double> coeffs);

  std::span<const double> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const ScalingFilter&, const ScalingFilter&) = default;

 private:
  std::vector<double> coeffs_;
};

// Alternating-flip highpass image of h.
std::vector<double> DeriveQmf(std::span<const double> h);

// A scaling filter together with its derived wavelet filter.
class FilterPair {
 public:
  explicit FilterPair(ScalingFilter h);

  const ScalingFilter& scaling() const { return h_; }
  std::span<const double> h() const { return h_.coeffs(); }
  std::span<const double> g() const { return g_; }
  std::size_t size() const { return g_.size(); }

 private:
  ScalingFilter h_;
  std::vector<double> g_;
};

// Residuals of the soft wavelet constraints
//   (||h||_2 - 1)^2 + (mean(h) - sqrt(2)/k)^2 + mean(g)^2.
struct ConstraintReport {
  double l2_residual = 0.0;
  double mean_h_residual = 0.0;
  double mean_g_residual = 0.0;
  double total = 0.0;
};

ConstraintReport WaveletLoss(std::span<const double> h);
inline ConstraintReport WaveletLoss(const ScalingFilter& h) {
  return WaveletLoss(h.coeffs());
}

// Adds d(total)/dh into `grad`, scaled by `weight`. At h = 0 the norm term
// contributes nothing.
void AccumulateWaveletLossGradient(std::span<const double> h, double weight,
                                   std::span<double> grad);

struct OrthonormalityReport {
  bool ok = false;
  double sum_error = 0.0;       // |sum(h) - sqrt(2)|
  double norm_error = 0.0;      // | ||h||_2 - 1 |
  double max_shift_inner = 0.0; // max over m != 0 of |sum_n h[n] h[n-2m]|
};

// Checks sum, norm and double-shift orthogonality of h against `tol`.
OrthonormalityReport ValidateOrthonormal(std::span<const double> h,
                                         double tol);

}  // namespace wavelearn

#endif  // WAVELEARN_FILTERBANK_HPP_
