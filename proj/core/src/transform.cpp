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

#include "wavelearn/transform.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "wavelearn/errors.hpp"
#include "wavelearn/log.hpp"

namespace wavelearn {

bool IsPowerOfTwo(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Signal::Signal(std::vector<double> samples) : samples_(std::move(samples)) {
  if (!IsPowerOfTwo(samples_.size())) {
    throw InvalidArgument("signal length must be a positive power of two, got " +
                          std::to_string(samples_.size()));
  }
  for (double s : samples_) {
    if (!std::isfinite(s)) throw InvalidArgument("signal has a non-finite sample");
  }
}

WaveletDecomposition::WaveletDecomposition(
    std::vector<std::vector<double>> details, std::vector<double> approx)
    : details_(std::move(details)), approx_(std::move(approx)) {
  if (details_.empty()) {
    throw InvalidArgument("decomposition needs at least one level");
  }
  for (std::size_t j = 0; j + 1 < details_.size(); ++j) {
    if (details_[j].size() != 2 * details_[j + 1].size()) {
      throw InvalidArgument("detail level " + std::to_string(j + 1) +
                            " has length " + std::to_string(details_[j].size()) +
                            ", expected twice level " + std::to_string(j + 2));
    }
  }
  if (approx_.empty() || approx_.size() != details_.back().size()) {
    throw InvalidArgument("approximation length " +
                          std::to_string(approx_.size()) +
                          " does not match coarsest detail length " +
                          std::to_string(details_.back().size()));
  }
}

std::size_t WaveletDecomposition::signal_size() const {
  return 2 * details_.front().size();
}

void CheckDepth(std::size_t n, int levels) {
  if (!IsPowerOfTwo(n)) {
    throw InvalidArgument("length " + std::to_string(n) +
                          " is not a power of two");
  }
  if (levels < 1 || (n >> levels) == 0 ||
      static_cast<std::size_t>(levels) >= 8 * sizeof(std::size_t)) {
    throw InvalidArgument("depth " + std::to_string(levels) +
                          " is out of range for length " + std::to_string(n));
  }
}

std::vector<std::string> DepthWarnings(std::size_t n, int levels,
                                       std::size_t filter_size) {
  std::vector<std::string> out;
  std::size_t len = n;
  for (int level = 1; level <= levels; ++level, len /= 2) {
    if (len < filter_size) {
      out.push_back("level " + std::to_string(level) + " input has " +
                    std::to_string(len) + " samples, fewer than the " +
                    std::to_string(filter_size) +
                    " filter taps; periodic wrap-around dominates");
    }
  }
  return out;
}

void DownsampleCorrelate(std::span<const double> f, std::span<const double> a,
                         std::span<double> out) {
  const std::size_t n = a.size();
  const std::size_t half = n / 2;
  for (std::size_t p = 0; p < half; ++p) {
    std::size_t idx = 2 * p;
    double acc = 0.0;
    for (double tap : f) {
      acc += tap * a[idx];
      if (++idx == n) idx = 0;
    }
    out[p] = acc;
  }
}

void UpsampleConvolveAdd(std::span<const double> f, std::span<const double> c,
                         std::span<double> out) {
  const std::size_t n = out.size();
  for (std::size_t p = 0; p < c.size(); ++p) {
    const double coeff = c[p];
    std::size_t idx = 2 * p;
    for (double tap : f) {
      out[idx] += tap * coeff;
      if (++idx == n) idx = 0;
    }
  }
}

void AccumulateTapGradient(std::span<const double> y, std::span<const double> x,
                           std::span<double> grad) {
  const std::size_t n = x.size();
  const std::size_t k = grad.size();
  for (std::size_t p = 0; p < y.size(); ++p) {
    const double upstream = y[p];
    std::size_t idx = 2 * p;
    for (std::size_t m = 0; m < k; ++m) {
      grad[m] += upstream * x[idx];
      if (++idx == n) idx = 0;
    }
  }
}

StepOutput DwtStep(std::span<const double> a, const FilterPair& pair) {
  if (a.empty() || a.size() % 2 != 0) {
    throw InvalidArgument("analysis step needs an even, nonempty input; got " +
                          std::to_string(a.size()));
  }
  StepOutput out{std::vector<double>(a.size() / 2),
                 std::vector<double>(a.size() / 2)};
  DownsampleCorrelate(pair.h(), a, out.approx);
  DownsampleCorrelate(pair.g(), a, out.detail);
  return out;
}

std::vector<double> IdwtStep(std::span<const double> approx,
                             std::span<const double> detail,
                             const FilterPair& pair) {
  if (approx.empty() || approx.size() != detail.size()) {
    throw InvalidArgument("synthesis step needs equal, nonempty inputs; got " +
                          std::to_string(approx.size()) + " and " +
                          std::to_string(detail.size()));
  }
  std::vector<double> out(2 * approx.size(), 0.0);
  UpsampleConvolveAdd(pair.h(), approx, out);
  UpsampleConvolveAdd(pair.g(), detail, out);
  return out;
}

WaveletDecomposition Dwt(const Signal& x, const FilterPair& pair, int levels) {
  CheckDepth(x.size(), levels);
  for (const auto& w : DepthWarnings(x.size(), levels, pair.size())) Warn(w);
  std::vector<std::vector<double>> details;
  details.reserve(static_cast<std::size_t>(levels));
  std::vector<double> a(x.samples().begin(), x.samples().end());
  for (int level = 0; level < levels; ++level) {
    StepOutput step = DwtStep(a, pair);
    details.push_back(std::move(step.detail));
    a = std::move(step.approx);
  }
  return WaveletDecomposition(std::move(details), std::move(a));
}

Signal Idwt(const WaveletDecomposition& decomposition, const FilterPair& pair) {
  std::vector<double> a = decomposition.approx();
  for (int level = decomposition.levels(); level >= 1; --level) {
    a = IdwtStep(a, decomposition.detail(level), pair);
  }
  return Signal(std::move(a));
}

std::vector<LevelSpan> FlatLayout(std::size_t n, int levels) {
  CheckDepth(n, levels);
  std::vector<LevelSpan> layout;
  std::size_t offset = 0;
  std::size_t len = n / 2;
  for (int level = 1; level <= levels; ++level, len /= 2) {
    layout.push_back({level, false, offset, len});
    offset += len;
  }
  layout.push_back({levels, true, offset, n - offset});
  return layout;
}

FlatCoefficients Flatten(const WaveletDecomposition& decomposition) {
  FlatCoefficients flat;
  flat.layout = FlatLayout(decomposition.signal_size(), decomposition.levels());
  flat.values.reserve(decomposition.signal_size());
  for (const auto& d : decomposition.details()) {
    flat.values.insert(flat.values.end(), d.begin(), d.end());
  }
  const auto& a = decomposition.approx();
  flat.values.insert(flat.values.end(), a.begin(), a.end());
  return flat;
}

WaveletDecomposition Unflatten(std::span<const double> values, int levels) {
  const auto layout = FlatLayout(values.size(), levels);
  std::vector<std::vector<double>> details;
  for (const auto& span : layout) {
    auto part = values.subspan(span.offset, span.length);
    if (span.is_approx) {
      return WaveletDecomposition(std::move(details),
                                  std::vector<double>(part.begin(), part.end()));
    }
    details.emplace_back(part.begin(), part.end());
  }
  throw InvalidArgument("layout has no approximation block");
}

WaveletDecomposition Unflatten(const FlatCoefficients& flat, int levels) {
  if (flat.layout != FlatLayout(flat.values.size(), levels)) {
    throw InvalidArgument("flat coefficient layout does not match " +
                          std::to_string(levels) + " levels over " +
                          std::to_string(flat.values.size()) + " values");
  }
  return Unflatten(std::span<const double>(flat.values), levels);
}

}  // namespace wavelearn
