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

#ifndef WAVELEARN_PLOT_HPP_
#define WAVELEARN_PLOT_HPP_

#include <span>
#include <string>
#include <vector>

namespace wavelearn {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Standalone SVG line chart on a fixed 800x480 viewport: one polyline per
// series, ticks on both axes and a legend. Output is a pure function of the
// input. Throws InvalidArgument when there is nothing to draw.
std::string RenderSvg(std::span<const PlotSeries> series,
                      const std::string& title = "");

// Roughly `target` round-number tick positions inside [lo, hi].
std::vector<double> NiceTicks(double lo, double hi, int target = 5);

}  // namespace wavelearn

#endif  // WAVELEARN_PLOT_HPP_
