// Copyright 2026 The mgspec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mgspec/spectra.hpp"

namespace mgspec {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> yerr;  // empty or same length as y
};

// Minimal SVG 1.1 line plot: axes, ticks, error bars, legend.
std::string line_plot_svg(const std::vector<PlotSeries>& series, std::string_view title,
                          std::string_view x_label, std::string_view y_label);

// Histogram as filled steps with optional analytic overlays.
std::string histogram_svg(const Histogram& hist,
                          const std::vector<std::pair<std::string, ReferenceKind>>& overlays,
                          std::string_view title);

}  // namespace mgspec
