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

#include "mgspec/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace mgspec {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;

const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(hi > lo)) {
      lo -= 0.5;
      hi += 0.5;
    } else {
      const double margin = 0.05 * (hi - lo);
      lo -= margin;
      hi += margin;
    }
  }
};

struct Frame {
  Range x, y;

  double px(double v) const { return kMarginLeft + (v - x.lo) / (x.hi - x.lo) * (kWidth - kMarginLeft - kMarginRight); }
  double py(double v) const { return kHeight - kMarginBottom - (v - y.lo) / (y.hi - y.lo) * (kHeight - kMarginTop - kMarginBottom); }
};

void open_svg(std::string& svg, std::string_view title) {
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + ' ' + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
         std::string(title) + "</text>\n";
}

void draw_axes(std::string& svg, const Frame& frame, std::string_view x_label, std::string_view y_label) {
  const double x0 = kMarginLeft, x1 = kWidth - kMarginRight;
  const double y0 = kHeight - kMarginBottom, y1 = kMarginTop;
  svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y0) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y1) +
         "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 5; ++t) {
    const double fx = frame.x.lo + t * (frame.x.hi - frame.x.lo) / 5.0;
    const double px = frame.px(fx);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(px) + "\" y2=\"" + num(y0 + 5) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(y0 + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + num(fx) + "</text>\n";
    const double fy = frame.y.lo + t * (frame.y.hi - frame.y.lo) / 5.0;
    const double py = frame.py(fy);
    svg += "<line x1=\"" + num(x0 - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(py) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(x0 - 8) + "\" y=\"" + num(py + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(fy) + "</text>\n";
  }
  svg += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + std::string(x_label) +
         "</text>\n";
  svg += "<text x=\"16\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 16 " +
         num((y0 + y1) / 2) + ")\">" + std::string(y_label) + "</text>\n";
}

void draw_legend(std::string& svg, const std::vector<std::string>& labels) {
  double y = kMarginTop + 8.0;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    const char* color = kPalette[s % 6];
    svg += "<line x1=\"" + num(kWidth - 180) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kWidth - 160) +
           "\" y2=\"" + num(y) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(kWidth - 154) + "\" y=\"" + num(y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + labels[s] + "</text>\n";
    y += 16.0;
  }
}

}  // namespace

std::string line_plot_svg(const std::vector<PlotSeries>& series, std::string_view title,
                          std::string_view x_label, std::string_view y_label) {
  if (series.empty()) {
    throw std::invalid_argument("line_plot_svg: no series");
  }
  Frame frame;
  for (const PlotSeries& s : series) {
    if (s.x.size() != s.y.size() || (!s.yerr.empty() && s.yerr.size() != s.y.size())) {
      throw std::invalid_argument("line_plot_svg: series length mismatch");
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      frame.x.include(s.x[i]);
      frame.y.include(s.y[i]);
      if (!s.yerr.empty()) {
        frame.y.include(s.y[i] + s.yerr[i]);
        frame.y.include(s.y[i] - s.yerr[i]);
      }
    }
  }
  frame.x.pad();
  frame.y.pad();

  std::string svg;
  open_svg(svg, title);
  draw_axes(svg, frame, x_label, y_label);

  std::vector<std::string> labels;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % 6];
    const PlotSeries& ps = series[s];
    labels.push_back(ps.label);
    std::string path;
    for (std::size_t i = 0; i < ps.x.size(); ++i) {
      path += (i == 0 ? "M" : " L");
      path += num(frame.px(ps.x[i]));
      path += ' ';
      path += num(frame.py(ps.y[i]));
    }
    svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    for (std::size_t i = 0; i < ps.x.size(); ++i) {
      const double px = frame.px(ps.x[i]);
      svg += "<circle cx=\"" + num(px) + "\" cy=\"" + num(frame.py(ps.y[i])) + "\" r=\"3\" fill=\"" +
             color + "\"/>\n";
      if (!ps.yerr.empty() && ps.yerr[i] > 0.0) {
        const double top = frame.py(ps.y[i] + ps.yerr[i]);
        const double bottom = frame.py(ps.y[i] - ps.yerr[i]);
        svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(top) + "\" x2=\"" + num(px) + "\" y2=\"" +
               num(bottom) + "\" stroke=\"" + color + "\"/>\n";
        svg += "<line x1=\"" + num(px - 3) + "\" y1=\"" + num(top) + "\" x2=\"" + num(px + 3) +
               "\" y2=\"" + num(top) + "\" stroke=\"" + color + "\"/>\n";
        svg += "<line x1=\"" + num(px - 3) + "\" y1=\"" + num(bottom) + "\" x2=\"" + num(px + 3) +
               "\" y2=\"" + num(bottom) + "\" stroke=\"" + color + "\"/>\n";
      }
    }
  }
  draw_legend(svg, labels);
  svg += "</svg>\n";
  return svg;
}

std::string histogram_svg(const Histogram& hist,
                          const std::vector<std::pair<std::string, ReferenceKind>>& overlays,
                          std::string_view title) {
  Frame frame;
  frame.x.include(hist.lo);
  frame.x.include(hist.hi);
  frame.y.include(0.0);
  const double width = hist.bin_width();
  for (int b = 0; b < hist.bins; ++b) {
    frame.y.include(hist.mass[b] / width);
  }
  for (const auto& overlay : overlays) {
    for (int i = 0; i <= 200; ++i) {
      frame.y.include(reference_pdf(overlay.second, hist.lo + i * (hist.hi - hist.lo) / 200.0));
    }
  }
  frame.x.pad();
  frame.y.pad();
  frame.y.lo = std::min(frame.y.lo, 0.0);

  std::string svg;
  open_svg(svg, title);
  draw_axes(svg, frame, "r", "P(r)");

  for (int b = 0; b < hist.bins; ++b) {
    const double left = hist.lo + b * width;
    const double density = hist.mass[b] / width;
    const double x = frame.px(left);
    const double y = frame.py(density);
    const double w = frame.px(left + width) - x;
    const double h = frame.py(0.0) - y;
    svg += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" fill=\"#1f77b4\" fill-opacity=\"0.55\" stroke=\"#1f77b4\"/>\n";
  }

  std::vector<std::string> labels = {"empirical"};
  for (std::size_t s = 0; s < overlays.size(); ++s) {
    const char* color = kPalette[(s + 1) % 6];
    labels.push_back(overlays[s].first);
    std::string path;
    for (int i = 0; i <= 200; ++i) {
      const double r = hist.lo + i * (hist.hi - hist.lo) / 200.0;
      path += (i == 0 ? "M" : " L");
      path += num(frame.px(r));
      path += ' ';
      path += num(frame.py(reference_pdf(overlays[s].second, r)));
    }
    svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\"/>\n";
  }
  draw_legend(svg, labels);
  svg += "</svg>\n";
  return svg;
}

}  // namespace mgspec
