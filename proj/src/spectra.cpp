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

#include "mgspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mgspec {

namespace {

constexpr double kKlFloor = 1e-12;

}  // namespace

EntanglementSpectrum make_spectrum(Eigen::VectorXd values) {
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) values[i] = 0.0;
  }
  std::sort(values.data(), values.data() + values.size(), std::greater<double>());
  return EntanglementSpectrum{std::move(values)};
}

GapRatioSeries gap_ratios_from_gaps(const Eigen::VectorXd& gaps) {
  GapRatioSeries series;
  series.gaps = gaps;
  const Eigen::Index g = gaps.size();
  if (g < 2) {
    series.empty = g < 1;
    return series;
  }
  series.ratios.reserve(static_cast<std::size_t>(g - 1));
  series.modified_ratios.reserve(static_cast<std::size_t>(g - 1));
  for (Eigen::Index k = 1; k < g; ++k) {
    const double prev = gaps[k - 1];
    const double cur = gaps[k];
    if (prev <= kZeroGapTolerance || cur <= kZeroGapTolerance) {
      ++series.excluded_ratios;
      ++series.excluded_modified;
      continue;
    }
    series.ratios.push_back(prev / cur);
    series.modified_ratios.push_back(std::min(prev, cur) / std::max(prev, cur));
  }
  return series;
}

GapRatioSeries gap_ratios(const EntanglementSpectrum& spectrum, double floor) {
  std::vector<double> retained;
  retained.reserve(static_cast<std::size_t>(spectrum.values.size()));
  for (Eigen::Index i = 0; i < spectrum.values.size(); ++i) {
    const double v = spectrum.values[i];
    if (floor <= 0.0 || v > floor) retained.push_back(v);
  }
  if (retained.size() < 3) {
    GapRatioSeries series;
    series.empty = true;
    return series;
  }
  Eigen::VectorXd gaps(static_cast<Eigen::Index>(retained.size()) - 1);
  for (std::size_t k = 0; k + 1 < retained.size(); ++k) {
    gaps[static_cast<Eigen::Index>(k)] = retained[k] - retained[k + 1];
  }
  return gap_ratios_from_gaps(gaps);
}

GapRatioSeries gap_ratios_from_levels(Eigen::VectorXd levels) {
  std::sort(levels.data(), levels.data() + levels.size(), std::greater<double>());
  if (levels.size() < 3) {
    GapRatioSeries series;
    series.empty = true;
    return series;
  }
  Eigen::VectorXd gaps(levels.size() - 1);
  for (Eigen::Index k = 0; k + 1 < levels.size(); ++k) {
    gaps[k] = levels[k] - levels[k + 1];
  }
  return gap_ratios_from_gaps(gaps);
}

double mean_r_tilde(const GapRatioSeries& series) {
  if (series.modified_ratios.empty()) {
    throw std::invalid_argument("mean_r_tilde: no defined modified ratios");
  }
  double sum = 0.0;
  for (double v : series.modified_ratios) sum += v;
  return sum / static_cast<double>(series.modified_ratios.size());
}

double mean_r_tilde(std::span<const GapRatioSeries> series) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& s : series) {
    for (double v : s.modified_ratios) {
      sum += v;
      ++count;
    }
  }
  if (count == 0) {
    throw std::invalid_argument("mean_r_tilde: no defined modified ratios");
  }
  return sum / static_cast<double>(count);
}

double wigner_dyson_norm() { return 4.0 * std::numbers::pi / (81.0 * std::sqrt(3.0)); }

double reference_pdf(ReferenceKind kind, double r) {
  if (r < 0.0) {
    throw std::invalid_argument("reference_pdf: r must be nonnegative");
  }
  switch (kind) {
    case ReferenceKind::Poisson: {
      const double t = 1.0 + r;
      return 1.0 / (t * t);
    }
    case ReferenceKind::WignerDysonGue: {
      const double num = std::pow(r + r * r, kWignerDysonBeta);
      const double den = wigner_dyson_norm() * std::pow(1.0 + r + r * r, 1.0 + 1.5 * kWignerDysonBeta);
      return num / den;
    }
  }
  throw std::logic_error("reference_pdf: unknown kind");
}

Histogram histogram(std::span<const double> samples, int bins, double lo, double hi) {
  if (bins < 1 || !(hi > lo)) {
    throw std::invalid_argument("histogram: need bins >= 1 and hi > lo");
  }
  if (samples.empty()) {
    throw std::invalid_argument("histogram: no samples");
  }
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.bins = bins;
  h.mass = Eigen::VectorXd::Zero(bins + 1);
  const double width = h.bin_width();
  for (double s : samples) {
    if (s < lo) {
      throw std::invalid_argument("histogram: sample below range");
    }
    if (s > hi) {
      h.mass[bins] += 1.0;
    } else {
      int b = static_cast<int>((s - lo) / width);
      if (b >= bins) b = bins - 1;  // s == hi
      h.mass[b] += 1.0;
    }
  }
  h.mass /= static_cast<double>(samples.size());
  return h;
}

Histogram reference_histogram(ReferenceKind kind, int bins, double lo, double hi, int subsamples) {
  if (bins < 1 || !(hi > lo)) {
    throw std::invalid_argument("reference_histogram: need bins >= 1 and hi > lo");
  }
  if (subsamples < 16) subsamples = 16;
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.bins = bins;
  h.mass = Eigen::VectorXd::Zero(bins + 1);
  const double width = h.bin_width();
  const double step = width / subsamples;
  double covered = 0.0;
  for (int b = 0; b < bins; ++b) {
    const double left = lo + b * width;
    double acc = 0.0;
    for (int s = 0; s < subsamples; ++s) {
      acc += reference_pdf(kind, left + (s + 0.5) * step);
    }
    h.mass[b] = acc * step;
    covered += h.mass[b];
  }
  // The tail carries whatever mass the finite bins did not, keeping the
  // histogram exactly normalized.
  h.mass[bins] = std::max(0.0, 1.0 - covered);
  return h;
}

double kl_divergence(const Histogram& p, const Histogram& q) {
  if (p.bins != q.bins || p.lo != q.lo || p.hi != q.hi) {
    throw std::invalid_argument("kl_divergence: histograms use different bins");
  }
  if (std::abs(p.mass.sum() - 1.0) > 1e-6 || std::abs(q.mass.sum() - 1.0) > 1e-6) {
    throw std::invalid_argument("kl_divergence: histograms must be normalized");
  }
  double kl = 0.0;
  for (Eigen::Index i = 0; i < p.mass.size(); ++i) {
    const double pi = p.mass[i];
    if (pi <= 0.0) continue;
    const double qi = std::max(q.mass[i], kKlFloor);
    kl += pi * std::log(pi / qi);
  }
  return kl;
}

double kl_divergence(const Histogram& p, ReferenceKind reference) {
  return kl_divergence(p, reference_histogram(reference, p.bins, p.lo, p.hi));
}

double von_neumann_entropy(const EntanglementSpectrum& spectrum) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < spectrum.values.size(); ++i) {
    const double p = spectrum.values[i];
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double renyi_entropy(const EntanglementSpectrum& spectrum, double alpha) {
  if (alpha <= 0.0) {
    throw std::invalid_argument("renyi_entropy: alpha must be positive");
  }
  if (alpha == 1.0) {
    throw std::invalid_argument("renyi_entropy: alpha = 1 is the von Neumann limit");
  }
  return std::log(trace_power(spectrum, alpha)) / (1.0 - alpha);
}

double trace_power(const EntanglementSpectrum& spectrum, double alpha) {
  if (alpha <= 0.0) {
    throw std::invalid_argument("trace_power: alpha must be positive");
  }
  double t = 0.0;
  for (Eigen::Index i = 0; i < spectrum.values.size(); ++i) {
    const double p = spectrum.values[i];
    if (p > 0.0) t += std::pow(p, alpha);
  }
  return t;
}

double page_entropy(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < m) {
    throw std::invalid_argument("page_entropy: need 1 <= m <= n");
  }
  double sum = 0.0;
  // Summed from the small end for accuracy.
  for (std::int64_t k = m * n; k > n; --k) {
    sum += 1.0 / static_cast<double>(k);
  }
  return sum - static_cast<double>(m - 1) / (2.0 * static_cast<double>(n));
}

FitResult fit_exponential(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw std::invalid_argument("fit_exponential: need at least 2 points");
  }
  std::vector<std::pair<double, double>> logged;
  logged.reserve(points.size());
  for (const auto& [x, y] : points) {
    if (!(y > 0.0)) {
      throw std::invalid_argument("fit_exponential: values must be positive");
    }
    logged.emplace_back(x, std::log(y));
  }
  const LineFit line = fit_line(logged);
  FitResult fit;
  fit.r0 = std::exp(line.intercept);
  fit.gamma = -line.slope;
  for (const auto& [x, ly] : logged) {
    const double resid = ly - (line.intercept + line.slope * x);
    fit.residual += resid * resid;
  }
  return fit;
}

LineFit fit_line(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw std::invalid_argument("fit_line: need at least 2 points");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(points.size());
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) {
    throw std::invalid_argument("fit_line: degenerate abscissae");
  }
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

}  // namespace mgspec
