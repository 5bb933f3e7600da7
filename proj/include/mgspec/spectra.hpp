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

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mgspec {

// Eigenvalues of a reduced density matrix, sorted descending. Values are
// nonnegative and sum to 1 (within numerical tolerance).
struct EntanglementSpectrum {
  Eigen::VectorXd values;

  Eigen::Index size() const { return values.size(); }
};

// Clamps small negative values at 0 and sorts descending.
EntanglementSpectrum make_spectrum(Eigen::VectorXd values);

// Consecutive gaps of a descending spectrum and the ratio statistics built
// from them. ratios holds r_k = delta_{k-1}/delta_k, modified_ratios holds
// r~_k = min(delta_k, delta_{k+1}) / max(delta_k, delta_{k+1}). Entries
// whose defining gaps vanish (|delta| <= 1e-15) are skipped and counted,
// never perturbed.
struct GapRatioSeries {
  Eigen::VectorXd gaps;
  std::vector<double> ratios;
  std::vector<double> modified_ratios;
  int excluded_ratios = 0;
  int excluded_modified = 0;
  bool empty = false;  // set when fewer than 3 levels were retained
};

// Gap tie tolerance: gaps at or below this are treated as exact ties.
inline constexpr double kZeroGapTolerance = 1e-15;

GapRatioSeries gap_ratios_from_gaps(const Eigen::VectorXd& gaps);

// floor <= 0 keeps the full spectrum; otherwise only values > floor are
// retained before gaps are formed.
GapRatioSeries gap_ratios(const EntanglementSpectrum& spectrum, double floor = 0.0);

// Ratio statistics of a raw level sequence (e.g. matrix eigenvalues);
// levels are sorted internally.
GapRatioSeries gap_ratios_from_levels(Eigen::VectorXd levels);

double mean_r_tilde(const GapRatioSeries& series);
double mean_r_tilde(std::span<const GapRatioSeries> series);

// Reference gap-ratio densities. Poisson: P(r) = 1/(1+r)^2. Wigner-Dyson
// (GUE, beta = 2): P(r) = (r + r^2)^2 / (Z (1 + r + r^2)^4) with
// Z = 4*pi/(81*sqrt(3)).
enum class ReferenceKind { Poisson, WignerDysonGue };

inline constexpr double kWignerDysonBeta = 2.0;
double wigner_dyson_norm();  // 4*pi/(81*sqrt(3))

double reference_pdf(ReferenceKind kind, double r);

// Ensemble means of r~ used as calibration targets.
inline constexpr double kPoissonRTilde = 0.38629436111989062;  // 2 ln 2 - 1
inline constexpr double kWignerDysonRTilde = 0.603;

// Binned distribution over [lo, hi] with `bins` uniform bins plus one
// overflow bin for samples > hi. mass has size bins + 1 and sums to 1.
struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  int bins = 0;
  Eigen::VectorXd mass;

  double bin_width() const { return (hi - lo) / bins; }
};

Histogram histogram(std::span<const double> samples, int bins, double lo, double hi);

// Reference density integrated per bin by midpoint quadrature; the overflow
// bin takes the remaining mass so the histogram is exactly normalized.
Histogram reference_histogram(ReferenceKind kind, int bins, double lo, double hi, int subsamples = 16);

// Sum over bins with p > 0 of p*ln(p/q), q floored at 1e-12. Both inputs
// must share binning and be normalized within 1e-6.
double kl_divergence(const Histogram& p, const Histogram& q);
double kl_divergence(const Histogram& p, ReferenceKind reference);

// Entropies of a spectrum, natural logarithm throughout.
double von_neumann_entropy(const EntanglementSpectrum& spectrum);
double renyi_entropy(const EntanglementSpectrum& spectrum, double alpha);
double trace_power(const EntanglementSpectrum& spectrum, double alpha);

// Mean entanglement entropy of Haar-random pure states for an m x n
// bipartition (m <= n): sum_{k=n+1}^{mn} 1/k - (m-1)/(2n).
double page_entropy(std::int64_t m, std::int64_t n);

// Least-squares fit of points (x, y) to y = r0 * exp(-gamma * x), done as a
// line fit in log space. residual is the sum of squared log-space residuals.
struct FitResult {
  double r0 = 0.0;
  double gamma = 0.0;
  double residual = 0.0;
};

FitResult fit_exponential(std::span<const std::pair<double, double>> points);

// Ordinary least-squares line y = intercept + slope * x.
struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
};

LineFit fit_line(std::span<const std::pair<double, double>> points);

}  // namespace mgspec
