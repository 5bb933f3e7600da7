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

#include <doctest.h>

#include <cmath>

#include "mgspec/calibration.hpp"
#include "mgspec/rng.hpp"
#include "mgspec/spectra.hpp"

using namespace mgspec;

namespace {

EntanglementSpectrum spectrum_of(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return make_spectrum(std::move(v));
}

}  // namespace

TEST_CASE("gap ratios of an equal-gap spectrum are all one") {
  const GapRatioSeries series = gap_ratios(spectrum_of({0.4, 0.3, 0.2, 0.1}));
  REQUIRE(series.modified_ratios.size() == 2);
  for (double v : series.modified_ratios) {
    CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(mean_r_tilde(series) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gap ratios match hand arithmetic") {
  const GapRatioSeries series = gap_ratios(spectrum_of({0.5, 0.3, 0.15, 0.05}));
  REQUIRE(series.gaps.size() == 3);
  CHECK(series.gaps[0] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(series.gaps[1] == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(series.gaps[2] == doctest::Approx(0.1).epsilon(1e-12));
  REQUIRE(series.ratios.size() == 2);
  CHECK(series.ratios[0] == doctest::Approx(0.2 / 0.15).epsilon(1e-12));
  CHECK(series.ratios[1] == doctest::Approx(1.5).epsilon(1e-12));
  REQUIRE(series.modified_ratios.size() == 2);
  CHECK(series.modified_ratios[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(series.modified_ratios[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(mean_r_tilde(series) == doctest::Approx(17.0 / 24.0).epsilon(1e-12));
}

TEST_CASE("degenerate spectra flag an empty series") {
  const GapRatioSeries one = gap_ratios(spectrum_of({1.0}));
  CHECK(one.empty);
  CHECK(one.modified_ratios.empty());
  CHECK_THROWS_AS(mean_r_tilde(one), std::invalid_argument);

  const GapRatioSeries two = gap_ratios(spectrum_of({0.6, 0.4}));
  CHECK(two.empty);
}

TEST_CASE("exact ties are excluded and counted, not perturbed") {
  const GapRatioSeries series = gap_ratios(spectrum_of({0.5, 0.5, 0.0, 0.0}));
  // Gaps: 0, 0.5, 0; both modified ratios involve a zero gap.
  CHECK(series.modified_ratios.empty());
  CHECK(series.excluded_modified == 2);
  CHECK(series.excluded_ratios == 2);
}

TEST_CASE("floor retains only values above it") {
  const GapRatioSeries floored = gap_ratios(spectrum_of({0.5, 0.3, 0.15, 0.05}), 0.1);
  REQUIRE(floored.gaps.size() == 2);  // retained: 0.5, 0.3, 0.15
  CHECK(floored.gaps[0] == doctest::Approx(0.2));

  const GapRatioSeries too_few = gap_ratios(spectrum_of({0.9, 0.05, 0.03, 0.02}), 0.04);
  CHECK(too_few.empty);
}

TEST_CASE("modified ratios fold the plain ratios into [0, 1]") {
  Rng rng(21);
  Eigen::VectorXd gaps(40);
  for (Eigen::Index i = 0; i < gaps.size(); ++i) gaps[i] = exponential(rng);
  const GapRatioSeries series = gap_ratios_from_gaps(gaps);
  REQUIRE(series.ratios.size() == series.modified_ratios.size());
  for (std::size_t k = 0; k < series.ratios.size(); ++k) {
    const double r = series.ratios[k];
    CHECK(series.modified_ratios[k] == doctest::Approx(std::min(r, 1.0 / r)).epsilon(1e-14));
    CHECK(series.modified_ratios[k] >= 0.0);
    CHECK(series.modified_ratios[k] <= 1.0);
  }
}

TEST_CASE("ratio statistics are scale invariant") {
  Rng rng(5);
  Eigen::VectorXd gaps(63);
  for (Eigen::Index i = 0; i < gaps.size(); ++i) gaps[i] = exponential(rng);
  const GapRatioSeries base = gap_ratios_from_gaps(gaps);
  for (double scale : {1e-6, 0.3, 7.0, 1e8}) {
    const GapRatioSeries scaled = gap_ratios_from_gaps(scale * gaps);
    REQUIRE(scaled.modified_ratios.size() == base.modified_ratios.size());
    for (std::size_t k = 0; k < base.modified_ratios.size(); ++k) {
      CHECK(std::abs(scaled.modified_ratios[k] - base.modified_ratios[k]) <= 1e-15);
    }
    for (std::size_t k = 0; k < base.ratios.size(); ++k) {
      const double r = base.ratios[k];
      CHECK(std::abs(scaled.ratios[k] - r) <= 1e-15 * std::max(1.0, r));
    }
  }
}

TEST_CASE("pooled mean over several series weights every ratio equally") {
  const GapRatioSeries a = gap_ratios(spectrum_of({0.5, 0.3, 0.15, 0.05}));
  const GapRatioSeries b = gap_ratios(spectrum_of({0.4, 0.3, 0.2, 0.1}));
  const std::vector<GapRatioSeries> pool = {a, b};
  double expected = 0.0;
  for (const auto& series : pool) {
    for (double v : series.modified_ratios) expected += v;
  }
  expected /= 4.0;
  CHECK(mean_r_tilde(pool) == doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(mean_r_tilde(std::vector<GapRatioSeries>{}), std::invalid_argument);
}

TEST_CASE("poisson synthetic spectra converge to 2 ln 2 - 1") {
  // ~1e5 gaps pooled across spectra.
  const double value = poisson_synthetic_r_tilde(99, 1600, 64);
  CHECK(value == doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(0.013));
}

TEST_CASE("GUE eigenvalue ratios sit near the Wigner-Dyson value") {
  const double value = gue_r_tilde(17, 200, 64);
  CHECK(value == doctest::Approx(0.60).epsilon(0.034));
}

TEST_CASE("reference densities evaluate and normalize") {
  CHECK(reference_pdf(ReferenceKind::Poisson, 0.0) == doctest::Approx(1.0));
  CHECK(reference_pdf(ReferenceKind::Poisson, 1.0) == doctest::Approx(0.25));
  CHECK(reference_pdf(ReferenceKind::WignerDysonGue, 0.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(reference_pdf(ReferenceKind::Poisson, -0.1), std::invalid_argument);

  CHECK(std::abs(reference_pdf_norm(ReferenceKind::Poisson) - 1.0) < 1e-6);
  CHECK(std::abs(reference_pdf_norm(ReferenceKind::WignerDysonGue) - 1.0) < 1e-6);
}

TEST_CASE("kl divergence basics") {
  std::vector<double> samples;
  Rng rng(7);
  for (int i = 0; i < 5000; ++i) samples.push_back(3.0 * uniform_unit(rng));
  const Histogram p = histogram(samples, 10, 0.0, 3.0);
  CHECK(kl_divergence(p, p) == doctest::Approx(0.0).epsilon(1e-12));

  // P concentrated in one bin against a uniform two-bin Q.
  Histogram point;
  point.lo = 0.0;
  point.hi = 2.0;
  point.bins = 2;
  point.mass = Eigen::VectorXd::Zero(3);
  point.mass[0] = 1.0;
  Histogram uniform = point;
  uniform.mass[0] = 0.5;
  uniform.mass[1] = 0.5;
  CHECK(kl_divergence(point, uniform) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  CHECK(kl_divergence(point, uniform) >= -1e-12);

  Histogram other = point;
  other.bins = 3;
  CHECK_THROWS_AS(kl_divergence(point, other), std::invalid_argument);
  Histogram unnormalized = point;
  unnormalized.mass[0] = 0.7;
  CHECK_THROWS_AS(kl_divergence(point, unnormalized), std::invalid_argument);
}

TEST_CASE("empirical GUE ratios are close to the analytic density") {
  const Histogram empirical = gue_r_histogram(3, 800, 64, 50, 3.0);
  const double kl = kl_divergence(empirical, ReferenceKind::WignerDysonGue);
  CHECK(kl >= -1e-12);
  CHECK(kl < 0.02);
}

TEST_CASE("entropies of simple spectra") {
  const EntanglementSpectrum bell = spectrum_of({0.5, 0.5});
  CHECK(von_neumann_entropy(bell) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(renyi_entropy(bell, 2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(trace_power(bell, 2.0) == doctest::Approx(0.5).epsilon(1e-12));

  const EntanglementSpectrum pure = spectrum_of({1.0});
  CHECK(von_neumann_entropy(pure) == doctest::Approx(0.0));
  CHECK(renyi_entropy(pure, 3.0) == doctest::Approx(0.0));
  CHECK(trace_power(pure, 2.5) == doctest::Approx(1.0));

  // alpha -> 1 recovers the von Neumann entropy.
  const double s = von_neumann_entropy(bell);
  CHECK(std::abs(renyi_entropy(bell, 1.001) - s) <= 1e-3 * s);

  CHECK_THROWS_AS(renyi_entropy(bell, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(renyi_entropy(bell, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(trace_power(bell, -1.0), std::invalid_argument);
}

TEST_CASE("entropy is bounded by log of the spectrum size") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd v(16);
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = exponential(rng);
    v /= v.sum();
    const EntanglementSpectrum spectrum = make_spectrum(std::move(v));
    CHECK(von_neumann_entropy(spectrum) <= std::log(16.0) + 1e-12);
  }
  const EntanglementSpectrum flat = spectrum_of({0.25, 0.25, 0.25, 0.25});
  CHECK(von_neumann_entropy(flat) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("page entropy closed form") {
  CHECK(page_entropy(2, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(page_entropy(1, 8) == doctest::Approx(0.0));
  // Direct-summation oracle, written independently of the implementation.
  double oracle = 0.0;
  for (int k = 5; k <= 16; ++k) oracle += 1.0 / k;
  oracle -= 3.0 / 8.0;
  CHECK(page_entropy(4, 4) == doctest::Approx(oracle).epsilon(1e-14));
  CHECK(page_entropy(4, 4) == doctest::Approx(0.92240).epsilon(2e-5));
  CHECK_THROWS_AS(page_entropy(4, 2), std::invalid_argument);
}

TEST_CASE("exponential fit recovers noiseless parameters") {
  std::vector<std::pair<double, double>> points;
  for (double n : {12.0, 14.0, 16.0}) {
    points.emplace_back(n, 0.1 * std::exp(-0.2 * n));
  }
  const FitResult fit = fit_exponential(points);
  CHECK(fit.r0 == doctest::Approx(0.1).epsilon(1e-10));
  CHECK(fit.gamma == doctest::Approx(0.2).epsilon(1e-10));
  CHECK(fit.residual < 1e-20);

  const std::vector<std::pair<double, double>> two = {{8.0, 0.5}, {12.0, 0.25}};
  const FitResult interp = fit_exponential(two);
  CHECK(interp.residual < 1e-20);
  CHECK(interp.gamma == doctest::Approx(std::log(2.0) / 4.0).epsilon(1e-12));

  const std::vector<std::pair<double, double>> bad = {{8.0, 0.5}, {12.0, -0.25}};
  CHECK_THROWS_AS(fit_exponential(bad), std::invalid_argument);
}
