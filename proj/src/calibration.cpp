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

#include "mgspec/calibration.hpp"

#include <cmath>
#include <numeric>

#include "mgspec/gates.hpp"
#include "mgspec/io.hpp"
#include "mgspec/parallel.hpp"

namespace mgspec {

namespace {

// Domain tags separating the seed streams of the individual checks.
enum SeedDomain : std::uint64_t {
  kPoissonDomain = 0x706f6973,
  kGueDomain = 0x677565,
  kHaarDomain = 0x68616172,
  kSu2Domain = 0x737532,
  kKlDomain = 0x6b6c,
};

std::uint64_t domain_seed(std::uint64_t seed, std::uint64_t domain) { return mix64(seed ^ mix64(domain)); }

struct PooledMean {
  double sum = 0.0;
  long count = 0;
};

Eigen::VectorXd gue_eigenvalues(Rng& rng, int dim) {
  const Eigen::MatrixXcd h = random_gue(rng, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

Eigen::MatrixXcd random_gue(Rng& rng, int dim) {
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      a(i, j) = complex_gaussian(rng);
    }
  }
  return 0.5 * (a + a.adjoint().eval());
}

double poisson_synthetic_r_tilde(std::uint64_t seed, long spectra, int levels, int threads) {
  const std::uint64_t master = domain_seed(seed, kPoissonDomain);
  std::vector<PooledMean> partial(static_cast<std::size_t>(spectra));
  parallel_for(spectra, threads, [&](long i) {
    Rng rng(child_seed(master, static_cast<std::uint64_t>(i)));
    Eigen::VectorXd gaps(levels - 1);
    for (int g = 0; g < levels - 1; ++g) gaps[g] = exponential(rng);
    const GapRatioSeries series = gap_ratios_from_gaps(gaps);
    PooledMean& out = partial[static_cast<std::size_t>(i)];
    for (double v : series.modified_ratios) {
      out.sum += v;
      ++out.count;
    }
  });
  double sum = 0.0;
  long count = 0;
  for (const PooledMean& p : partial) {
    sum += p.sum;
    count += p.count;
  }
  return sum / static_cast<double>(count);
}

double gue_r_tilde(std::uint64_t seed, int matrices, int dim, int threads) {
  const std::uint64_t master = domain_seed(seed, kGueDomain);
  std::vector<PooledMean> partial(static_cast<std::size_t>(matrices));
  parallel_for(matrices, threads, [&](long i) {
    Rng rng(child_seed(master, static_cast<std::uint64_t>(i)));
    const GapRatioSeries series = gap_ratios_from_levels(gue_eigenvalues(rng, dim));
    PooledMean& out = partial[static_cast<std::size_t>(i)];
    for (double v : series.modified_ratios) {
      out.sum += v;
      ++out.count;
    }
  });
  double sum = 0.0;
  long count = 0;
  for (const PooledMean& p : partial) {
    sum += p.sum;
    count += p.count;
  }
  return sum / static_cast<double>(count);
}

Histogram gue_r_histogram(std::uint64_t seed, int matrices, int dim, int bins, double r_max, int threads) {
  const std::uint64_t master = domain_seed(seed, kKlDomain);
  std::vector<std::vector<double>> partial(static_cast<std::size_t>(matrices));
  parallel_for(matrices, threads, [&](long i) {
    Rng rng(child_seed(master, static_cast<std::uint64_t>(i)));
    const GapRatioSeries series = gap_ratios_from_levels(gue_eigenvalues(rng, dim));
    partial[static_cast<std::size_t>(i)] = series.ratios;
  });
  std::vector<double> pooled;
  for (const auto& chunk : partial) {
    pooled.insert(pooled.end(), chunk.begin(), chunk.end());
  }
  return histogram(pooled, bins, 0.0, r_max);
}

double reference_pdf_norm(ReferenceKind kind, int panels) {
  // u = r/(1+r) maps [0, inf) to [0, 1); dr = du/(1-u)^2. Simpson rule.
  auto integrand = [kind](double u) {
    const double denom = 1.0 - u;
    const double r = u / denom;
    return reference_pdf(kind, r) / (denom * denom);
  };
  if (panels % 2 != 0) ++panels;
  const double h = 1.0 / panels;
  double sum = integrand(0.0);
  for (int i = 1; i < panels; ++i) {
    // The last panel edge sits at u = 1 - h where the map is still finite.
    sum += integrand(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  // Endpoint u = 1: integrand(u) = (1 + r)^2 f(r). The Poisson density is
  // exactly 1/(1+r)^2, so the limit is 1; the Wigner-Dyson density falls
  // off faster and the limit is 0.
  sum += kind == ReferenceKind::Poisson ? 1.0 : 0.0;
  return sum * h / 3.0;
}

std::vector<CalibrationRow> run_calibration(std::uint64_t seed, const CalibrationSizes& sizes, int threads) {
  std::vector<CalibrationRow> rows;

  {
    CalibrationRow row;
    row.name = "poisson_r_tilde";
    row.n_samples = sizes.poisson_spectra;
    row.value = poisson_synthetic_r_tilde(seed, sizes.poisson_spectra, sizes.poisson_levels, threads);
    row.expected = 0.386;
    row.tolerance = 0.005;
    rows.push_back(row);
  }
  {
    CalibrationRow row;
    row.name = "gue_r_tilde";
    row.n_samples = sizes.gue_matrices;
    row.value = gue_r_tilde(seed, sizes.gue_matrices, sizes.gue_dim, threads);
    row.expected = 0.60;
    row.tolerance = 0.015;
    rows.push_back(row);
  }
  {
    const std::uint64_t master = domain_seed(seed, kSu2Domain);
    Rng rng(master);
    double sum = 0.0;
    for (long i = 0; i < sizes.haar_samples; ++i) {
      sum += std::norm(random_su2(rng)(0, 0));
    }
    CalibrationRow row;
    row.name = "su2_u11_sq";
    row.n_samples = sizes.haar_samples;
    row.value = sum / static_cast<double>(sizes.haar_samples);
    row.expected = 0.5;
    row.tolerance = 0.01;
    rows.push_back(row);
  }
  {
    const std::uint64_t master = domain_seed(seed, kHaarDomain);
    Rng rng(master);
    double sum = 0.0;
    for (long i = 0; i < sizes.haar_samples; ++i) {
      sum += std::norm(random_u4(rng)(0, 0));
    }
    CalibrationRow row;
    row.name = "haar4_u11_sq";
    row.n_samples = sizes.haar_samples;
    row.value = sum / static_cast<double>(sizes.haar_samples);
    row.expected = 0.25;
    row.tolerance = 0.01;
    rows.push_back(row);
  }
  {
    CalibrationRow row;
    row.name = "poisson_pdf_norm";
    row.n_samples = 0;
    row.value = reference_pdf_norm(ReferenceKind::Poisson);
    row.expected = 1.0;
    row.tolerance = 1e-6;
    rows.push_back(row);
  }
  {
    CalibrationRow row;
    row.name = "wigner_dyson_pdf_norm";
    row.n_samples = 0;
    row.value = reference_pdf_norm(ReferenceKind::WignerDysonGue);
    row.expected = 1.0;
    row.tolerance = 1e-6;
    rows.push_back(row);
  }
  {
    const Histogram empirical =
        gue_r_histogram(seed, sizes.kl_gue_matrices, sizes.gue_dim, sizes.bins, sizes.r_max, threads);
    CalibrationRow row;
    row.name = "gue_kl_vs_wigner_dyson";
    row.n_samples = static_cast<long>(sizes.kl_gue_matrices) * (sizes.gue_dim - 2);
    row.value = kl_divergence(empirical, ReferenceKind::WignerDysonGue);
    row.expected = 0.0;
    row.tolerance = 0.01;
    rows.push_back(row);
  }

  for (CalibrationRow& row : rows) {
    row.pass = std::abs(row.value - row.expected) <= row.tolerance;
  }
  return rows;
}

std::string calibration_csv(const std::vector<CalibrationRow>& rows) {
  std::string out = "name,n_samples,value,expected,tolerance,pass\n";
  for (const CalibrationRow& row : rows) {
    out += row.name;
    out += ',' + std::to_string(row.n_samples);
    out += ',' + io::format_double(row.value);
    out += ',' + io::format_double(row.expected);
    out += ',' + io::format_double(row.tolerance);
    out += row.pass ? ",1\n" : ",0\n";
  }
  return out;
}

}  // namespace mgspec
