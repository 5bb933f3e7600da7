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
#include <string>
#include <vector>

#include "mgspec/rng.hpp"
#include "mgspec/spectra.hpp"

namespace mgspec {

// Reference checks anchoring the ratio statistics to known ensembles.
struct CalibrationRow {
  std::string name;
  long n_samples = 0;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CalibrationSizes {
  long poisson_spectra = 100000;
  int poisson_levels = 64;
  int gue_matrices = 1000;
  int gue_dim = 64;
  long haar_samples = 100000;
  int kl_gue_matrices = 16000;
  int bins = 50;
  double r_max = 3.0;
};

std::vector<CalibrationRow> run_calibration(std::uint64_t seed, const CalibrationSizes& sizes,
                                            int threads = 0);

std::string calibration_csv(const std::vector<CalibrationRow>& rows);

// GUE matrix H = (A + A^dag)/2 with complex Gaussian A.
Eigen::MatrixXcd random_gue(Rng& rng, int dim);

// Pooled mean modified ratio of synthetic spectra with i.i.d. exponential
// gaps (`spectra` spectra of `levels` levels each).
double poisson_synthetic_r_tilde(std::uint64_t seed, long spectra, int levels, int threads = 0);

// Pooled mean modified ratio of GUE eigenvalue spectra.
double gue_r_tilde(std::uint64_t seed, int matrices, int dim, int threads = 0);

// Pooled plain-ratio histogram of GUE eigenvalue spectra.
Histogram gue_r_histogram(std::uint64_t seed, int matrices, int dim, int bins, double r_max,
                          int threads = 0);

// Integral of a reference density over [0, inf), via the substitution
// u = r / (1 + r).
double reference_pdf_norm(ReferenceKind kind, int panels = 4096);

}  // namespace mgspec
