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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgspec/calibration.hpp"
#include "mgspec/circuit.hpp"
#include "mgspec/input_states.hpp"
#include "mgspec/spectra.hpp"

namespace mgspec {

enum class ExperimentKind { SwapInjection, InputStates, Conjugation, KlAnalysis, EntropyScan, Calibration };

ExperimentKind experiment_from_name(std::string_view name);
std::string to_string(ExperimentKind kind);

// Parsed experiment configuration. Loaded from JSON with strict key
// checking: unknown keys are errors. pre_layers -1 selects the N^2 default;
// post_layers -1 selects the depth table 10*N - 20.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::SwapInjection;
  std::vector<int> num_qubits = {8, 10, 12};
  int num_circuits = 100;
  int pre_layers = -1;
  int post_layers = -1;
  std::vector<int> num_swaps = {0};
  InputSpec input;
  std::vector<int> block_sizes = {1, 2, 3, 4};
  std::vector<ConjugationKind> conjugations;
  BrickworkKind brickwork = BrickworkKind::Matchgate;
  std::vector<int> haar_qubits;
  std::uint64_t master_seed = 1;
  int tail_window = 40;
  int bins = 50;
  double r_max = 3.0;
  double floor = 0.0;
  int cut = 0;  // 0 selects N/2
  std::vector<double> alphas = {2.0, 3.0, 4.0};
  CalibrationSizes calibration;

  // Sorted-key JSON of the effective configuration; its FNV-1a hash labels
  // every record produced under this configuration.
  std::string canonical_json() const;
  std::string hash() const;
};

ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig config_from_file(const std::string& path);

// One circuit realization. r_tilde_trace holds the pooled mean modified
// ratio after each post-injection layer; r_tilde_inf averages the final
// tail_window entries. wall_ms and r_samples are run artifacts and are not
// serialized.
struct RunRecord {
  std::string config_hash;
  int circuit_index = 0;
  std::uint64_t seed = 0;
  std::vector<double> r_tilde_trace;
  double r_tilde_inf = 0.0;
  Eigen::VectorXd spectrum;
  double entropy = 0.0;
  double renyi2 = 0.0;
  std::vector<std::pair<double, double>> trace_powers;  // (alpha, value)
  double wall_ms = 0.0;
  std::vector<double> r_samples;
};

std::string to_jsonl(const RunRecord& record);
RunRecord record_from_json(const std::string& line);

struct SummaryRow {
  int num_qubits = 0;
  int num_swaps = 0;
  std::string input_kind;
  int block_k = 0;
  std::string conjugation = "none";
  double mean_r_tilde_inf = 0.0;
  double std_r_tilde_inf = 0.0;
  double mean_entropy = 0.0;
  double page_deviation = 0.0;
  int n_samples = 0;
  std::vector<std::pair<std::string, double>> extras;
};

std::string summary_csv(const std::vector<SummaryRow>& rows);

struct KlRow {
  std::string p_label;
  std::string q_label;
  double kl = 0.0;
};

std::string kl_csv(const std::vector<KlRow>& rows);

// bin_left, bin_right, density; the overflow bin prints "inf" and carries
// its mass in the density column.
std::string histogram_csv(const Histogram& hist);
Histogram histogram_from_csv(const std::string& text);

struct RunOptions {
  int threads = 0;      // 0 selects hardware concurrency
  int max_qubits = 20;  // refuse larger systems unless raised explicitly
  std::function<void(const RunRecord&)> record_sink;  // called in index order
  std::function<void(const std::string&)> log;
};

struct ExperimentResult {
  std::vector<RunRecord> records;
  std::vector<SummaryRow> summary;
  std::vector<std::pair<std::string, Histogram>> histograms;
  std::vector<KlRow> kl_rows;
  std::vector<CalibrationRow> calibration;
  std::vector<std::string> warnings;
};

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

// One experiment cell; everything needed to simulate a realization.
struct GroupPlan {
  int num_qubits = 0;
  InputSpec input;
  ConjugationKind conjugation = ConjugationKind::None;
  BrickworkKind kind = BrickworkKind::Matchgate;
  int pre_layers = 0;
  int num_swaps = 0;
  int post_layers = 0;
  int tail_window = 40;
  double floor = 0.0;
  int cut = 0;
  bool per_layer_trace = true;
  std::vector<double> alphas;

  int resolved_cut() const { return cut > 0 ? cut : num_qubits / 2; }
  std::string label() const;
};

// Input preparation, optional conjugation prefix, pre-injection brickwork,
// SWAP injection, then traced post-injection brickwork.
RunRecord simulate_realization(const GroupPlan& plan, std::uint64_t seed);

// count realizations with child seeds child(master_seed, first_index + i),
// run on a worker pool; records are returned (and streamed) in index order.
std::vector<RunRecord> run_group(const GroupPlan& plan, int count, std::uint64_t master_seed,
                                 int first_index, const std::string& config_hash,
                                 const RunOptions& options);

SummaryRow summarize(const GroupPlan& plan, std::span<const RunRecord> records);

// Post-injection depth table: 10*N - 20.
int default_post_layers(int num_qubits);

}  // namespace mgspec
