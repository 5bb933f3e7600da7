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

#include "mgspec/experiments.hpp"

#include <json.hpp>

#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mgspec/io.hpp"
#include "mgspec/parallel.hpp"
#include "mgspec/pauli.hpp"
#include "mgspec/statevector.hpp"

namespace mgspec {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double mean_r_tilde_or_nan(const GapRatioSeries& series) {
  if (series.modified_ratios.empty()) return kNaN;
  return mean_r_tilde(series);
}

struct Moments {
  double mean = kNaN;
  double stddev = 0.0;
  int count = 0;
};

Moments moments(const std::vector<double>& values) {
  Moments m;
  double sum = 0.0;
  for (double v : values) {
    if (std::isfinite(v)) {
      sum += v;
      ++m.count;
    }
  }
  if (m.count == 0) return m;
  m.mean = sum / m.count;
  if (m.count > 1) {
    double ss = 0.0;
    for (double v : values) {
      if (std::isfinite(v)) ss += (v - m.mean) * (v - m.mean);
    }
    m.stddev = std::sqrt(ss / (m.count - 1));
  }
  return m;
}

std::string format_alpha(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", alpha);
  return buf;
}

const std::set<std::string>& allowed_config_keys() {
  static const std::set<std::string> keys = {
      "experiment",   "num_qubits",   "num_circuits", "pre_layers",      "post_layers",
      "num_swaps",    "input",        "block_sizes",  "conjugations",    "brickwork",
      "haar_qubits",  "master_seed",  "tail_window",  "bins",            "r_max",
      "floor",        "cut",          "alphas",       "poisson_spectra", "poisson_levels",
      "gue_matrices", "gue_dim",      "haar_samples", "kl_gue_matrices"};
  return keys;
}

int parse_layer_field(const json& value, const char* name, const char* symbolic) {
  if (value.is_string()) {
    if (value.get<std::string>() == symbolic) return -1;
    throw std::invalid_argument(std::string("config: ") + name + " must be an integer or \"" + symbolic + "\"");
  }
  const int layers = value.get<int>();
  if (layers < 0) {
    throw std::invalid_argument(std::string("config: ") + name + " must be nonnegative");
  }
  return layers;
}

InputSpec parse_input(const json& doc) {
  InputSpec spec;
  for (const auto& [key, value] : doc.items()) {
    if (key == "kind") {
      spec.kind = input_kind_from_name(value.get<std::string>());
    } else if (key == "k") {
      spec.block_size = value.get<int>();
    } else if (key == "bits") {
      spec.bits = value.get<std::string>();
    } else {
      throw std::invalid_argument("config: unknown input key: " + key);
    }
  }
  return spec;
}

json input_to_json(const InputSpec& spec) {
  json doc;
  doc["kind"] = to_string(spec.kind);
  doc["k"] = spec.block_size;
  doc["bits"] = spec.bits;
  return doc;
}

int resolve_pre_layers(const ExperimentConfig& config, int n) {
  return config.pre_layers >= 0 ? config.pre_layers : n * n;
}

int resolve_post_layers(const ExperimentConfig& config, int n) {
  return config.post_layers >= 0 ? config.post_layers : default_post_layers(n);
}

void append_json_array(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += io::json_double(values[i]);
  }
  out += ']';
}

}  // namespace

int default_post_layers(int num_qubits) { return 10 * num_qubits - 20; }

ExperimentKind experiment_from_name(std::string_view name) {
  if (name == "swap_injection") return ExperimentKind::SwapInjection;
  if (name == "input_states") return ExperimentKind::InputStates;
  if (name == "conjugation") return ExperimentKind::Conjugation;
  if (name == "kl_analysis") return ExperimentKind::KlAnalysis;
  if (name == "entropy_scan") return ExperimentKind::EntropyScan;
  if (name == "calibration") return ExperimentKind::Calibration;
  throw std::invalid_argument("unknown experiment: " + std::string(name));
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::SwapInjection:
      return "swap_injection";
    case ExperimentKind::InputStates:
      return "input_states";
    case ExperimentKind::Conjugation:
      return "conjugation";
    case ExperimentKind::KlAnalysis:
      return "kl_analysis";
    case ExperimentKind::EntropyScan:
      return "entropy_scan";
    case ExperimentKind::Calibration:
      return "calibration";
  }
  return "?";
}

ExperimentConfig config_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("config: top level must be an object");
  }
  if (!doc.contains("experiment")) {
    throw std::invalid_argument("config: missing \"experiment\"");
  }
  ExperimentConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (!allowed_config_keys().contains(key)) {
      throw std::invalid_argument("config: unknown key: " + key);
    }
    if (key == "experiment") {
      config.experiment = experiment_from_name(value.get<std::string>());
    } else if (key == "num_qubits") {
      config.num_qubits = value.get<std::vector<int>>();
    } else if (key == "num_circuits") {
      config.num_circuits = value.get<int>();
    } else if (key == "pre_layers") {
      config.pre_layers = parse_layer_field(value, "pre_layers", "N^2");
    } else if (key == "post_layers") {
      config.post_layers = parse_layer_field(value, "post_layers", "table");
    } else if (key == "num_swaps") {
      config.num_swaps = value.get<std::vector<int>>();
    } else if (key == "input") {
      config.input = parse_input(value);
    } else if (key == "block_sizes") {
      config.block_sizes = value.get<std::vector<int>>();
    } else if (key == "conjugations") {
      config.conjugations.clear();
      for (const auto& name : value) {
        config.conjugations.push_back(conjugation_from_name(name.get<std::string>()));
      }
    } else if (key == "brickwork") {
      config.brickwork = brickwork_kind_from_name(value.get<std::string>());
    } else if (key == "haar_qubits") {
      config.haar_qubits = value.get<std::vector<int>>();
    } else if (key == "master_seed") {
      config.master_seed = value.get<std::uint64_t>();
    } else if (key == "tail_window") {
      config.tail_window = value.get<int>();
    } else if (key == "bins") {
      config.bins = value.get<int>();
    } else if (key == "r_max") {
      config.r_max = value.get<double>();
    } else if (key == "floor") {
      config.floor = value.get<double>();
    } else if (key == "cut") {
      config.cut = value.get<int>();
    } else if (key == "alphas") {
      config.alphas = value.get<std::vector<double>>();
    } else if (key == "poisson_spectra") {
      config.calibration.poisson_spectra = value.get<long>();
    } else if (key == "poisson_levels") {
      config.calibration.poisson_levels = value.get<int>();
    } else if (key == "gue_matrices") {
      config.calibration.gue_matrices = value.get<int>();
    } else if (key == "gue_dim") {
      config.calibration.gue_dim = value.get<int>();
    } else if (key == "haar_samples") {
      config.calibration.haar_samples = value.get<long>();
    } else if (key == "kl_gue_matrices") {
      config.calibration.kl_gue_matrices = value.get<int>();
    }
  }

  if (config.num_circuits < 1) {
    throw std::invalid_argument("config: num_circuits must be >= 1");
  }
  if (config.tail_window < 1) {
    throw std::invalid_argument("config: tail_window must be >= 1");
  }
  if (config.bins < 2) {
    throw std::invalid_argument("config: bins must be >= 2");
  }
  if (!(config.r_max > 0.0)) {
    throw std::invalid_argument("config: r_max must be positive");
  }
  if (config.floor < 0.0) {
    throw std::invalid_argument("config: floor must be nonnegative");
  }
  for (double alpha : config.alphas) {
    if (!(alpha > 0.0) || alpha == 1.0) {
      throw std::invalid_argument("config: alphas must be positive and != 1");
    }
  }
  for (int n : config.num_qubits) {
    if (n < 4 || n % 2 != 0) {
      throw std::invalid_argument("config: num_qubits entries must be even and >= 4");
    }
  }
  for (int n : config.haar_qubits) {
    if (n < 4 || n % 2 != 0) {
      throw std::invalid_argument("config: haar_qubits entries must be even and >= 4");
    }
  }
  if (config.experiment == ExperimentKind::KlAnalysis && config.haar_qubits.empty()) {
    throw std::invalid_argument("config: kl_analysis needs haar_qubits");
  }
  if (config.experiment == ExperimentKind::Conjugation && config.conjugations.empty()) {
    throw std::invalid_argument("config: conjugation needs conjugations");
  }
  return config;
}

ExperimentConfig config_from_file(const std::string& path) {
  return config_from_json(io::read_file(path));
}

std::string ExperimentConfig::canonical_json() const {
  json doc;
  doc["experiment"] = to_string(experiment);
  doc["num_qubits"] = num_qubits;
  doc["num_circuits"] = num_circuits;
  doc["pre_layers"] = pre_layers;
  doc["post_layers"] = post_layers;
  doc["num_swaps"] = num_swaps;
  doc["input"] = input_to_json(input);
  doc["block_sizes"] = block_sizes;
  {
    std::vector<std::string> names;
    names.reserve(conjugations.size());
    for (ConjugationKind c : conjugations) names.push_back(to_string(c));
    doc["conjugations"] = names;
  }
  doc["brickwork"] = to_string(brickwork);
  doc["haar_qubits"] = haar_qubits;
  doc["master_seed"] = master_seed;
  doc["tail_window"] = tail_window;
  doc["bins"] = bins;
  doc["r_max"] = r_max;
  doc["floor"] = floor;
  doc["cut"] = cut;
  doc["alphas"] = alphas;
  if (experiment == ExperimentKind::Calibration) {
    doc["poisson_spectra"] = calibration.poisson_spectra;
    doc["poisson_levels"] = calibration.poisson_levels;
    doc["gue_matrices"] = calibration.gue_matrices;
    doc["gue_dim"] = calibration.gue_dim;
    doc["haar_samples"] = calibration.haar_samples;
    doc["kl_gue_matrices"] = calibration.kl_gue_matrices;
  }
  return doc.dump();
}

std::string ExperimentConfig::hash() const { return io::fnv1a_hex(canonical_json()); }

std::string GroupPlan::label() const {
  std::ostringstream out;
  out << to_string(kind) << " N=" << num_qubits << " swaps=" << num_swaps
      << " input=" << to_string(input.kind);
  if (input.kind == InputKind::HaarBlocks) out << "(k=" << input.block_size << ")";
  if (conjugation != ConjugationKind::None) out << " conj=" << to_string(conjugation);
  return out.str();
}

RunRecord simulate_realization(const GroupPlan& plan, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const int n = plan.num_qubits;
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("simulate_realization: num_qubits must be even and >= 4");
  }
  const int cut = plan.resolved_cut();
  if (cut < 1 || cut > n - 1) {
    throw std::invalid_argument("simulate_realization: cut out of range");
  }
  if (plan.per_layer_trace && plan.tail_window > plan.post_layers) {
    throw std::invalid_argument("simulate_realization: tail_window exceeds post_layers");
  }

  Rng rng(seed);
  Statevector psi = prepare(plan.input, n, rng);
  if (plan.conjugation != ConjugationKind::None) {
    apply(psi, conjugation_circuit(plan.conjugation, n));
  }
  apply(psi, brickwork(n, plan.pre_layers, plan.kind, rng));
  if (plan.num_swaps > 0) {
    apply(psi, swap_injection(n, plan.num_swaps));
  }
  // Post-injection layers continue the brickwork alternation.
  const Circuit post = brickwork(n, plan.post_layers, plan.kind, rng, plan.pre_layers % 2);

  RunRecord record;
  record.seed = seed;
  std::optional<EntanglementSpectrum> last_traced;
  record.r_tilde_trace.reserve(post.layers.size());
  for (std::size_t l = 0; l < post.layers.size(); ++l) {
    apply(psi, post.layers[l]);
    if (plan.per_layer_trace) {
      EntanglementSpectrum spectrum = schmidt_spectrum(psi, cut);
      record.r_tilde_trace.push_back(mean_r_tilde_or_nan(gap_ratios(spectrum, plan.floor)));
      if (l + 1 == post.layers.size()) last_traced = std::move(spectrum);
    }
  }
  const EntanglementSpectrum final_spectrum =
      last_traced ? std::move(*last_traced) : schmidt_spectrum(psi, cut);

  record.spectrum = final_spectrum.values;
  record.entropy = von_neumann_entropy(final_spectrum);
  record.renyi2 = renyi_entropy(final_spectrum, 2.0);
  for (double alpha : plan.alphas) {
    record.trace_powers.emplace_back(alpha, trace_power(final_spectrum, alpha));
  }
  const GapRatioSeries final_series = gap_ratios(final_spectrum, plan.floor);
  record.r_samples = final_series.ratios;

  if (plan.per_layer_trace) {
    const std::size_t take = std::min<std::size_t>(record.r_tilde_trace.size(),
                                                   static_cast<std::size_t>(plan.tail_window));
    double sum = 0.0;
    int finite = 0;
    for (std::size_t i = record.r_tilde_trace.size() - take; i < record.r_tilde_trace.size(); ++i) {
      if (std::isfinite(record.r_tilde_trace[i])) {
        sum += record.r_tilde_trace[i];
        ++finite;
      }
    }
    record.r_tilde_inf = finite > 0 ? sum / finite : kNaN;
  } else {
    record.r_tilde_inf = mean_r_tilde_or_nan(final_series);
  }

  record.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

std::vector<RunRecord> run_group(const GroupPlan& plan, int count, std::uint64_t master_seed,
                                 int first_index, const std::string& config_hash,
                                 const RunOptions& options) {
  if (count < 1) {
    throw std::invalid_argument("run_group: count must be >= 1");
  }
  if (plan.num_qubits > options.max_qubits) {
    throw std::invalid_argument("run_group: num_qubits exceeds max_qubits; raise --max-qubits to override");
  }
  if (plan.per_layer_trace && plan.tail_window > plan.post_layers) {
    throw std::invalid_argument("run_group: tail_window exceeds post_layers");
  }

  const int threads = std::min<int>(resolve_threads(options.threads), count);
  std::vector<RunRecord> records(static_cast<std::size_t>(count));
  std::vector<char> done(static_cast<std::size_t>(count), 0);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<int> next{0};
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        RunRecord record =
            simulate_realization(plan, child_seed(master_seed, static_cast<std::uint64_t>(first_index + i)));
        record.circuit_index = first_index + i;
        record.config_hash = config_hash;
        {
          std::lock_guard<std::mutex> lock(mutex);
          records[static_cast<std::size_t>(i)] = std::move(record);
          done[static_cast<std::size_t>(i)] = 1;
        }
        ready.notify_all();
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(mutex);
          if (!error) error = std::current_exception();
        }
        next.store(count);
        ready.notify_all();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  if (options.record_sink) {
    // Stream records in index order as they complete.
    try {
      int flushed = 0;
      std::unique_lock<std::mutex> lock(mutex);
      while (flushed < count) {
        ready.wait(lock, [&] { return done[static_cast<std::size_t>(flushed)] || error; });
        if (error && !done[static_cast<std::size_t>(flushed)]) break;
        while (flushed < count && done[static_cast<std::size_t>(flushed)]) {
          const RunRecord& record = records[static_cast<std::size_t>(flushed)];
          lock.unlock();
          options.record_sink(record);
          lock.lock();
          ++flushed;
        }
      }
    } catch (...) {
      {
        std::lock_guard<std::mutex> lock(mutex);
        if (!error) error = std::current_exception();
      }
      next.store(count);
    }
  }

  for (auto& thread : pool) thread.join();
  if (error) std::rethrow_exception(error);
  return records;
}

SummaryRow summarize(const GroupPlan& plan, std::span<const RunRecord> records) {
  SummaryRow row;
  row.num_qubits = plan.num_qubits;
  row.num_swaps = plan.num_swaps;
  row.input_kind = to_string(plan.input.kind);
  switch (plan.input.kind) {
    case InputKind::HaarBlocks:
      row.block_k = plan.input.block_size;
      break;
    case InputKind::RandomRealProduct:
      row.block_k = 1;
      break;
    case InputKind::ComputationalBasis:
      row.block_k = 0;
      break;
  }
  row.conjugation = to_string(plan.conjugation);

  std::vector<double> r_inf, entropies, renyi;
  r_inf.reserve(records.size());
  entropies.reserve(records.size());
  for (const RunRecord& record : records) {
    r_inf.push_back(record.r_tilde_inf);
    entropies.push_back(record.entropy);
    renyi.push_back(record.renyi2);
  }
  const Moments r_moments = moments(r_inf);
  const Moments s_moments = moments(entropies);
  row.mean_r_tilde_inf = r_moments.mean;
  row.std_r_tilde_inf = r_moments.stddev;
  row.mean_entropy = s_moments.mean;
  row.n_samples = r_moments.count;

  const int cut = plan.resolved_cut();
  const std::int64_t dim_a = std::int64_t(1) << std::min(cut, plan.num_qubits - cut);
  const std::int64_t dim_b = std::int64_t(1) << std::max(cut, plan.num_qubits - cut);
  row.page_deviation = page_entropy(dim_a, dim_b) - s_moments.mean;

  row.extras.emplace_back("std_entropy", s_moments.stddev);
  row.extras.emplace_back("mean_renyi2", moments(renyi).mean);
  for (std::size_t a = 0; a < plan.alphas.size(); ++a) {
    std::vector<double> tp;
    tp.reserve(records.size());
    for (const RunRecord& record : records) {
      tp.push_back(record.trace_powers[a].second);
    }
    row.extras.emplace_back("mean_trace_power_" + format_alpha(plan.alphas[a]), moments(tp).mean);
  }
  return row;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  ExperimentResult result;
  const std::string hash = config.hash();
  auto log = [&](const std::string& line) {
    if (options.log) options.log(line);
  };

  if (config.experiment == ExperimentKind::Calibration) {
    log("running calibration suite");
    result.calibration = run_calibration(config.master_seed, config.calibration, options.threads);
    return result;
  }

  int group_index = 0;
  auto run_cell = [&](const GroupPlan& plan) {
    const int first = group_index * config.num_circuits;
    ++group_index;
    log("group " + plan.label());
    std::vector<RunRecord> records =
        run_group(plan, config.num_circuits, config.master_seed, first, hash, options);
    std::size_t offset = result.records.size();
    for (RunRecord& record : records) {
      result.records.push_back(std::move(record));
    }
    return std::pair<std::size_t, std::size_t>{offset, result.records.size()};
  };
  auto records_span = [&](std::size_t lo, std::size_t hi) {
    return std::span<const RunRecord>(result.records).subspan(lo, hi - lo);
  };

  auto base_plan = [&](int n) {
    GroupPlan plan;
    plan.num_qubits = n;
    plan.input = config.input;
    plan.kind = config.brickwork;
    plan.pre_layers = resolve_pre_layers(config, n);
    plan.post_layers = resolve_post_layers(config, n);
    plan.tail_window = config.tail_window;
    plan.floor = config.floor;
    plan.cut = config.cut;
    plan.alphas = config.alphas;
    return plan;
  };

  switch (config.experiment) {
    case ExperimentKind::SwapInjection: {
      for (int n : config.num_qubits) {
        for (int swaps : config.num_swaps) {
          GroupPlan plan = base_plan(n);
          plan.num_swaps = swaps;
          const auto [lo, hi] = run_cell(plan);
          result.summary.push_back(summarize(plan, records_span(lo, hi)));
        }
      }
      break;
    }
    case ExperimentKind::InputStates: {
      for (int n : config.num_qubits) {
        for (int k : config.block_sizes) {
          GroupPlan plan = base_plan(n);
          plan.input.kind = InputKind::HaarBlocks;
          plan.input.block_size = k;
          const auto [lo, hi] = run_cell(plan);
          result.summary.push_back(summarize(plan, records_span(lo, hi)));
        }
      }
      break;
    }
    case ExperimentKind::Conjugation: {
      for (int n : config.num_qubits) {
        for (ConjugationKind conj : config.conjugations) {
          GroupPlan plan = base_plan(n);
          plan.conjugation = conj;
          const auto [lo, hi] = run_cell(plan);
          SummaryRow row = summarize(plan, records_span(lo, hi));
          row.extras.emplace_back(
              "fermionic_weight",
              static_cast<double>(fermionic_weight(conjugation_circuit(conj, n), n)));
          result.summary.push_back(std::move(row));
        }
      }
      break;
    }
    case ExperimentKind::EntropyScan: {
      for (int n : config.num_qubits) {
        for (int swaps : config.num_swaps) {
          GroupPlan plan = base_plan(n);
          plan.num_swaps = swaps;
          plan.per_layer_trace = false;
          const auto [lo, hi] = run_cell(plan);
          SummaryRow row = summarize(plan, records_span(lo, hi));
          row.extras.emplace_back("swap_density",
                                  static_cast<double>(swaps) / static_cast<double>(n - 1));
          result.summary.push_back(std::move(row));
        }
      }
      for (int n : config.haar_qubits) {
        GroupPlan plan = base_plan(n);
        plan.kind = BrickworkKind::Haar;
        plan.num_swaps = 0;
        plan.per_layer_trace = false;
        const auto [lo, hi] = run_cell(plan);
        SummaryRow row = summarize(plan, records_span(lo, hi));
        row.extras.emplace_back("swap_density", 0.0);
        result.summary.push_back(std::move(row));
      }
      break;
    }
    case ExperimentKind::KlAnalysis: {
      auto pool_and_bin = [&](std::size_t lo, std::size_t hi, const std::string& label) {
        std::vector<double> pooled;
        for (std::size_t i = lo; i < hi; ++i) {
          const auto& samples = result.records[i].r_samples;
          pooled.insert(pooled.end(), samples.begin(), samples.end());
        }
        if (pooled.size() < 10u * static_cast<std::size_t>(config.bins + 1)) {
          result.warnings.push_back(label + ": only " + std::to_string(pooled.size()) +
                                    " ratios for " + std::to_string(config.bins) + " bins");
        }
        result.histograms.emplace_back(label, histogram(pooled, config.bins, 0.0, config.r_max));
        return result.histograms.back().second;
      };

      std::vector<std::pair<int, Histogram>> haar_hists;
      for (int n : config.haar_qubits) {
        GroupPlan plan = base_plan(n);
        plan.kind = BrickworkKind::Haar;
        plan.num_swaps = 0;
        plan.post_layers = 0;
        plan.per_layer_trace = false;
        const auto [lo, hi] = run_cell(plan);
        const std::string label = "haar_N" + std::to_string(n);
        const Histogram hist = pool_and_bin(lo, hi, label);
        haar_hists.emplace_back(n, hist);
        result.kl_rows.push_back({label, "wigner_dyson", kl_divergence(hist, ReferenceKind::WignerDysonGue)});
        result.summary.push_back(summarize(plan, records_span(lo, hi)));
      }
      for (int n : config.num_qubits) {
        for (int swaps : config.num_swaps) {
          GroupPlan plan = base_plan(n);
          plan.num_swaps = swaps;
          plan.per_layer_trace = false;
          const auto [lo, hi] = run_cell(plan);
          const std::string label =
              to_string(plan.kind) + "_N" + std::to_string(n) + "_s" + std::to_string(swaps);
          const Histogram hist = pool_and_bin(lo, hi, label);
          result.kl_rows.push_back(
              {label, "wigner_dyson", kl_divergence(hist, ReferenceKind::WignerDysonGue)});
          for (const auto& [haar_n, haar_hist] : haar_hists) {
            if (haar_n == n) {
              result.kl_rows.push_back(
                  {label, "haar_N" + std::to_string(n), kl_divergence(hist, haar_hist)});
            }
          }
          result.summary.push_back(summarize(plan, records_span(lo, hi)));
        }
      }
      result.histograms.emplace_back(
          "wigner_dyson", reference_histogram(ReferenceKind::WignerDysonGue, config.bins, 0.0, config.r_max));
      break;
    }
    case ExperimentKind::Calibration:
      break;  // handled above
  }
  return result;
}

std::string to_jsonl(const RunRecord& record) {
  std::string out = "{\"config_hash\":\"" + record.config_hash + "\"";
  out += ",\"circuit_index\":" + std::to_string(record.circuit_index);
  out += ",\"seed\":" + std::to_string(record.seed);
  out += ",\"r_tilde_trace\":";
  append_json_array(out, record.r_tilde_trace);
  out += ",\"r_tilde_inf\":" + io::json_double(record.r_tilde_inf);
  out += ",\"spectrum\":[";
  for (Eigen::Index i = 0; i < record.spectrum.size(); ++i) {
    if (i) out += ',';
    out += io::json_double(record.spectrum[i]);
  }
  out += "],\"entropy\":" + io::json_double(record.entropy);
  out += ",\"renyi2\":" + io::json_double(record.renyi2);
  out += ",\"trace_powers\":{";
  for (std::size_t i = 0; i < record.trace_powers.size(); ++i) {
    if (i) out += ',';
    out += '"' + format_alpha(record.trace_powers[i].first) + "\":" +
           io::json_double(record.trace_powers[i].second);
  }
  out += "}}";
  return out;
}

RunRecord record_from_json(const std::string& line) {
  const json doc = json::parse(line);
  RunRecord record;
  record.config_hash = doc.at("config_hash").get<std::string>();
  record.circuit_index = doc.at("circuit_index").get<int>();
  record.seed = doc.at("seed").get<std::uint64_t>();
  auto to_double = [](const json& v) { return v.is_null() ? kNaN : v.get<double>(); };
  for (const auto& v : doc.at("r_tilde_trace")) {
    record.r_tilde_trace.push_back(to_double(v));
  }
  record.r_tilde_inf = to_double(doc.at("r_tilde_inf"));
  const auto& spectrum = doc.at("spectrum");
  record.spectrum.resize(static_cast<Eigen::Index>(spectrum.size()));
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    record.spectrum[static_cast<Eigen::Index>(i)] = to_double(spectrum.at(i));
  }
  record.entropy = to_double(doc.at("entropy"));
  record.renyi2 = to_double(doc.at("renyi2"));
  for (const auto& [key, value] : doc.at("trace_powers").items()) {
    record.trace_powers.emplace_back(std::stod(key), to_double(value));
  }
  return record;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "num_qubits,num_swaps,input_kind,block_k,conjugation,mean_r_tilde_inf,"
                    "std_r_tilde_inf,mean_entropy,page_deviation,n_samples";
  if (!rows.empty()) {
    for (const auto& [key, value] : rows.front().extras) {
      out += ',' + key;
    }
  }
  out += '\n';
  for (const SummaryRow& row : rows) {
    out += std::to_string(row.num_qubits);
    out += ',' + std::to_string(row.num_swaps);
    out += ',' + row.input_kind;
    out += ',' + std::to_string(row.block_k);
    out += ',' + row.conjugation;
    out += ',' + io::format_double(row.mean_r_tilde_inf);
    out += ',' + io::format_double(row.std_r_tilde_inf);
    out += ',' + io::format_double(row.mean_entropy);
    out += ',' + io::format_double(row.page_deviation);
    out += ',' + std::to_string(row.n_samples);
    for (const auto& [key, value] : row.extras) {
      out += ',' + io::format_double(value);
    }
    out += '\n';
  }
  return out;
}

std::string kl_csv(const std::vector<KlRow>& rows) {
  std::string out = "p_label,q_label,kl_nats\n";
  for (const KlRow& row : rows) {
    out += row.p_label + ',' + row.q_label + ',' + io::format_double(row.kl) + '\n';
  }
  return out;
}

std::string histogram_csv(const Histogram& hist) {
  std::string out = "bin_left,bin_right,density\n";
  const double width = hist.bin_width();
  for (int b = 0; b < hist.bins; ++b) {
    out += io::format_double(hist.lo + b * width);
    out += ',' + io::format_double(hist.lo + (b + 1) * width);
    out += ',' + io::format_double(hist.mass[b] / width);
    out += '\n';
  }
  out += io::format_double(hist.hi);
  out += ",inf," + io::format_double(hist.mass[hist.bins]) + '\n';
  return out;
}

Histogram histogram_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("bin_left", 0) != 0) {
    throw std::invalid_argument("histogram_from_csv: missing header");
  }
  std::vector<std::array<std::string, 3>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<std::string, 3> fields;
    std::size_t start = 0;
    for (int f = 0; f < 3; ++f) {
      const std::size_t comma = line.find(',', start);
      if (f < 2 && comma == std::string::npos) {
        throw std::invalid_argument("histogram_from_csv: malformed row");
      }
      fields[static_cast<std::size_t>(f)] =
          line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      start = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  if (rows.size() < 2) {
    throw std::invalid_argument("histogram_from_csv: too few rows");
  }
  Histogram hist;
  hist.bins = static_cast<int>(rows.size()) - 1;
  hist.lo = std::stod(rows.front()[0]);
  hist.hi = std::stod(rows[static_cast<std::size_t>(hist.bins) - 1][1]);
  hist.mass = Eigen::VectorXd::Zero(hist.bins + 1);
  const double width = hist.bin_width();
  for (int b = 0; b < hist.bins; ++b) {
    hist.mass[b] = std::stod(rows[static_cast<std::size_t>(b)][2]) * width;
  }
  if (rows.back()[1] != "inf") {
    throw std::invalid_argument("histogram_from_csv: missing overflow row");
  }
  hist.mass[hist.bins] = std::stod(rows.back()[2]);
  return hist;
}

}  // namespace mgspec
