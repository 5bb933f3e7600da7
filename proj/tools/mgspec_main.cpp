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

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mgspec/experiments.hpp"
#include "mgspec/fermion.hpp"
#include "mgspec/io.hpp"
#include "mgspec/parallel.hpp"
#include "mgspec/pauli.hpp"
#include "mgspec/plot.hpp"

namespace {

namespace fs = std::filesystem;
using namespace mgspec;

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitCheckFailure = 2;

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::string out_dir = "out";
  int max_qubits = 20;
};

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

int column_index(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int cmd_run(const std::string& config_path, const GlobalFlags& flags) {
  ExperimentConfig config = config_from_file(config_path);
  if (flags.seed) config.master_seed = *flags.seed;

  fs::create_directories(flags.out_dir);
  const std::string records_path = flags.out_dir + "/records.jsonl";
  std::ofstream records_out(records_path, std::ios::binary);
  if (!records_out) {
    throw std::invalid_argument("cannot write " + records_path);
  }

  RunOptions options;
  options.threads = flags.threads;
  options.max_qubits = flags.max_qubits;
  options.log = [](const std::string& line) { std::fprintf(stderr, "[mgspec] %s\n", line.c_str()); };
  options.record_sink = [&records_out](const RunRecord& record) {
    records_out << to_jsonl(record) << '\n';
    records_out.flush();
  };

  const ExperimentResult result = run_experiment(config, options);

  io::write_file(flags.out_dir + "/config.json", config.canonical_json() + "\n");
  if (!result.summary.empty()) {
    io::write_file(flags.out_dir + "/summary.csv", summary_csv(result.summary));
  }
  for (const auto& [label, hist] : result.histograms) {
    io::write_file(flags.out_dir + "/hist_" + label + ".csv", histogram_csv(hist));
  }
  if (!result.kl_rows.empty()) {
    io::write_file(flags.out_dir + "/kl.csv", kl_csv(result.kl_rows));
  }
  if (!result.calibration.empty()) {
    io::write_file(flags.out_dir + "/calibration.csv", calibration_csv(result.calibration));
  }
  for (const std::string& warning : result.warnings) {
    std::fprintf(stderr, "[mgspec] warning: %s\n", warning.c_str());
  }
  if (!result.warnings.empty()) {
    std::string text;
    for (const std::string& warning : result.warnings) text += warning + '\n';
    io::write_file(flags.out_dir + "/warnings.txt", text);
  }
  std::fprintf(stderr, "[mgspec] wrote %zu records to %s\n", result.records.size(), flags.out_dir.c_str());

  if (config.experiment == ExperimentKind::Calibration) {
    for (const CalibrationRow& row : result.calibration) {
      std::printf("%-26s value=%.6f expected=%.4f tol=%.4g %s\n", row.name.c_str(), row.value,
                  row.expected, row.tolerance, row.pass ? "PASS" : "FAIL");
    }
    for (const CalibrationRow& row : result.calibration) {
      if (!row.pass) return kExitCheckFailure;
    }
  }
  return kExitOk;
}

int cmd_calibrate(const GlobalFlags& flags) {
  fs::create_directories(flags.out_dir);
  const std::uint64_t seed = flags.seed.value_or(1);
  const CalibrationSizes sizes;
  const std::vector<CalibrationRow> rows = run_calibration(seed, sizes, flags.threads);
  io::write_file(flags.out_dir + "/calibration.csv", calibration_csv(rows));
  bool all_pass = true;
  for (const CalibrationRow& row : rows) {
    std::printf("%-26s value=%.6f expected=%.4f tol=%.4g %s\n", row.name.c_str(), row.value,
                row.expected, row.tolerance, row.pass ? "PASS" : "FAIL");
    all_pass = all_pass && row.pass;
  }
  return all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_fit(const std::string& csv_path, double target, const std::string& column) {
  const auto rows = parse_csv(io::read_file(csv_path));
  if (rows.size() < 2) {
    throw std::invalid_argument("fit: csv has no data rows");
  }
  const auto& header = rows.front();
  const int n_col = column_index(header, "num_qubits");
  const int y_col = column_index(header, column);
  if (n_col < 0 || y_col < 0) {
    throw std::invalid_argument("fit: csv lacks num_qubits/" + column + " columns");
  }
  // Group rows by everything that is not num_qubits or a statistic.
  const std::vector<std::string> group_cols = {"num_swaps", "input_kind", "block_k", "conjugation"};
  std::map<std::string, std::vector<std::pair<double, double>>> groups;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::string key;
    for (const std::string& col : group_cols) {
      const int idx = column_index(header, col);
      if (idx >= 0) key += rows[r][static_cast<std::size_t>(idx)] + "|";
    }
    const double n = std::stod(rows[r][static_cast<std::size_t>(n_col)]);
    const double value = std::stod(rows[r][static_cast<std::size_t>(y_col)]);
    const double deviation = target - value;
    if (deviation > 0.0) {
      groups[key].emplace_back(n, deviation);
    } else {
      std::fprintf(stderr, "fit: skipping N=%g (value %.4f is not below target %.4f)\n", n, value, target);
    }
  }
  bool fitted = false;
  for (const auto& [key, points] : groups) {
    if (points.size() < 2) continue;
    const FitResult fit = fit_exponential(points);
    std::printf("group %-30s r0=%.8g gamma=%.8g residual=%.3g points=%zu\n", key.c_str(), fit.r0,
                fit.gamma, fit.residual, points.size());
    fitted = true;
  }
  if (!fitted) {
    throw std::invalid_argument("fit: no group has at least two usable points");
  }
  return kExitOk;
}

int cmd_plot(const std::string& csv_path, const std::string& out_path, const std::string& y_column) {
  const std::string text = io::read_file(csv_path);
  const auto rows = parse_csv(text);
  if (rows.empty()) {
    throw std::invalid_argument("plot: empty csv");
  }
  std::string svg;
  if (!rows.front().empty() && rows.front().front() == "bin_left") {
    const Histogram hist = histogram_from_csv(text);
    svg = histogram_svg(hist,
                        {{"Wigner-Dyson (GUE)", ReferenceKind::WignerDysonGue},
                         {"Poisson", ReferenceKind::Poisson}},
                        fs::path(csv_path).stem().string());
  } else {
    const auto& header = rows.front();
    const int n_col = column_index(header, "num_qubits");
    const int y_col = column_index(header, y_column);
    if (n_col < 0 || y_col < 0) {
      throw std::invalid_argument("plot: csv lacks num_qubits/" + y_column + " columns");
    }
    int err_col = -1;
    if (y_column.rfind("mean_", 0) == 0) {
      err_col = column_index(header, "std_" + y_column.substr(5));
    }
    const std::vector<std::string> group_cols = {"num_swaps", "input_kind", "block_k", "conjugation"};
    std::map<std::string, PlotSeries> series;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      std::string key;
      for (const std::string& col : group_cols) {
        const int idx = column_index(header, col);
        if (idx >= 0) key += col + "=" + rows[r][static_cast<std::size_t>(idx)] + " ";
      }
      PlotSeries& s = series[key];
      s.label = key;
      s.x.push_back(std::stod(rows[r][static_cast<std::size_t>(n_col)]));
      s.y.push_back(std::stod(rows[r][static_cast<std::size_t>(y_col)]));
      if (err_col >= 0) s.yerr.push_back(std::stod(rows[r][static_cast<std::size_t>(err_col)]));
    }
    std::vector<PlotSeries> list;
    list.reserve(series.size());
    for (auto& [key, s] : series) list.push_back(std::move(s));
    svg = line_plot_svg(list, fs::path(csv_path).stem().string(), "N", y_column);
  }
  io::write_file(out_path, svg);
  std::fprintf(stderr, "[mgspec] wrote %s\n", out_path.c_str());
  return kExitOk;
}

int cmd_oracle(int num_circuits, int layers, const GlobalFlags& flags) {
  const std::uint64_t seed = flags.seed.value_or(1);
  const int max_n = std::min(flags.max_qubits, 10);
  double worst = 0.0;
  for (int i = 0; i < num_circuits; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    const int n = 4 + 2 * static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>((max_n - 4) / 2 + 1)));
    const Circuit circuit = brickwork(n, layers, BrickworkKind::Matchgate, rng);

    Statevector psi(n);
    apply(psi, circuit);
    CovarianceMatrix cov = CovarianceMatrix::vacuum(n);
    evolve(cov, circuit);

    for (int k = 1; k <= n; ++k) {
      double z_state = 0.0;
      const Eigen::Index mask = Eigen::Index(1) << (n - k);
      for (Eigen::Index idx = 0; idx < psi.dim(); ++idx) {
        const double p = std::norm(psi.amplitudes()[idx]);
        z_state += (idx & mask) ? -p : p;
      }
      worst = std::max(worst, std::abs(z_state - z_expectation(cov, k)));
    }
  }
  std::printf("covariance vs statevector: %d circuits, worst |<Z>| mismatch = %.3g %s\n", num_circuits,
              worst, worst <= 1e-10 ? "PASS" : "FAIL");

  bool swap_rejected = false;
  try {
    matchgate_rotation(LocalUnitary{1, swap_gate()});
  } catch (const NonGaussianGateError&) {
    swap_rejected = true;
  }
  std::printf("SWAP rejected as non-Gaussian: %s\n", swap_rejected ? "PASS" : "FAIL");
  return (worst <= 1e-10 && swap_rejected) ? kExitOk : kExitCheckFailure;
}

int cmd_weight(const std::string& name, int num_qubits) {
  const ConjugationKind kind = conjugation_from_name(name);
  const Circuit circuit = conjugation_circuit(kind, num_qubits);
  std::printf("%d\n", fermionic_weight(circuit, num_qubits));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brickwork matchgate circuits and entanglement-spectrum statistics"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  std::uint64_t seed_value = 0;
  bool seed_given = false;
  app.add_option("--seed", seed_value, "master seed override")->each([&](const std::string&) { seed_given = true; });
  app.add_option("--threads", flags.threads, "worker threads (0 = hardware)");
  app.add_option("--out-dir", flags.out_dir, "output directory")->capture_default_str();
  app.add_option("--max-qubits", flags.max_qubits, "resource guard on system size")->capture_default_str();

  std::string config_path;
  auto* run = app.add_subcommand("run", "run an experiment config");
  run->add_option("config", config_path, "experiment config JSON")->required();

  auto* calibrate = app.add_subcommand("calibrate", "Poisson/GUE/Haar reference suite");

  std::string fit_csv;
  double fit_target = kWignerDysonRTilde;
  std::string fit_column = "mean_r_tilde_inf";
  auto* fit = app.add_subcommand("fit", "exponential fit of deviations from a target");
  fit->add_option("summary", fit_csv, "summary.csv produced by run")->required();
  fit->add_option("--target", fit_target, "reference value")->capture_default_str();
  fit->add_option("--column", fit_column, "value column")->capture_default_str();

  std::string plot_csv;
  std::string plot_out = "plot.svg";
  std::string plot_y = "mean_r_tilde_inf";
  auto* plot = app.add_subcommand("plot", "render a summary or histogram csv as SVG");
  plot->add_option("csv", plot_csv, "summary.csv or hist_*.csv")->required();
  plot->add_option("-o,--out", plot_out, "output SVG path")->capture_default_str();
  plot->add_option("--y", plot_y, "summary column to plot")->capture_default_str();

  int oracle_circuits = 100;
  int oracle_layers = 20;
  auto* oracle = app.add_subcommand("oracle", "free-fermion cross-validation suite");
  oracle->add_option("--num-circuits", oracle_circuits, "circuits to compare")->capture_default_str();
  oracle->add_option("--layers", oracle_layers, "brickwork layers per circuit")->capture_default_str();

  std::string weight_name;
  int weight_qubits = 0;
  auto* weight = app.add_subcommand("weight", "fermionic weight of a conjugation circuit");
  weight->add_option("circuit", weight_name, "one of C1, C2, C3, C4")->required();
  weight->add_option("num_qubits", weight_qubits, "system size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kExitOk : kExitConfigError;
  }

  if (seed_given) flags.seed = seed_value;

  try {
    if (run->parsed()) return cmd_run(config_path, flags);
    if (calibrate->parsed()) return cmd_calibrate(flags);
    if (fit->parsed()) return cmd_fit(fit_csv, fit_target, fit_column);
    if (plot->parsed()) return cmd_plot(plot_csv, plot_out, plot_y);
    if (oracle->parsed()) return cmd_oracle(oracle_circuits, oracle_layers, flags);
    if (weight->parsed()) return cmd_weight(weight_name, weight_qubits);
  } catch (const std::invalid_argument& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitConfigError;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitConfigError;
  }
  return kExitConfigError;
}
