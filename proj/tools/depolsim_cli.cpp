// Copyright 2026 The depolsim authors
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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "depolsim/montecarlo.hpp"
#include "depolsim/serialization.hpp"
#include "depolsim/svg.hpp"
#include "depolsim/validate.hpp"

namespace {

using namespace depolsim;

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitIoError = 2;
constexpr int kExitParameterError = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> counts;
  bool infinite_n = false;
  bool svg = false;
};

ExperimentConfig load_config(const CommonOptions& opts) {
  ExperimentConfig cfg = default_experiment_config();
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) {
      throw IoError("cannot open config file: " + opts.config_path);
    }
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw IoError("cannot parse config file: " + std::string(e.what()));
    }
    cfg = config_from_json(j);
  }
  if (opts.seed) {
    cfg.rng_seed = *opts.seed;
  }
  if (opts.counts) {
    cfg.counts_per_setting = *opts.counts;
  }
  if (opts.infinite_n) {
    cfg.infinite_n = true;
  }
  cfg.validate();
  return cfg;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open output file: " + path.string());
  }
  out << body;
  if (!out) {
    throw IoError("failed writing output file: " + path.string());
  }
}

std::filesystem::path prepare_out_dir(const CommonOptions& opts) {
  std::filesystem::path dir(opts.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory: " + dir.string());
  }
  return dir;
}

int cmd_split_scan(const CommonOptions& opts) {
  const ExperimentConfig cfg = load_config(opts);
  const auto out = prepare_out_dir(opts);
  const std::vector<SplittingScanRow> rows = run_splitting_scan(cfg);

  std::ostringstream csv;
  write_splitting_scan_csv(csv, rows);
  write_file(out / "splitting_scan.csv", csv.str());

  double max_deviation = 0.0;
  for (const SplittingScanRow& row : rows) {
    max_deviation =
        std::max(max_deviation, std::abs(row.mean_a - (1.0 - row.p)));
  }
  json summary{{"max_linearity_deviation", round12(max_deviation)},
               {"rows", rows.size()},
               {"config", to_json(cfg)}};
  write_file(out / "splitting_scan_summary.json", summary.dump(2) + "\n");

  if (opts.svg) {
    write_file(out / "splitting_scan.svg", svg_splitting_scan(rows));
  }
  std::cout << "splitting scan: " << rows.size()
            << " settings, max |mean_A - (1-p)| = " << fmt12(max_deviation)
            << "\n";
  return kExitOk;
}

int cmd_bloch_sweep(const CommonOptions& opts) {
  const ExperimentConfig cfg = load_config(opts);
  const auto out = prepare_out_dir(opts);
  const std::vector<BlochSweepPoint> points = run_depolarization_sweep(cfg);

  std::ostringstream csv;
  write_bloch_sweep_csv(csv, points);
  write_file(out / "bloch_sweep.csv", csv.str());
  write_file(out / "bloch_sweep.svg", svg_bloch_cross_sections(points));

  double min_fidelity = 1.0;
  for (const BlochSweepPoint& point : points) {
    min_fidelity = std::min(min_fidelity, point.fidelity_to_ideal);
  }
  std::cout << "bloch sweep: " << points.size()
            << " points, min fidelity to ideal = " << fmt12(min_fidelity)
            << "\n";
  return kExitOk;
}

int cmd_qpt(const CommonOptions& opts) {
  const ExperimentConfig cfg = load_config(opts);
  const auto out = prepare_out_dir(opts);

  json summary = json::array();
  for (const double p : cfg.p_grid) {
    const ProcessTomographyOutcome outcome =
        run_process_tomography_experiment(cfg, p);
    const std::string tag = fmt12(p);

    json chi_doc = to_json(outcome.tomography);
    chi_doc["p"] = round12(p);
    chi_doc["process_fidelity"] = round12(outcome.fidelity_to_ideal);
    write_file(out / ("chi_p" + tag + ".json"), chi_doc.dump(2) + "\n");

    std::ostringstream csv;
    write_chi_csv(csv, outcome.tomography.estimate);
    write_file(out / ("chi_p" + tag + ".csv"), csv.str());

    if (opts.svg) {
      write_file(out / ("chi_p" + tag + ".svg"),
                 svg_chi_bars(outcome.tomography.estimate));
    }
    summary.push_back({{"p", round12(p)},
                       {"process_fidelity",
                        round12(outcome.fidelity_to_ideal)}});
    std::cout << "qpt p=" << tag
              << ": process fidelity = " << fmt12(outcome.fidelity_to_ideal)
              << "\n";
  }
  write_file(out / "qpt_fidelity_summary.json",
             json{{"results", summary}, {"config", to_json(cfg)}}.dump(2) +
                 "\n");
  return kExitOk;
}

int cmd_validate(bool as_json, bool inject_hwp_sign_error) {
  InvariantSuiteOptions options;
  options.inject_hwp_sign_error = inject_hwp_sign_error;
  const std::vector<InvariantCheck> checks = run_invariant_suite(options);

  if (as_json) {
    json doc = json::array();
    for (const InvariantCheck& check : checks) {
      doc.push_back({{"name", check.name},
                     {"passed", check.passed},
                     {"residual", round12(check.residual)},
                     {"tolerance", round12(check.tolerance)},
                     {"detail", check.detail}});
    }
    std::cout << json{{"checks", doc}, {"all_passed", all_passed(checks)}}
                     .dump(2)
              << "\n";
  } else {
    for (const InvariantCheck& check : checks) {
      std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name
                << "  residual " << fmt12(check.residual) << " (tol "
                << fmt12(check.tolerance) << ")\n";
    }
  }
  return all_passed(checks) ? kExitOk : kExitInvariantFailure;
}

void add_common_options(CLI::App* cmd, CommonOptions& opts, bool with_svg) {
  cmd->add_option("--config", opts.config_path,
                  "JSON experiment config (angles in degrees)");
  cmd->add_option("--out", opts.out_dir, "output directory")
      ->default_val(".");
  cmd->add_option("--seed", opts.seed, "override the RNG seed");
  cmd->add_option("--counts", opts.counts,
                  "override counts per measurement setting");
  cmd->add_flag("--infinite-n", opts.infinite_n,
                "bypass sampling and use exact probabilities");
  if (with_svg) {
    cmd->add_flag("--svg", opts.svg, "also write SVG figures");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "depolsim: simulation of a controllable depolarizing operation for a "
      "photonic polarization qubit"};
  app.require_subcommand(1);

  CommonOptions split_opts;
  CLI::App* split = app.add_subcommand(
      "split-scan", "scan the Sagnac splitting ratio over theta");
  add_common_options(split, split_opts, true);

  CommonOptions bloch_opts;
  CLI::App* bloch = app.add_subcommand(
      "bloch-sweep", "sweep p and tomograph the depolarized outputs");
  add_common_options(bloch, bloch_opts, false);

  CommonOptions qpt_opts;
  CLI::App* qpt_cmd = app.add_subcommand(
      "qpt", "process tomography of the simulated apparatus per p");
  add_common_options(qpt_cmd, qpt_opts, true);

  bool validate_json = false;
  bool inject_hwp = false;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "run the analytic invariant suite (no sampling)");
  validate_cmd->add_flag("--json", validate_json, "machine-readable report");
  validate_cmd
      ->add_flag("--inject-hwp-sign-error", inject_hwp,
                 "testing hook: verify a miswired half-wave plate is caught")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameterError;
  }

  try {
    if (split->parsed()) {
      return cmd_split_scan(split_opts);
    }
    if (bloch->parsed()) {
      return cmd_bloch_sweep(bloch_opts);
    }
    if (qpt_cmd->parsed()) {
      return cmd_qpt(qpt_opts);
    }
    if (validate_cmd->parsed()) {
      return cmd_validate(validate_json, inject_hwp);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParameterError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitOk;
}
