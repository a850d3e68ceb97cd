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

// Times the Monte Carlo pipelines in the serial reference schedule and the
// OpenMP schedule and confirms the outputs are identical.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "depolsim/montecarlo.hpp"

namespace {

using namespace depolsim;
using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool identical) {
  std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both schedules run serially\n");
#endif

  ExperimentConfig cfg = default_experiment_config();
  cfg.counts_per_setting = 100000;
  cfg.rng_seed = 20260809;
  cfg.imperfections = mild_imperfections();

  {
    std::vector<SplittingScanRow> serial_rows;
    std::vector<SplittingScanRow> parallel_rows;
    const double serial_ms =
        time_ms([&] { serial_rows = run_splitting_scan(cfg, ExecMode::Serial); });
    const double parallel_ms = time_ms(
        [&] { parallel_rows = run_splitting_scan(cfg, ExecMode::Parallel); });
    bool identical = serial_rows.size() == parallel_rows.size();
    for (std::size_t i = 0; identical && i < serial_rows.size(); ++i) {
      identical = serial_rows[i].counts_a == parallel_rows[i].counts_a &&
                  serial_rows[i].counts_b == parallel_rows[i].counts_b &&
                  serial_rows[i].mean_a == parallel_rows[i].mean_a;
    }
    report("splitting scan", serial_ms, parallel_ms, identical);
  }

  {
    std::vector<BlochSweepPoint> serial_points;
    std::vector<BlochSweepPoint> parallel_points;
    const double serial_ms = time_ms(
        [&] { serial_points = run_depolarization_sweep(cfg, ExecMode::Serial); });
    const double parallel_ms = time_ms([&] {
      parallel_points = run_depolarization_sweep(cfg, ExecMode::Parallel);
    });
    bool identical = serial_points.size() == parallel_points.size();
    for (std::size_t i = 0; identical && i < serial_points.size(); ++i) {
      identical = serial_points[i].bloch.rx == parallel_points[i].bloch.rx &&
                  serial_points[i].bloch.ry == parallel_points[i].bloch.ry &&
                  serial_points[i].bloch.rz == parallel_points[i].bloch.rz;
    }
    report("depolarization sweep", serial_ms, parallel_ms, identical);
  }

  {
    std::optional<ProcessTomographyOutcome> serial_outcome;
    std::optional<ProcessTomographyOutcome> parallel_outcome;
    const double serial_ms = time_ms([&] {
      serial_outcome =
          run_process_tomography_experiment(cfg, 0.5, ExecMode::Serial);
    });
    const double parallel_ms = time_ms([&] {
      parallel_outcome =
          run_process_tomography_experiment(cfg, 0.5, ExecMode::Parallel);
    });
    const bool identical = serial_outcome->fidelity_to_ideal ==
                           parallel_outcome->fidelity_to_ideal;
    report("process tomography", serial_ms, parallel_ms, identical);
  }
  return 0;
}
