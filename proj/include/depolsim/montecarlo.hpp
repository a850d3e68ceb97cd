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

#ifndef DEPOLSIM_MONTECARLO_HPP
#define DEPOLSIM_MONTECARLO_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "depolsim/optics.hpp"
#include "depolsim/parallel.hpp"
#include "depolsim/rng.hpp"
#include "depolsim/tomography.hpp"

namespace depolsim {

//=========================================================================
// Simulated experiment runner
//=========================================================================
//
// Every pipeline distributes its work units (one per grid setting and input
// state) with for_each_index. A unit derives its RNG substream from the
// master seed and its grid coordinates and consumes variates in a fixed
// order (plate jitter first, then counts per basis Z, X, Y), so datasets
// are bit-identical between serial and parallel execution.

struct ImperfectionConfig {
  double pbs_extinction{0.0};
  double waveplate_jitter{0.0};  // sigma of per-setting plate offsets, rad
  double fiber_d{1.0};
  double dark_fraction{0.0};     // fraction of counts from the flat background

  bool ideal() const {
    return pbs_extinction == 0.0 && waveplate_jitter == 0.0 &&
           fiber_d == 1.0 && dark_fraction == 0.0;
  }
};

// Lab-grade defaults: 1% PBS leakage, 0.2 degree plate jitter, 99%
// effective fiber depolarization.
ImperfectionConfig mild_imperfections();

struct ExperimentConfig {
  std::int64_t counts_per_setting{10000};
  std::uint64_t rng_seed{0};
  std::vector<double> theta_grid;  // radians
  std::vector<double> p_grid;
  ImperfectionConfig imperfections{};
  bool infinite_n{false};  // bypass sampling, use exact Born probabilities

  // Throws std::invalid_argument on out-of-range values or empty grids.
  void validate() const;
};

// 19-point theta grid over [0, 45 deg], p grid {0, 0.25, 0.5, 0.75, 1},
// 10^4 counts per setting, ideal apparatus.
ExperimentConfig default_experiment_config();

//=========================================================================
// Counting statistics
//=========================================================================

// Draw the per-projector counts of one basis setting: plus is binomial in n
// with the Born probability (dark counts mix in a flat 1/2), minus = n-plus.
CountRecord simulate_counts(const DensityMatrix& rho, MeasurementBasis basis,
                            std::int64_t n, Rng& rng,
                            double dark_fraction = 0.0);

// Infinite-exposure limit of the same model.
FrequencyRecord exact_record(const DensityMatrix& rho, MeasurementBasis basis,
                             double dark_fraction = 0.0);

//=========================================================================
// Pipelines
//=========================================================================

// One theta setting of the splitter linearity scan. State columns follow
// kCanonicalLabels order (H, V, D, A, R, L).
struct SplittingScanRow {
  double theta{0.0};
  double p{0.0};
  std::array<double, 6> normalized_a{};
  std::array<double, 6> normalized_b{};
  std::array<std::int64_t, 6> counts_a{};
  std::array<std::int64_t, 6> counts_b{};
  double mean_a{0.0};
  double mean_b{0.0};
};

std::vector<SplittingScanRow> run_splitting_scan(
    const ExperimentConfig& cfg, ExecMode mode = ExecMode::Parallel);

// One (input state, p) point of the Bloch-contraction sweep, reconstructed
// by state tomography of the full apparatus output.
struct BlochSweepPoint {
  StateLabel input{StateLabel::H};
  double p{0.0};
  BlochVector bloch{};
  double purity{0.0};
  double fidelity_to_ideal{0.0};  // vs the exact depolarized input
};

std::vector<BlochSweepPoint> run_depolarization_sweep(
    const ExperimentConfig& cfg, ExecMode mode = ExecMode::Parallel);

// Probe the apparatus with {H, V, D, R}, tomograph each output, solve for
// chi and compare against the ideal depolarizing process at the same p.
struct ProcessTomographyOutcome {
  double p{0.0};
  ProcessTomographyResult tomography;
  double fidelity_to_ideal{0.0};
};

ProcessTomographyOutcome run_process_tomography_experiment(
    const ExperimentConfig& cfg, double p, ExecMode mode = ExecMode::Parallel);

//=========================================================================
// Bootstrap error bars
//=========================================================================

struct Interval {
  double lower{0.0};
  double upper{0.0};

  double width() const { return upper - lower; }
};

struct BootstrapResult {
  Interval fidelity;    // vs the supplied reference state
  Interval purity;
  Interval bloch_norm;
  int resamples{0};
};

// Multinomial resampling of the count records, re-running the state
// reconstruction per resample; intervals are the 2.5/97.5 percentiles.
// Requires resamples >= 100.
BootstrapResult bootstrap_errorbars(std::span<const CountRecord> records,
                                    const DensityMatrix& reference,
                                    int resamples, std::uint64_t seed,
                                    ExecMode mode = ExecMode::Parallel);

// Infinite-exposure records carry no sampling noise: every resample is the
// record itself and the intervals collapse to a point.
BootstrapResult bootstrap_errorbars(std::span<const FrequencyRecord> records,
                                    const DensityMatrix& reference,
                                    int resamples);

}  // namespace depolsim

#endif  // DEPOLSIM_MONTECARLO_HPP
