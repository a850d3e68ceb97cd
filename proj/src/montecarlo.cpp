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

#include "depolsim/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "depolsim/channels.hpp"

namespace depolsim {

namespace {

// Substream tags keep the pipelines' random draws disjoint.
enum StreamTag : std::uint64_t {
  kTagSplitScan = 1,
  kTagBlochSweep = 2,
  kTagProcessTomography = 3,
  kTagBootstrap = 4,
};

const std::array<DensityMatrix, 6>& canonical_states() {
  static const std::array<DensityMatrix, 6> states = [] {
    return std::array<DensityMatrix, 6>{
        density_from_pure(pure_from_label(StateLabel::H)),
        density_from_pure(pure_from_label(StateLabel::V)),
        density_from_pure(pure_from_label(StateLabel::D)),
        density_from_pure(pure_from_label(StateLabel::A)),
        density_from_pure(pure_from_label(StateLabel::R)),
        density_from_pure(pure_from_label(StateLabel::L))};
  }();
  return states;
}

SagnacImperfections draw_sagnac_imperfections(const ImperfectionConfig& imp,
                                              Rng& rng) {
  SagnacImperfections sagnac;
  sagnac.pbs_extinction = imp.pbs_extinction;
  if (imp.waveplate_jitter > 0.0) {
    sagnac.plate_offset_cw = rng.normal(0.0, imp.waveplate_jitter);
    sagnac.plate_offset_ccw = rng.normal(0.0, imp.waveplate_jitter);
  }
  return sagnac;
}

double effective_plus_probability(double born_plus, double dark_fraction) {
  return (1.0 - dark_fraction) * born_plus + 0.5 * dark_fraction;
}

// Shared per-unit reconstruction: tomograph rho through the configured
// counting model. Draw order: one binomial per basis in Z, X, Y order.
StateTomographyResult tomograph_state(const DensityMatrix& rho,
                                      const ExperimentConfig& cfg, Rng& rng) {
  if (cfg.infinite_n) {
    std::array<FrequencyRecord, 3> records;
    for (std::size_t b = 0; b < 3; ++b) {
      records[b] = exact_record(rho, kAllBases[b],
                                cfg.imperfections.dark_fraction);
    }
    return qst_linear(std::span<const FrequencyRecord>(records));
  }
  std::array<CountRecord, 3> records;
  for (std::size_t b = 0; b < 3; ++b) {
    records[b] = simulate_counts(rho, kAllBases[b], cfg.counts_per_setting,
                                 rng, cfg.imperfections.dark_fraction);
  }
  return qst_linear(std::span<const CountRecord>(records));
}

double percentile(std::vector<double> sorted_values, double q) {
  std::sort(sorted_values.begin(), sorted_values.end());
  const double pos = q * static_cast<double>(sorted_values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double frac = pos - std::floor(pos);
  return (1.0 - frac) * sorted_values[lo] + frac * sorted_values[hi];
}

Interval percentile_interval(const std::vector<double>& values) {
  return Interval{percentile(values, 0.025), percentile(values, 0.975)};
}

}  // namespace

ImperfectionConfig mild_imperfections() {
  ImperfectionConfig imp;
  imp.pbs_extinction = 0.01;
  imp.waveplate_jitter = 0.2 * std::numbers::pi / 180.0;
  imp.fiber_d = 0.99;
  imp.dark_fraction = 0.0;
  return imp;
}

void ExperimentConfig::validate() const {
  if (counts_per_setting < 1) {
    throw std::invalid_argument("counts_per_setting must be at least 1");
  }
  if (theta_grid.empty()) {
    throw std::invalid_argument("theta grid is empty");
  }
  if (p_grid.empty()) {
    throw std::invalid_argument("p grid is empty");
  }
  for (const double p : p_grid) {
    if (p < 0.0 || p > 1.0) {
      throw std::invalid_argument("p grid entries must lie in [0, 1]");
    }
  }
  const ImperfectionConfig& imp = imperfections;
  if (imp.pbs_extinction < 0.0 || imp.pbs_extinction > 1.0 ||
      imp.fiber_d < 0.0 || imp.fiber_d > 1.0 || imp.dark_fraction < 0.0 ||
      imp.dark_fraction > 1.0 || imp.waveplate_jitter < 0.0) {
    throw std::invalid_argument("imperfection parameters out of range");
  }
}

ExperimentConfig default_experiment_config() {
  ExperimentConfig cfg;
  cfg.counts_per_setting = 10000;
  cfg.rng_seed = 0;
  cfg.theta_grid.resize(19);
  for (std::size_t i = 0; i < cfg.theta_grid.size(); ++i) {
    cfg.theta_grid[i] =
        static_cast<double>(i) * 2.5 * std::numbers::pi / 180.0;
  }
  cfg.p_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  return cfg;
}

CountRecord simulate_counts(const DensityMatrix& rho, MeasurementBasis basis,
                            std::int64_t n, Rng& rng, double dark_fraction) {
  if (n < 1) {
    throw std::invalid_argument("need at least one exposure");
  }
  const auto [born_plus, born_minus] = measurement_probabilities(rho, basis);
  (void)born_minus;
  const double p_plus = effective_plus_probability(born_plus, dark_fraction);
  CountRecord record;
  record.basis = basis;
  record.plus = rng.binomial(n, p_plus);
  record.minus = n - record.plus;
  return record;
}

FrequencyRecord exact_record(const DensityMatrix& rho, MeasurementBasis basis,
                             double dark_fraction) {
  const auto [born_plus, born_minus] = measurement_probabilities(rho, basis);
  (void)born_minus;
  return FrequencyRecord{basis,
                         effective_plus_probability(born_plus, dark_fraction)};
}

std::vector<SplittingScanRow> run_splitting_scan(const ExperimentConfig& cfg,
                                                 ExecMode mode) {
  cfg.validate();
  const std::size_t n_theta = cfg.theta_grid.size();
  std::vector<SplittingScanRow> rows(n_theta);
  for (std::size_t t = 0; t < n_theta; ++t) {
    rows[t].theta = cfg.theta_grid[t];
    rows[t].p = splitting_parameter(cfg.theta_grid[t]);
  }

  for_each_index(n_theta * 6, mode, [&](std::size_t unit) {
    const std::size_t t = unit / 6;
    const std::size_t s = unit % 6;
    Rng rng(substream_seed(cfg.rng_seed, kTagSplitScan, t, s));

    SagnacConfig sagnac{cfg.theta_grid[t],
                        draw_sagnac_imperfections(cfg.imperfections, rng)};
    const SplitOutput split = sagnac_split(canonical_states()[s], sagnac);

    SplittingScanRow& row = rows[t];
    if (cfg.infinite_n) {
      row.normalized_a[s] = split.weight_a;
      row.normalized_b[s] = split.weight_b;
    } else {
      const double p_a = effective_plus_probability(
          split.weight_a, cfg.imperfections.dark_fraction);
      const std::int64_t n = cfg.counts_per_setting;
      row.counts_a[s] = rng.binomial(n, p_a);
      row.counts_b[s] = n - row.counts_a[s];
      row.normalized_a[s] =
          static_cast<double>(row.counts_a[s]) / static_cast<double>(n);
      row.normalized_b[s] =
          static_cast<double>(row.counts_b[s]) / static_cast<double>(n);
    }
  });

  for (SplittingScanRow& row : rows) {
    double sum_a = 0.0;
    double sum_b = 0.0;
    for (std::size_t s = 0; s < 6; ++s) {
      sum_a += row.normalized_a[s];
      sum_b += row.normalized_b[s];
    }
    row.mean_a = sum_a / 6.0;
    row.mean_b = sum_b / 6.0;
  }
  return rows;
}

std::vector<BlochSweepPoint> run_depolarization_sweep(
    const ExperimentConfig& cfg, ExecMode mode) {
  cfg.validate();
  const std::size_t n_p = cfg.p_grid.size();
  std::vector<BlochSweepPoint> points(n_p * 6);

  for_each_index(points.size(), mode, [&](std::size_t unit) {
    const std::size_t pi = unit / 6;
    const std::size_t s = unit % 6;
    const double p = cfg.p_grid[pi];
    Rng rng(substream_seed(cfg.rng_seed, kTagBlochSweep, pi, s));

    ApparatusConfig apparatus;
    apparatus.theta = theta_for_p(p);
    apparatus.sagnac = draw_sagnac_imperfections(cfg.imperfections, rng);
    apparatus.fiber_d = cfg.imperfections.fiber_d;

    const DensityMatrix& input = canonical_states()[s];
    const DensityMatrix output = full_apparatus(input, apparatus);
    const StateTomographyResult qst = tomograph_state(output, cfg, rng);

    const DensityMatrix ideal =
        apply_channel(depolarizing_channel({p}), input);

    BlochSweepPoint& point = points[unit];
    point.input = kCanonicalLabels[s];
    point.p = p;
    point.bloch = bloch_from_density(qst.estimate);
    point.purity = purity(qst.estimate);
    point.fidelity_to_ideal = state_fidelity(qst.estimate, ideal);
  });
  return points;
}

ProcessTomographyOutcome run_process_tomography_experiment(
    const ExperimentConfig& cfg, double p, ExecMode mode) {
  cfg.validate();
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("degree of decoherence must lie in [0, 1]");
  }
  const std::uint64_t p_key = std::bit_cast<std::uint64_t>(p);

  std::vector<DensityMatrix> outputs(kDefaultProbeSet.size(),
                                     DensityMatrix::maximally_mixed());
  for_each_index(kDefaultProbeSet.size(), mode, [&](std::size_t k) {
    Rng rng(substream_seed(cfg.rng_seed, kTagProcessTomography, p_key, k));

    ApparatusConfig apparatus;
    apparatus.theta = theta_for_p(p);
    apparatus.sagnac = draw_sagnac_imperfections(cfg.imperfections, rng);
    apparatus.fiber_d = cfg.imperfections.fiber_d;

    const DensityMatrix input =
        density_from_pure(pure_from_label(kDefaultProbeSet[k]));
    const DensityMatrix output = full_apparatus(input, apparatus);
    outputs[k] = tomograph_state(output, cfg, rng).estimate;
  });

  ProcessTomographyOutcome outcome{
      p, qpt(kDefaultProbeSet, outputs), 0.0};
  outcome.fidelity_to_ideal =
      process_fidelity(outcome.tomography.estimate, ideal_depolarizing_chi(p));
  return outcome;
}

BootstrapResult bootstrap_errorbars(std::span<const CountRecord> records,
                                    const DensityMatrix& reference,
                                    int resamples, std::uint64_t seed,
                                    ExecMode mode) {
  if (resamples < 100) {
    throw std::invalid_argument("need at least 100 bootstrap resamples");
  }
  const auto n = static_cast<std::size_t>(resamples);
  std::vector<double> fidelities(n);
  std::vector<double> purities(n);
  std::vector<double> norms(n);

  std::vector<CountRecord> base(records.begin(), records.end());
  for_each_index(n, mode, [&](std::size_t r) {
    Rng rng(substream_seed(seed, kTagBootstrap, r));
    std::vector<CountRecord> resampled(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      const std::int64_t total = base[i].total();
      const double f = total > 0 ? static_cast<double>(base[i].plus) /
                                       static_cast<double>(total)
                                 : 0.0;
      resampled[i].basis = base[i].basis;
      resampled[i].plus = rng.binomial(total, f);
      resampled[i].minus = total - resampled[i].plus;
    }
    const StateTomographyResult qst =
        qst_linear(std::span<const CountRecord>(resampled));
    fidelities[r] = state_fidelity(qst.estimate, reference);
    purities[r] = purity(qst.estimate);
    norms[r] = bloch_from_density(qst.estimate).norm();
  });

  return BootstrapResult{percentile_interval(fidelities),
                         percentile_interval(purities),
                         percentile_interval(norms), resamples};
}

BootstrapResult bootstrap_errorbars(std::span<const FrequencyRecord> records,
                                    const DensityMatrix& reference,
                                    int resamples) {
  if (resamples < 100) {
    throw std::invalid_argument("need at least 100 bootstrap resamples");
  }
  const StateTomographyResult qst = qst_linear(records);
  const double f = state_fidelity(qst.estimate, reference);
  const double pur = purity(qst.estimate);
  const double norm = bloch_from_density(qst.estimate).norm();
  return BootstrapResult{Interval{f, f}, Interval{pur, pur},
                         Interval{norm, norm}, resamples};
}

}  // namespace depolsim
