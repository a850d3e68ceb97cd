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

#ifndef DEPOLSIM_TOMOGRAPHY_HPP
#define DEPOLSIM_TOMOGRAPHY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "depolsim/channels.hpp"
#include "depolsim/qstate.hpp"

namespace depolsim {

//=========================================================================
// Measurement bases and count records
//=========================================================================

// The three mutually unbiased bases. The "plus" projector of each is the
// +1 Pauli eigenstate: Z -> (H, V), X -> (D, A), Y -> (L, R).
enum class MeasurementBasis { Z, X, Y };

inline constexpr std::array<MeasurementBasis, 3> kAllBases = {
    MeasurementBasis::Z, MeasurementBasis::X, MeasurementBasis::Y};

const char* to_string(MeasurementBasis basis);
std::optional<MeasurementBasis> basis_from_string(std::string_view name);

std::pair<StateLabel, StateLabel> basis_labels(MeasurementBasis basis);
std::pair<Mat2, Mat2> basis_projectors(MeasurementBasis basis);

// Photon counts behind the two projectors of one basis setting.
struct CountRecord {
  MeasurementBasis basis{MeasurementBasis::Z};
  std::int64_t plus{0};
  std::int64_t minus{0};

  std::int64_t total() const { return plus + minus; }
};

// Infinite-exposure record: the exact Born probability of the "plus"
// projector, used by the sampling-free analysis path.
struct FrequencyRecord {
  MeasurementBasis basis{MeasurementBasis::Z};
  double plus_fraction{0.0};
};

// Born-rule outcome probabilities (Tr[P+ rho], Tr[P- rho]).
std::pair<double, double> measurement_probabilities(const DensityMatrix& rho,
                                                    MeasurementBasis basis);

//=========================================================================
// State tomography (linear inversion + physicality projection)
//=========================================================================

struct StateTomographyResult {
  DensityMatrix estimate;
  Mat2 raw;                  // pre-projection linear-inversion estimate
  double clip_magnitude{0};  // most negative raw eigenvalue removed
  double residual_norm{0};   // Frobenius distance raw -> estimate
};

// Stokes inversion from per-basis plus fractions indexed Z, X, Y:
// r_z = 2 f_Z - 1, r_x = 2 f_X - 1, r_y = 2 f_Y - 1, then PSD projection.
StateTomographyResult qst_from_plus_fractions(
    const std::array<double, 3>& plus_fraction);

// Count-record front end. Records of the same basis are pooled; all three
// bases must be present with positive totals, otherwise an
// std::invalid_argument "insufficient data" error is thrown.
StateTomographyResult qst_linear(std::span<const CountRecord> records);

StateTomographyResult qst_linear(std::span<const FrequencyRecord> records);

// Nearest-by-eigenvalue-clip density matrix for a Hermitian raw estimate.
DensityMatrix psd_project(const Mat2& raw);

//=========================================================================
// Process tomography
//=========================================================================

struct ProcessTomographyResult {
  ChiMatrix estimate;
  Mat4 raw;
  double clip_magnitude{0};
  double residual_norm{0};
  double fit_residual{0};  // least-squares residual of the linear solve
};

inline constexpr std::array<StateLabel, 4> kDefaultProbeSet = {
    StateLabel::H, StateLabel::V, StateLabel::D, StateLabel::R};

// Solve E(rho_k) = sum_mn chi_mn sigma_m rho_k sigma_n for chi in the
// Hermitian parameterization (16 real unknowns), least squares when the
// probe set is overcomplete. Throws std::invalid_argument when the probe
// set does not span the qubit operator space.
ProcessTomographyResult qpt(std::span<const StateLabel> probes,
                            std::span<const DensityMatrix> outputs);

// Clip + trace renormalization for a Hermitian raw chi.
ChiMatrix chi_psd_project(const Mat4& raw);

}  // namespace depolsim

#endif  // DEPOLSIM_TOMOGRAPHY_HPP
