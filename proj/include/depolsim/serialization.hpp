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

#ifndef DEPOLSIM_SERIALIZATION_HPP
#define DEPOLSIM_SERIALIZATION_HPP

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "depolsim/channels.hpp"
#include "depolsim/montecarlo.hpp"
#include "depolsim/qstate.hpp"
#include "depolsim/tomography.hpp"

namespace depolsim {

using json = nlohmann::json;

// All floating-point output is written at 12 significant digits.
std::string fmt12(double x);
double round12(double x);

//-------------------------------------------------------------------------
// JSON schemas
//-------------------------------------------------------------------------

// Row-major array of [re, im] pairs.
json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);

// {"rx": ..., "ry": ..., "rz": ...}
json to_json(const BlochVector& r);
BlochVector bloch_from_json(const json& j);

// {"basis": ["I","X","Y","Z"], "matrix": 4x4 of [re, im]}
json to_json(const ChiMatrix& chi);
ChiMatrix chi_from_json(const json& j);

// {"basis": "Z", "plus": n, "minus": n}
json to_json(const CountRecord& record);
CountRecord count_record_from_json(const json& j);

json to_json(const StateTomographyResult& result);
json to_json(const ProcessTomographyResult& result);

// Config files carry angles in degrees (theta_grid_deg,
// waveplate_jitter_deg); they are converted to radians on load. Unknown
// keys are rejected. Missing keys keep their defaults.
ExperimentConfig config_from_json(const json& j);
json to_json(const ExperimentConfig& cfg);

//-------------------------------------------------------------------------
// CSV datasets
//-------------------------------------------------------------------------

extern const char* const kSplittingScanCsvHeader;
extern const char* const kBlochSweepCsvHeader;

void write_splitting_scan_csv(std::ostream& os,
                              std::span<const SplittingScanRow> rows);
void write_bloch_sweep_csv(std::ostream& os,
                           std::span<const BlochSweepPoint> points);
// Real part of chi as a labeled 4x4 table.
void write_chi_csv(std::ostream& os, const ChiMatrix& chi);

}  // namespace depolsim

#endif  // DEPOLSIM_SERIALIZATION_HPP
