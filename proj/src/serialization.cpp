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

#include "depolsim/serialization.hpp"

#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace depolsim {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

json complex_to_json(const complexd& z) {
  return json::array({round12(z.real()), round12(z.imag())});
}

complexd complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

template <typename Mat>
json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(row);
  }
  return rows;
}

template <typename Mat>
Mat matrix_from_json(const json& j) {
  Mat m;
  if (!j.is_array() || j.size() != static_cast<std::size_t>(m.rows())) {
    throw std::invalid_argument("matrix has the wrong number of rows");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(m.cols())) {
      throw std::invalid_argument("matrix has the wrong number of columns");
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

void reject_unknown_keys(const json& j,
                         std::initializer_list<const char*> known) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

}  // namespace

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double round12(double x) {
  return std::strtod(fmt12(x).c_str(), nullptr);
}

json to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

DensityMatrix density_from_json(const json& j) {
  return DensityMatrix(matrix_from_json<Mat2>(j));
}

json to_json(const BlochVector& r) {
  return json{{"rx", round12(r.rx)}, {"ry", round12(r.ry)},
              {"rz", round12(r.rz)}};
}

BlochVector bloch_from_json(const json& j) {
  return BlochVector{j.at("rx").get<double>(), j.at("ry").get<double>(),
                     j.at("rz").get<double>()};
}

json to_json(const ChiMatrix& chi) {
  json basis = json::array();
  for (const char* label : ChiMatrix::kBasisLabels) {
    basis.push_back(label);
  }
  return json{{"basis", basis}, {"matrix", matrix_to_json(chi.matrix())}};
}

ChiMatrix chi_from_json(const json& j) {
  return ChiMatrix(matrix_from_json<Mat4>(j.at("matrix")), 1e-8);
}

json to_json(const CountRecord& record) {
  return json{{"basis", to_string(record.basis)},
              {"plus", record.plus},
              {"minus", record.minus}};
}

CountRecord count_record_from_json(const json& j) {
  const auto basis = basis_from_string(j.at("basis").get<std::string>());
  if (!basis) {
    throw std::invalid_argument("unknown measurement basis in count record");
  }
  CountRecord record;
  record.basis = *basis;
  record.plus = j.at("plus").get<std::int64_t>();
  record.minus = j.at("minus").get<std::int64_t>();
  if (record.plus < 0 || record.minus < 0) {
    throw std::invalid_argument("negative photon count");
  }
  return record;
}

json to_json(const StateTomographyResult& result) {
  return json{{"estimate", to_json(result.estimate)},
              {"raw", matrix_to_json(result.raw)},
              {"diagnostics",
               {{"clip_magnitude", round12(result.clip_magnitude)},
                {"residual_norm", round12(result.residual_norm)}}}};
}

json to_json(const ProcessTomographyResult& result) {
  return json{{"estimate", to_json(result.estimate)},
              {"raw", matrix_to_json(result.raw)},
              {"diagnostics",
               {{"clip_magnitude", round12(result.clip_magnitude)},
                {"residual_norm", round12(result.residual_norm)},
                {"fit_residual", round12(result.fit_residual)}}}};
}

ExperimentConfig config_from_json(const json& j) {
  reject_unknown_keys(j, {"counts_per_setting", "rng_seed", "theta_grid_deg",
                          "p_grid", "infinite_n", "imperfections"});
  ExperimentConfig cfg = default_experiment_config();
  if (j.contains("counts_per_setting")) {
    cfg.counts_per_setting = j["counts_per_setting"].get<std::int64_t>();
  }
  if (j.contains("rng_seed")) {
    cfg.rng_seed = j["rng_seed"].get<std::uint64_t>();
  }
  if (j.contains("theta_grid_deg")) {
    cfg.theta_grid.clear();
    for (const json& v : j["theta_grid_deg"]) {
      cfg.theta_grid.push_back(v.get<double>() * kDegToRad);
    }
  }
  if (j.contains("p_grid")) {
    cfg.p_grid = j["p_grid"].get<std::vector<double>>();
  }
  if (j.contains("infinite_n")) {
    cfg.infinite_n = j["infinite_n"].get<bool>();
  }
  if (j.contains("imperfections")) {
    const json& imp = j["imperfections"];
    reject_unknown_keys(imp, {"pbs_extinction", "waveplate_jitter_deg",
                              "fiber_depolarization", "dark_fraction"});
    if (imp.contains("pbs_extinction")) {
      cfg.imperfections.pbs_extinction = imp["pbs_extinction"].get<double>();
    }
    if (imp.contains("waveplate_jitter_deg")) {
      cfg.imperfections.waveplate_jitter =
          imp["waveplate_jitter_deg"].get<double>() * kDegToRad;
    }
    if (imp.contains("fiber_depolarization")) {
      cfg.imperfections.fiber_d = imp["fiber_depolarization"].get<double>();
    }
    if (imp.contains("dark_fraction")) {
      cfg.imperfections.dark_fraction = imp["dark_fraction"].get<double>();
    }
  }
  cfg.validate();
  return cfg;
}

json to_json(const ExperimentConfig& cfg) {
  json theta = json::array();
  for (const double t : cfg.theta_grid) {
    theta.push_back(round12(t / kDegToRad));
  }
  json p_grid = json::array();
  for (const double p : cfg.p_grid) {
    p_grid.push_back(round12(p));
  }
  return json{
      {"counts_per_setting", cfg.counts_per_setting},
      {"rng_seed", cfg.rng_seed},
      {"theta_grid_deg", theta},
      {"p_grid", p_grid},
      {"infinite_n", cfg.infinite_n},
      {"imperfections",
       {{"pbs_extinction", round12(cfg.imperfections.pbs_extinction)},
        {"waveplate_jitter_deg",
         round12(cfg.imperfections.waveplate_jitter / kDegToRad)},
        {"fiber_depolarization", round12(cfg.imperfections.fiber_d)},
        {"dark_fraction", round12(cfg.imperfections.dark_fraction)}}}};
}

const char* const kSplittingScanCsvHeader =
    "theta_deg,p,mean_a,mean_b,"
    "a_H,a_V,a_D,a_A,a_R,a_L,"
    "b_H,b_V,b_D,b_A,b_R,b_L,"
    "counts_a_H,counts_a_V,counts_a_D,counts_a_A,counts_a_R,counts_a_L,"
    "counts_b_H,counts_b_V,counts_b_D,counts_b_A,counts_b_R,counts_b_L";

const char* const kBlochSweepCsvHeader = "label,p,rx,ry,rz,purity,fidelity";

void write_splitting_scan_csv(std::ostream& os,
                              std::span<const SplittingScanRow> rows) {
  os << kSplittingScanCsvHeader << "\n";
  for (const SplittingScanRow& row : rows) {
    os << fmt12(row.theta / kDegToRad) << ',' << fmt12(row.p) << ','
       << fmt12(row.mean_a) << ',' << fmt12(row.mean_b);
    for (const double v : row.normalized_a) os << ',' << fmt12(v);
    for (const double v : row.normalized_b) os << ',' << fmt12(v);
    for (const std::int64_t v : row.counts_a) os << ',' << v;
    for (const std::int64_t v : row.counts_b) os << ',' << v;
    os << "\n";
  }
}

void write_bloch_sweep_csv(std::ostream& os,
                           std::span<const BlochSweepPoint> points) {
  os << kBlochSweepCsvHeader << "\n";
  for (const BlochSweepPoint& point : points) {
    os << to_string(point.input) << ',' << fmt12(point.p) << ','
       << fmt12(point.bloch.rx) << ',' << fmt12(point.bloch.ry) << ','
       << fmt12(point.bloch.rz) << ',' << fmt12(point.purity) << ','
       << fmt12(point.fidelity_to_ideal) << "\n";
  }
}

void write_chi_csv(std::ostream& os, const ChiMatrix& chi) {
  os << "basis";
  for (const char* label : ChiMatrix::kBasisLabels) {
    os << ',' << label;
  }
  os << "\n";
  for (int i = 0; i < 4; ++i) {
    os << ChiMatrix::kBasisLabels[static_cast<std::size_t>(i)];
    for (int j = 0; j < 4; ++j) {
      os << ',' << fmt12(chi(i, j).real());
    }
    os << "\n";
  }
}

}  // namespace depolsim
