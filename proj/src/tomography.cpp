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

#include "depolsim/tomography.hpp"

#include <cmath>
#include <stdexcept>

namespace depolsim {

namespace {

// Physicality floor for statistically estimated chi matrices.
constexpr double kEstimatedChiFloor = 1e-8;

int basis_index(MeasurementBasis basis) {
  switch (basis) {
    case MeasurementBasis::Z: return 0;
    case MeasurementBasis::X: return 1;
    case MeasurementBasis::Y: return 2;
  }
  throw std::invalid_argument("unknown measurement basis");
}

StateTomographyResult qst_from_raw(const Mat2& raw) {
  double clip = 0.0;
  const Mat2 projected = clip_psd_unit_trace(raw, &clip);
  return StateTomographyResult{DensityMatrix(projected), raw, clip,
                               (raw - projected).norm()};
}

// Hermitian basis of 4x4 matrices indexed a = 0..15: four diagonal units,
// then (E_mn + E_nm) and i(E_mn - E_nm) for m < n. chi = sum_a x_a H_a with
// real x spans exactly the Hermitian matrices.
Mat4 hermitian_basis_element(int a) {
  Mat4 h = Mat4::Zero();
  if (a < 4) {
    h(a, a) = 1.0;
    return h;
  }
  static constexpr std::array<std::pair<int, int>, 6> pairs = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  const auto [m, n] = pairs[static_cast<std::size_t>((a - 4) % 6)];
  if (a < 10) {
    h(m, n) = h(n, m) = 1.0;
  } else {
    h(m, n) = complexd(0.0, 1.0);
    h(n, m) = complexd(0.0, -1.0);
  }
  return h;
}

}  // namespace

const char* to_string(MeasurementBasis basis) {
  switch (basis) {
    case MeasurementBasis::Z: return "Z";
    case MeasurementBasis::X: return "X";
    case MeasurementBasis::Y: return "Y";
  }
  return "?";
}

std::optional<MeasurementBasis> basis_from_string(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  switch (name.front()) {
    case 'Z': return MeasurementBasis::Z;
    case 'X': return MeasurementBasis::X;
    case 'Y': return MeasurementBasis::Y;
    default: return std::nullopt;
  }
}

std::pair<StateLabel, StateLabel> basis_labels(MeasurementBasis basis) {
  switch (basis) {
    case MeasurementBasis::Z: return {StateLabel::H, StateLabel::V};
    case MeasurementBasis::X: return {StateLabel::D, StateLabel::A};
    case MeasurementBasis::Y: return {StateLabel::L, StateLabel::R};
  }
  throw std::invalid_argument("unknown measurement basis");
}

std::pair<Mat2, Mat2> basis_projectors(MeasurementBasis basis) {
  const auto [plus, minus] = basis_labels(basis);
  const Vec2 vp = pure_from_label(plus).vec();
  const Vec2 vm = pure_from_label(minus).vec();
  return {vp * vp.adjoint(), vm * vm.adjoint()};
}

std::pair<double, double> measurement_probabilities(const DensityMatrix& rho,
                                                    MeasurementBasis basis) {
  const auto [proj_plus, proj_minus] = basis_projectors(basis);
  return {(proj_plus * rho.matrix()).trace().real(),
          (proj_minus * rho.matrix()).trace().real()};
}

StateTomographyResult qst_from_plus_fractions(
    const std::array<double, 3>& plus_fraction) {
  const double rz = 2.0 * plus_fraction[0] - 1.0;
  const double rx = 2.0 * plus_fraction[1] - 1.0;
  const double ry = 2.0 * plus_fraction[2] - 1.0;
  Mat2 raw = 0.5 * (Mat2::Identity() + rx * pauli(1) + ry * pauli(2) +
                    rz * pauli(3));
  return qst_from_raw(raw);
}

StateTomographyResult qst_linear(std::span<const CountRecord> records) {
  std::array<std::int64_t, 3> plus{0, 0, 0};
  std::array<std::int64_t, 3> total{0, 0, 0};
  for (const CountRecord& rec : records) {
    if (rec.plus < 0 || rec.minus < 0) {
      throw std::invalid_argument("negative photon count");
    }
    const auto b = static_cast<std::size_t>(basis_index(rec.basis));
    plus[b] += rec.plus;
    total[b] += rec.total();
  }
  std::array<double, 3> fraction{};
  for (std::size_t b = 0; b < 3; ++b) {
    if (total[b] <= 0) {
      throw std::invalid_argument(
          "insufficient data: no counts in one or more bases");
    }
    fraction[b] = static_cast<double>(plus[b]) / static_cast<double>(total[b]);
  }
  return qst_from_plus_fractions(fraction);
}

StateTomographyResult qst_linear(std::span<const FrequencyRecord> records) {
  std::array<double, 3> fraction{};
  std::array<bool, 3> seen{false, false, false};
  for (const FrequencyRecord& rec : records) {
    const auto b = static_cast<std::size_t>(basis_index(rec.basis));
    fraction[b] = rec.plus_fraction;
    seen[b] = true;
  }
  if (!(seen[0] && seen[1] && seen[2])) {
    throw std::invalid_argument(
        "insufficient data: all three bases are required");
  }
  return qst_from_plus_fractions(fraction);
}

DensityMatrix psd_project(const Mat2& raw) {
  return DensityMatrix(clip_psd_unit_trace(raw));
}

ProcessTomographyResult qpt(std::span<const StateLabel> probes,
                            std::span<const DensityMatrix> outputs) {
  if (probes.size() != outputs.size()) {
    throw std::invalid_argument("one output estimate is required per probe");
  }
  if (probes.size() < 4) {
    throw std::invalid_argument(
        "incomplete probe set: at least four probe states are required");
  }

  // Real least-squares system: rows are (probe, output entry, re/im),
  // columns the 16 Hermitian chi parameters.
  const auto n_rows = static_cast<Eigen::Index>(8 * probes.size());
  Eigen::MatrixXd system(n_rows, 16);
  Eigen::VectorXd target(n_rows);

  for (std::size_t k = 0; k < probes.size(); ++k) {
    const Mat2 rho = density_from_pure(pure_from_label(probes[k])).matrix();
    for (int a = 0; a < 16; ++a) {
      const Mat4 h = hermitian_basis_element(a);
      Mat2 mapped = Mat2::Zero();
      for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
          if (h(m, n) != complexd(0.0, 0.0)) {
            mapped += h(m, n) * pauli(m) * rho * pauli(n);
          }
        }
      }
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const auto row = static_cast<Eigen::Index>(8 * k + 4 * i + 2 * j);
          system(row, a) = mapped(i, j).real();
          system(row + 1, a) = mapped(i, j).imag();
        }
      }
    }
    const Mat2 out = outputs[k].matrix();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const auto row = static_cast<Eigen::Index>(8 * k + 4 * i + 2 * j);
        target(row) = out(i, j).real();
        target(row + 1) = out(i, j).imag();
      }
    }
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(system);
  if (qr.rank() < 16) {
    throw std::invalid_argument(
        "incomplete probe set: probes do not span the qubit operator space");
  }
  const Eigen::VectorXd x = qr.solve(target);

  Mat4 raw = Mat4::Zero();
  for (int a = 0; a < 16; ++a) {
    raw += x(a) * hermitian_basis_element(a);
  }

  double clip = 0.0;
  const Mat4 projected = clip_psd_unit_trace(raw, &clip);
  return ProcessTomographyResult{ChiMatrix(projected, kEstimatedChiFloor), raw,
                                 clip, (raw - projected).norm(),
                                 (system * x - target).norm()};
}

ChiMatrix chi_psd_project(const Mat4& raw) {
  return ChiMatrix(clip_psd_unit_trace(raw), kEstimatedChiFloor);
}

}  // namespace depolsim
