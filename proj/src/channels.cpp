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

#include "depolsim/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace depolsim {

namespace {

constexpr double kCompletenessTol = 1e-10;
constexpr double kChiHermitianTol = 1e-10;
constexpr double kChiTraceTol = 1e-10;

Mat2 kraus_sum(const std::vector<Mat2>& kraus) {
  Mat2 sum = Mat2::Zero();
  for (const Mat2& k : kraus) {
    sum += k.adjoint() * k;
  }
  return sum;
}

// Pauli expansion coefficients of a 2x2 operator, a_m = Tr[sigma_m K]/2.
std::array<complexd, 4> pauli_coefficients(const Mat2& k) {
  std::array<complexd, 4> a;
  for (int m = 0; m < 4; ++m) {
    a[static_cast<std::size_t>(m)] = 0.5 * (pauli(m) * k).trace();
  }
  return a;
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<Mat2> kraus, bool subnormalized)
    : kraus_(std::move(kraus)), subnormalized_(subnormalized) {
  if (kraus_.empty()) {
    throw std::invalid_argument("channel needs at least one Kraus operator");
  }
}

double QuantumChannel::completeness_residual() const {
  return (kraus_sum(kraus_) - Mat2::Identity()).cwiseAbs().maxCoeff();
}

ChiMatrix::ChiMatrix(const Mat4& m, double eig_floor) : m_(m) {
  if (hermiticity_residual(m) > kChiHermitianTol) {
    throw std::invalid_argument("chi matrix is not Hermitian");
  }
  if (std::abs(m.trace() - complexd(1.0, 0.0)) > kChiTraceTol) {
    throw std::invalid_argument("chi matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Mat4> es(hermitian_part(m));
  if (es.eigenvalues().minCoeff() < -eig_floor) {
    throw std::invalid_argument(
        "nonphysical process: chi eigenvalue " +
        std::to_string(es.eigenvalues().minCoeff()) + " below floor");
  }
}

QuantumChannel depolarizing_channel(ChannelParams params) {
  const double p = params.p;
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("degree of decoherence must lie in [0, 1]");
  }
  if (p == 0.0) {
    return QuantumChannel({Mat2::Identity()});
  }
  std::vector<Mat2> kraus;
  kraus.reserve(4);
  kraus.push_back(std::sqrt(1.0 - 0.75 * p) * pauli(0));
  for (int m = 1; m < 4; ++m) {
    kraus.push_back(std::sqrt(0.25 * p) * pauli(m));
  }
  return QuantumChannel(std::move(kraus));
}

DensityMatrix apply_channel(const QuantumChannel& ch,
                            const DensityMatrix& rho) {
  if (!ch.subnormalized() && ch.completeness_residual() > kCompletenessTol) {
    throw std::invalid_argument(
        "channel is not trace preserving (and not flagged sub-normalized)");
  }
  Mat2 out = Mat2::Zero();
  for (const Mat2& k : ch.kraus()) {
    out += k * rho.matrix() * k.adjoint();
  }
  return DensityMatrix(hermitian_part(out));
}

ChiMatrix chi_from_kraus(const QuantumChannel& ch) {
  Mat4 chi = Mat4::Zero();
  for (const Mat2& k : ch.kraus()) {
    const auto a = pauli_coefficients(k);
    for (int m = 0; m < 4; ++m) {
      for (int n = 0; n < 4; ++n) {
        chi(m, n) += a[static_cast<std::size_t>(m)] *
                     std::conj(a[static_cast<std::size_t>(n)]);
      }
    }
  }
  return ChiMatrix(hermitian_part(chi));
}

QuantumChannel kraus_from_chi(const ChiMatrix& chi) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(chi.matrix());
  std::vector<Mat2> kraus;
  for (int i = 0; i < 4; ++i) {
    const double lambda = es.eigenvalues()(i);
    if (lambda <= 0.0) {
      continue;  // eigenvalues above the floor but below zero carry no weight
    }
    Mat2 k = Mat2::Zero();
    for (int m = 0; m < 4; ++m) {
      k += es.eigenvectors()(m, i) * pauli(m);
    }
    kraus.push_back(std::sqrt(lambda) * k);
  }
  if (kraus.empty()) {
    throw std::invalid_argument("chi matrix has no positive weight");
  }
  return QuantumChannel(std::move(kraus));
}

double process_fidelity(const ChiMatrix& a, const ChiMatrix& b) {
  return uhlmann_fidelity(a.matrix(), b.matrix());
}

ChiMatrix ideal_depolarizing_chi(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("degree of decoherence must lie in [0, 1]");
  }
  Mat4 chi = Mat4::Zero();
  chi(0, 0) = 1.0 - 0.75 * p;
  chi(1, 1) = chi(2, 2) = chi(3, 3) = 0.25 * p;
  return ChiMatrix(chi);
}

ChannelValidationReport validate_channel(const QuantumChannel& ch) {
  Mat4 chi = Mat4::Zero();
  for (const Mat2& k : ch.kraus()) {
    const auto a = pauli_coefficients(k);
    for (int m = 0; m < 4; ++m) {
      for (int n = 0; n < 4; ++n) {
        chi(m, n) += a[static_cast<std::size_t>(m)] *
                     std::conj(a[static_cast<std::size_t>(n)]);
      }
    }
  }
  ChannelValidationReport report = validate_chi(chi);
  report.completeness_residual = ch.completeness_residual();
  return report;
}

ChannelValidationReport validate_chi(const Mat4& raw_chi) {
  ChannelValidationReport report;
  report.chi_hermiticity_residual = hermiticity_residual(raw_chi);
  Eigen::SelfAdjointEigenSolver<Mat4> es(hermitian_part(raw_chi));
  report.chi_min_eigenvalue = es.eigenvalues().minCoeff();
  return report;
}

}  // namespace depolsim
