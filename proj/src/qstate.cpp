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

#include "depolsim/qstate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace depolsim {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenvalueFloor = 1e-10;
constexpr double kBlochNormSlack = 1e-10;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

const char* to_string(StateLabel label) {
  switch (label) {
    case StateLabel::H: return "H";
    case StateLabel::V: return "V";
    case StateLabel::D: return "D";
    case StateLabel::A: return "A";
    case StateLabel::R: return "R";
    case StateLabel::L: return "L";
  }
  return "?";
}

std::optional<StateLabel> state_label_from_string(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  switch (name.front()) {
    case 'H': return StateLabel::H;
    case 'V': return StateLabel::V;
    case 'D': return StateLabel::D;
    case 'A': return StateLabel::A;
    case 'R': return StateLabel::R;
    case 'L': return StateLabel::L;
    default: return std::nullopt;
  }
}

const Mat2& pauli(int k) {
  static const std::array<Mat2, 4> sigma = [] {
    std::array<Mat2, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, complexd(0, -1), complexd(0, 1), 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(k));
}

double JonesVector::norm2() const {
  return std::norm(amp_h) + std::norm(amp_v);
}

bool JonesVector::is_normalized(double tol) const {
  return std::abs(norm2() - 1.0) <= tol;
}

JonesVector JonesVector::normalized() const {
  const double n = std::sqrt(norm2());
  if (n <= 0.0) {
    throw std::invalid_argument("cannot normalize a zero Jones vector");
  }
  return {amp_h / n, amp_v / n};
}

double BlochVector::norm() const {
  return std::sqrt(rx * rx + ry * ry + rz * rz);
}

DensityMatrix::DensityMatrix(const Mat2& m) : m_(m) {
  if (hermiticity_residual(m) > kHermitianTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - complexd(1.0, 0.0)) > kTraceTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Mat2> es(hermitian_part(m));
  if (es.eigenvalues().minCoeff() < -kEigenvalueFloor) {
    throw std::invalid_argument(
        "density matrix has a negative eigenvalue: " +
        std::to_string(es.eigenvalues().minCoeff()));
  }
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(0.5 * Mat2::Identity());
}

JonesVector pure_from_label(StateLabel label) {
  switch (label) {
    case StateLabel::H: return {1.0, 0.0};
    case StateLabel::V: return {0.0, 1.0};
    case StateLabel::D: return {kInvSqrt2, kInvSqrt2};
    case StateLabel::A: return {kInvSqrt2, -kInvSqrt2};
    case StateLabel::R: return {kInvSqrt2, complexd(0.0, -kInvSqrt2)};
    case StateLabel::L: return {kInvSqrt2, complexd(0.0, kInvSqrt2)};
  }
  throw std::invalid_argument("unknown state label");
}

DensityMatrix density_from_pure(const JonesVector& psi) {
  if (!psi.is_normalized()) {
    throw std::invalid_argument("Jones vector is not normalized");
  }
  const Vec2 v = psi.vec();
  return DensityMatrix(v * v.adjoint());
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  BlochVector r;
  r.rx = (rho.matrix() * pauli(1)).trace().real();
  r.ry = (rho.matrix() * pauli(2)).trace().real();
  r.rz = (rho.matrix() * pauli(3)).trace().real();
  return r;
}

DensityMatrix density_from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + kBlochNormSlack) {
    throw std::invalid_argument("Bloch vector lies outside the unit ball");
  }
  Mat2 m = 0.5 * (Mat2::Identity() + r.rx * pauli(1) + r.ry * pauli(2) +
                  r.rz * pauli(3));
  return DensityMatrix(m);
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

double state_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  return uhlmann_fidelity(rho1.matrix(), rho2.matrix());
}

}  // namespace depolsim
