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

#ifndef DEPOLSIM_LINALG_HPP
#define DEPOLSIM_LINALG_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace depolsim {

using complexd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;

template <typename Derived>
auto hermitian_part(const Eigen::MatrixBase<Derived>& m) {
  return (0.5 * (m + m.adjoint())).eval();
}

// Largest absolute deviation from Hermiticity, max_ij |m - m†|.
template <typename Derived>
double hermiticity_residual(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Principal square root of a Hermitian PSD matrix. Eigenvalues that are
// slightly negative from round-off are clipped to zero.
template <typename Mat>
Mat sqrt_psd(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(m));
  auto lambda = es.eigenvalues();
  Mat root = Mat::Zero();
  for (int i = 0; i < lambda.size(); ++i) {
    const double l = std::max(lambda(i), 0.0);
    root += std::sqrt(l) * es.eigenvectors().col(i) *
            es.eigenvectors().col(i).adjoint();
  }
  return root;
}

// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2 for Hermitian PSD,
// trace-one a and b. Shared by state and process fidelity.
template <typename Mat>
double uhlmann_fidelity(const Mat& a, const Mat& b) {
  const Mat ra = sqrt_psd(a);
  const Mat inner = hermitian_part((ra * b * ra).eval());
  Eigen::SelfAdjointEigenSolver<Mat> es(inner);
  double tr = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    tr += std::sqrt(std::max(es.eigenvalues()(i), 0.0));
  }
  const double f = tr * tr;
  return std::clamp(f, 0.0, 1.0);
}

// (1/2) ||a - b||_1 for Hermitian a, b.
template <typename Mat>
double trace_distance(const Mat& a, const Mat& b) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part((a - b).eval()));
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// Nearest-by-eigenvalue-clip physical matrix: eigendecompose, clip negative
// eigenvalues to zero, renormalize the trace to one. `clipped` receives the
// magnitude of the most negative eigenvalue that was removed (0 if none).
template <typename Mat>
Mat clip_psd_unit_trace(const Mat& hermitian, double* clipped = nullptr) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(hermitian));
  auto lambda = es.eigenvalues();
  double worst = 0.0;
  double trace = 0.0;
  for (int i = 0; i < lambda.size(); ++i) {
    worst = std::min(worst, lambda(i));
    trace += std::max(lambda(i), 0.0);
  }
  if (clipped != nullptr) {
    *clipped = -worst;
  }
  if (trace <= 0.0) {
    throw std::domain_error("clip_psd_unit_trace: no positive spectral weight");
  }
  Mat out = Mat::Zero();
  for (int i = 0; i < lambda.size(); ++i) {
    const double l = std::max(lambda(i), 0.0) / trace;
    out += l * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  return out;
}

}  // namespace depolsim

#endif  // DEPOLSIM_LINALG_HPP
