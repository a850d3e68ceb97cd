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

#ifndef DEPOLSIM_CHANNELS_HPP
#define DEPOLSIM_CHANNELS_HPP

#include <array>
#include <vector>

#include "depolsim/qstate.hpp"

namespace depolsim {

//=========================================================================
// Quantum channels: Kraus form and chi (process) matrix in the Pauli basis
//=========================================================================

// CPTP map as a set of Kraus operators, rho -> sum_i K_i rho K_i^dag.
// Trace preservation (sum K^dag K = I within 1e-10) is enforced unless the
// set is explicitly flagged sub-normalized.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<Mat2> kraus, bool subnormalized = false);

  const std::vector<Mat2>& kraus() const { return kraus_; }
  bool subnormalized() const { return subnormalized_; }

  // max_ij |sum K^dag K - I|
  double completeness_residual() const;

 private:
  std::vector<Mat2> kraus_;
  bool subnormalized_;
};

// Degree of decoherence of the depolarizing family.
struct ChannelParams {
  double p{0.0};
};

// 4x4 process matrix chi over the Pauli basis {I, X, Y, Z}, normalized so
// that E(rho) = sum_mn chi_mn sigma_m rho sigma_n and Tr chi = 1 for a
// trace-preserving map. Construction validates Hermiticity within 1e-10,
// trace within 1e-10 of 1 and eigenvalues >= -eig_floor (1e-12 for analytic
// inputs; tomography passes 1e-8 for statistically estimated ones).
class ChiMatrix {
 public:
  static constexpr std::array<const char*, 4> kBasisLabels = {"I", "X", "Y",
                                                              "Z"};

  explicit ChiMatrix(const Mat4& m, double eig_floor = 1e-12);

  const Mat4& matrix() const { return m_; }
  complexd operator()(int row, int col) const { return m_(row, col); }

 private:
  Mat4 m_;
};

//=========================================================================
// Operations
//=========================================================================

// Kraus set {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}, whose
// action is rho -> p I/2 + (1-p) rho. Throws for p outside [0, 1].
QuantumChannel depolarizing_channel(ChannelParams params);

// sum_i K_i rho K_i^dag. Throws if the channel fails trace preservation and
// is not flagged sub-normalized.
DensityMatrix apply_channel(const QuantumChannel& ch, const DensityMatrix& rho);

// Expand K_i = sum_m a_im sigma_m; chi_mn = sum_i a_im conj(a_in).
ChiMatrix chi_from_kraus(const QuantumChannel& ch);

// Eigendecompose chi; K_i = sqrt(lambda_i) sum_m u_mi sigma_m. The Kraus
// set is unique only up to unitary mixing, so round-trips are checked by
// channel action, not by operator lists.
QuantumChannel kraus_from_chi(const ChiMatrix& chi);

// Uhlmann fidelity between two trace-one chi matrices; reduces to
// Tr[a b] when either argument is rank one.
double process_fidelity(const ChiMatrix& a, const ChiMatrix& b);

// chi of the ideal depolarizing map: diag(1-3p/4, p/4, p/4, p/4).
ChiMatrix ideal_depolarizing_chi(double p);

// Physicality report for a Kraus set and its derived chi.
struct ChannelValidationReport {
  double completeness_residual{0.0};
  double chi_hermiticity_residual{0.0};
  double chi_min_eigenvalue{0.0};

  bool physical(double tp_tol = 1e-10, double eig_floor = 1e-8) const {
    return completeness_residual <= tp_tol &&
           chi_hermiticity_residual <= tp_tol &&
           chi_min_eigenvalue >= -eig_floor;
  }
};

ChannelValidationReport validate_channel(const QuantumChannel& ch);

// Same report for a raw (not yet validated) process matrix.
ChannelValidationReport validate_chi(const Mat4& raw_chi);

}  // namespace depolsim

#endif  // DEPOLSIM_CHANNELS_HPP
