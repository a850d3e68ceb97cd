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

#ifndef DEPOLSIM_QSTATE_HPP
#define DEPOLSIM_QSTATE_HPP

#include <array>
#include <optional>
#include <string_view>

#include "depolsim/linalg.hpp"

namespace depolsim {

//=========================================================================
// Polarization qubit states
//=========================================================================
//
// Conventions used throughout:
//   - computational basis is {|H>, |V>} with H on the +z Bloch axis,
//   - |D> = (|H>+|V>)/sqrt2, |A> = (|H>-|V>)/sqrt2 span the x axis,
//   - |R> = (|H>-i|V>)/sqrt2, |L> = (|H>+i|V>)/sqrt2 span the y axis,
//     with L the +y eigenstate of sigma_y = [[0,-i],[i,0]].
// This puts the six canonical polarization states on the six Bloch poles.

enum class StateLabel { H, V, D, A, R, L };

inline constexpr std::array<StateLabel, 6> kCanonicalLabels = {
    StateLabel::H, StateLabel::V, StateLabel::D,
    StateLabel::A, StateLabel::R, StateLabel::L};

const char* to_string(StateLabel label);
std::optional<StateLabel> state_label_from_string(std::string_view name);

// Pauli matrix sigma_k for k in {0:I, 1:X, 2:Y, 3:Z}.
const Mat2& pauli(int k);

// Normalized pure polarization state, |amp_h|^2 + |amp_v|^2 = 1.
// Unnormalized light is represented by WeightedJones below.
struct JonesVector {
  complexd amp_h{};
  complexd amp_v{};

  double norm2() const;
  bool is_normalized(double tol = 1e-12) const;
  JonesVector normalized() const;

  Vec2 vec() const { return Vec2(amp_h, amp_v); }
  static JonesVector from_vec(const Vec2& v) { return {v(0), v(1)}; }
};

// A pure polarization together with the fraction of the light carrying it.
struct WeightedJones {
  JonesVector state;
  double weight{0.0};
};

struct BlochVector {
  double rx{0.0};
  double ry{0.0};
  double rz{0.0};

  double norm() const;
};

// 2x2 Hermitian unit-trace PSD matrix. Construction validates:
// Hermitian and unit trace within 1e-12, eigenvalues >= -1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat2& m);

  static DensityMatrix maximally_mixed();

  const Mat2& matrix() const { return m_; }
  complexd operator()(int row, int col) const { return m_(row, col); }

 private:
  Mat2 m_;
};

//=========================================================================
// Operations
//=========================================================================

// The six canonical states with the sign conventions above.
JonesVector pure_from_label(StateLabel label);

// rho = |psi><psi|. Throws std::invalid_argument if psi is not normalized.
DensityMatrix density_from_pure(const JonesVector& psi);

// r_k = Tr[rho sigma_k].
BlochVector bloch_from_density(const DensityMatrix& rho);

// rho = (I + r.sigma)/2. Throws std::invalid_argument if ||r|| > 1 (beyond
// the 1e-10 construction tolerance).
DensityMatrix density_from_bloch(const BlochVector& r);

// Tr[rho^2], in [1/2, 1] for a qubit.
double purity(const DensityMatrix& rho);

// Uhlmann fidelity (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2.
double state_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

}  // namespace depolsim

#endif  // DEPOLSIM_QSTATE_HPP
