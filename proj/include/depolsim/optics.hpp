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

#ifndef DEPOLSIM_OPTICS_HPP
#define DEPOLSIM_OPTICS_HPP

#include "depolsim/qstate.hpp"

namespace depolsim {

//=========================================================================
// Jones-calculus elements
//=========================================================================

// Rotation of the polarization plane by `angle`.
Mat2 rotation(double angle);

// Half-wave plate with fast axis at theta:
//   [[cos 2t, sin 2t], [sin 2t, -cos 2t]] = R(t) diag(1,-1) R(-t).
// Unitary and involutory.
Mat2 hwp(double theta);

// Quarter-wave plate with fast axis at theta: R(t) diag(1, i) R(-t).
// qwp(t)^2 == hwp(t) and qwp(t)^4 == I with this phase convention;
// qwp(pi/4) maps |H> to |R> up to a global phase.
Mat2 qwp(double theta);

// p = sin^2(2 theta): the fraction of the light routed into arm B.
double splitting_parameter(double theta);

// Plate angle realizing a target p: asin(sqrt(p))/2, in [0, pi/4].
// Throws std::invalid_argument for p outside [0, 1].
double theta_for_p(double p);

//=========================================================================
// Displaced-Sagnac variable splitter
//=========================================================================
//
// The splitter is a PBS whose transmitted (H) light runs clockwise through
// one half-wave plate and whose reflected (V) light runs counter-clockwise
// through the other, both plates nominally at theta. Recombination at the
// PBS routes the light into spatial arms A and B; arm B then passes a
// half-wave plate fixed at 45 degrees. Overall path phases are chosen so
// that both ideal outputs carry the input polarization with a real positive
// amplitude: arm A with weight cos^2(2 theta) = 1-p, arm B with weight p.

struct SagnacImperfections {
  // Fraction of the wrong polarization leaking through each PBS port.
  double pbs_extinction{0.0};
  // Angle added to the nominal theta of each loop plate, radians.
  double plate_offset_cw{0.0};
  double plate_offset_ccw{0.0};

  bool ideal() const {
    return pbs_extinction == 0.0 && plate_offset_cw == 0.0 &&
           plate_offset_ccw == 0.0;
  }
};

struct SagnacConfig {
  double theta{0.0};  // radians; the splitting law is pi-periodic
  SagnacImperfections imperfections{};
};

struct SplitOutput {
  DensityMatrix state_a;
  double weight_a{0.0};
  DensityMatrix state_b;
  double weight_b{0.0};
  // Fidelity of each arm's state to the input (exactly 1 in the ideal model).
  double fidelity_a{1.0};
  double fidelity_b{1.0};
};

struct JonesSplitOutput {
  WeightedJones a;
  WeightedJones b;
};

// Mixed-state splitter action. Ideal configs take the exact closed form
// (state_a = state_b = rho, weights 1-p and p); imperfect configs compose
// the leaky PBS and offset plates element by element.
SplitOutput sagnac_split(const DensityMatrix& rho, const SagnacConfig& cfg);

// Explicit element-by-element amplitude composition for a pure input.
// Weights are the squared amplitude norms; a dark arm (weight < 1e-15)
// reports the input polarization as a pass-through placeholder.
JonesSplitOutput sagnac_split_jones(const JonesVector& psi,
                                    const SagnacConfig& cfg);

//=========================================================================
// Fiber depolarizer and incoherent combiner
//=========================================================================

// Depolarization strength of the multimode fiber; d = 1 models the ideal
// 2 m fiber that fully scrambles the polarization.
struct DepolarizerConfig {
  double d{1.0};
};

// rho -> (1-d) rho + d I/2. Throws std::invalid_argument for d outside [0,1].
DensityMatrix fiber_depolarize(const DensityMatrix& rho,
                               const DepolarizerConfig& cfg);

// Classical mixture (wa a + wb b)/(wa + wb). Throws std::invalid_argument
// on negative weights or when both weights are zero.
DensityMatrix incoherent_combine(const DensityMatrix& a, double wa,
                                 const DensityMatrix& b, double wb);

//=========================================================================
// Full apparatus
//=========================================================================

struct ApparatusConfig {
  double theta{0.0};
  SagnacImperfections sagnac{};
  double fiber_d{1.0};

  bool ideal() const { return sagnac.ideal() && fiber_d == 1.0; }
};

// Sagnac split, fiber depolarization of arm B, incoherent recombination.
// Ideal configuration realizes rho -> p I/2 + (1-p) rho with p = sin^2(2t).
DensityMatrix full_apparatus(const DensityMatrix& rho,
                             const ApparatusConfig& cfg);
DensityMatrix full_apparatus(const DensityMatrix& rho, double theta);

}  // namespace depolsim

#endif  // DEPOLSIM_OPTICS_HPP
