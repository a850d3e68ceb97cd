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

#include "depolsim/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace depolsim {

namespace {

constexpr double kDarkArmWeight = 1e-15;

// Arm amplitude operators for the displaced Sagnac.
//
// PBS port operators with extinction eps:
//   transmission t = diag(sqrt(1-eps), sqrt(eps)),
//   reflection   r = i diag(sqrt(eps), sqrt(1-eps)).
// The clockwise beam is transmitted in and out, the counter-clockwise beam
// reflected in and out, each passing its own plate:
//   A = t W_cw t + r W_ccw r
//   B = -i X (r W_cw t + t W_ccw r)
// X is the fixed 45-degree plate on arm B; the -i removes the single
// leftover reflection phase so both ideal arms carry the input with a real
// positive amplitude. A^dag A + B^dag B = I for any eps and plate angles.
struct ArmOperators {
  Mat2 a;
  Mat2 b;
};

ArmOperators arm_operators(const SagnacConfig& cfg) {
  const double eps = cfg.imperfections.pbs_extinction;
  if (eps < 0.0 || eps > 1.0) {
    throw std::invalid_argument("PBS extinction must lie in [0, 1]");
  }
  const double t_major = std::sqrt(1.0 - eps);
  const double t_minor = std::sqrt(eps);

  Mat2 t = Mat2::Zero();
  t(0, 0) = t_major;
  t(1, 1) = t_minor;
  Mat2 r = Mat2::Zero();
  r(0, 0) = complexd(0.0, t_minor);
  r(1, 1) = complexd(0.0, t_major);

  const Mat2 w_cw = hwp(cfg.theta + cfg.imperfections.plate_offset_cw);
  const Mat2 w_ccw = hwp(cfg.theta + cfg.imperfections.plate_offset_ccw);

  ArmOperators ops;
  ops.a = t * w_cw * t + r * w_ccw * r;
  ops.b = complexd(0.0, -1.0) * (pauli(1) * (r * w_cw * t + t * w_ccw * r));
  return ops;
}

}  // namespace

Mat2 rotation(double angle) {
  Mat2 m;
  m << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return m;
}

Mat2 hwp(double theta) {
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  Mat2 m;
  m << c, s, s, -c;
  return m;
}

Mat2 qwp(double theta) {
  Mat2 fast_axis = Mat2::Zero();
  fast_axis(0, 0) = 1.0;
  fast_axis(1, 1) = complexd(0.0, 1.0);
  return rotation(theta) * fast_axis * rotation(-theta);
}

double splitting_parameter(double theta) {
  const double s = std::sin(2.0 * theta);
  return s * s;
}

double theta_for_p(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("splitting parameter p must lie in [0, 1]");
  }
  return 0.5 * std::asin(std::sqrt(p));
}

SplitOutput sagnac_split(const DensityMatrix& rho, const SagnacConfig& cfg) {
  const double p = splitting_parameter(cfg.theta);
  if (cfg.imperfections.ideal()) {
    return SplitOutput{rho, 1.0 - p, rho, p, 1.0, 1.0};
  }

  const ArmOperators ops = arm_operators(cfg);
  SplitOutput out{rho, 0.0, rho, 0.0, 1.0, 1.0};

  const Mat2 raw_a = ops.a * rho.matrix() * ops.a.adjoint();
  out.weight_a = raw_a.trace().real();
  if (out.weight_a >= kDarkArmWeight) {
    out.state_a = DensityMatrix(hermitian_part(raw_a / out.weight_a));
    out.fidelity_a = state_fidelity(rho, out.state_a);
  }

  const Mat2 raw_b = ops.b * rho.matrix() * ops.b.adjoint();
  out.weight_b = raw_b.trace().real();
  if (out.weight_b >= kDarkArmWeight) {
    out.state_b = DensityMatrix(hermitian_part(raw_b / out.weight_b));
    out.fidelity_b = state_fidelity(rho, out.state_b);
  }
  return out;
}

JonesSplitOutput sagnac_split_jones(const JonesVector& psi,
                                    const SagnacConfig& cfg) {
  if (!psi.is_normalized()) {
    throw std::invalid_argument("Jones vector is not normalized");
  }
  const ArmOperators ops = arm_operators(cfg);

  JonesSplitOutput out;
  const Vec2 amp_a = ops.a * psi.vec();
  out.a.weight = amp_a.squaredNorm();
  out.a.state = out.a.weight >= kDarkArmWeight
                    ? JonesVector::from_vec(amp_a / std::sqrt(out.a.weight))
                    : psi;

  const Vec2 amp_b = ops.b * psi.vec();
  out.b.weight = amp_b.squaredNorm();
  out.b.state = out.b.weight >= kDarkArmWeight
                    ? JonesVector::from_vec(amp_b / std::sqrt(out.b.weight))
                    : psi;
  return out;
}

DensityMatrix fiber_depolarize(const DensityMatrix& rho,
                               const DepolarizerConfig& cfg) {
  if (cfg.d < 0.0 || cfg.d > 1.0) {
    throw std::invalid_argument("depolarization strength must lie in [0, 1]");
  }
  return DensityMatrix((1.0 - cfg.d) * rho.matrix() +
                       cfg.d * 0.5 * Mat2::Identity());
}

DensityMatrix incoherent_combine(const DensityMatrix& a, double wa,
                                 const DensityMatrix& b, double wb) {
  if (wa < 0.0 || wb < 0.0) {
    throw std::invalid_argument("mixture weights must be non-negative");
  }
  if (wa + wb <= 0.0) {
    throw std::invalid_argument("degenerate mixture: both weights are zero");
  }
  return DensityMatrix((wa * a.matrix() + wb * b.matrix()) / (wa + wb));
}

DensityMatrix full_apparatus(const DensityMatrix& rho,
                             const ApparatusConfig& cfg) {
  const SagnacConfig sagnac{cfg.theta, cfg.sagnac};
  const SplitOutput split = sagnac_split(rho, sagnac);
  const DensityMatrix unpolarized =
      fiber_depolarize(split.state_b, DepolarizerConfig{cfg.fiber_d});
  return incoherent_combine(split.state_a, split.weight_a, unpolarized,
                            split.weight_b);
}

DensityMatrix full_apparatus(const DensityMatrix& rho, double theta) {
  return full_apparatus(rho, ApparatusConfig{theta, {}, 1.0});
}

}  // namespace depolsim
