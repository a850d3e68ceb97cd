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

// Test-only reference computations, kept independent of the library paths
// they are used to check.

#ifndef DEPOLSIM_TESTS_ORACLES_HPP
#define DEPOLSIM_TESTS_ORACLES_HPP

#include <cmath>

#include "depolsim/linalg.hpp"
#include "depolsim/qstate.hpp"

namespace depolsim::test {

// Closed-form depolarizing map p I/2 + (1-p) rho, the reference the Kraus
// route is compared against.
inline Mat2 depolarize_closed_form(const Mat2& rho, double p) {
  return p * 0.5 * Mat2::Identity() + (1.0 - p) * rho;
}

// Brute-force process-matrix action sum_mn chi_mn sigma_m rho sigma_n.
inline Mat2 apply_chi_brute_force(const Mat4& chi, const Mat2& rho) {
  Mat2 out = Mat2::Zero();
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      out += chi(m, n) * pauli(m) * rho * pauli(n);
    }
  }
  return out;
}

struct OracleSplit {
  Vec2 arm_a;
  Vec2 arm_b;
};

// Hand-traced amplitude chain through the ideal displaced Sagnac. The H
// amplitude runs clockwise through its plate; the V amplitude picks up the
// reflection phase i and runs counter-clockwise through the other plate.
// On the way out, transmitted H goes to A for the clockwise beam and to B
// for the counter-clockwise one; reflected V does the opposite (another
// factor i per reflection). Arm B finally passes the fixed 45-degree plate
// (an H/V swap); its leftover path phase i is divided out.
inline OracleSplit sagnac_closed_path(const Vec2& psi, double theta) {
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  const complexd i(0.0, 1.0);

  const complexd cw_h = psi(0) * c;      // still H after the plate
  const complexd cw_v = psi(0) * s;      // converted to V
  const complexd ccw_h = i * psi(1) * s;   // converted to H
  const complexd ccw_v = i * psi(1) * -c;  // still V

  OracleSplit split;
  split.arm_a = Vec2(cw_h, i * ccw_v);
  const Vec2 b_before_plate(ccw_h, i * cw_v);
  split.arm_b = Vec2(b_before_plate(1), b_before_plate(0)) / i;
  return split;
}

template <typename MatA, typename MatB>
double max_abs_diff(const MatA& a, const MatB& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace depolsim::test

#endif  // DEPOLSIM_TESTS_ORACLES_HPP
