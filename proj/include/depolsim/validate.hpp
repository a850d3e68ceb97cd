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

#ifndef DEPOLSIM_VALIDATE_HPP
#define DEPOLSIM_VALIDATE_HPP

#include <string>
#include <vector>

namespace depolsim {

// One analytic invariant of the toolkit, checked without any photon-count
// sampling. `residual` is the worst deviation observed, compared against
// `tolerance`.
struct InvariantCheck {
  std::string name;
  bool passed{false};
  double residual{0.0};
  double tolerance{0.0};
  std::string detail;
};

struct InvariantSuiteOptions {
  // Testing hook: runs the waveplate-algebra checks against a half-wave
  // plate with the sign of the off-diagonal terms flipped, to demonstrate
  // that the suite catches a miswired element.
  bool inject_hwp_sign_error{false};
};

std::vector<InvariantCheck> run_invariant_suite(
    const InvariantSuiteOptions& options = {});

bool all_passed(const std::vector<InvariantCheck>& checks);

}  // namespace depolsim

#endif  // DEPOLSIM_VALIDATE_HPP
