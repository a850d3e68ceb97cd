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

#ifndef DEPOLSIM_RANDOM_STATES_HPP
#define DEPOLSIM_RANDOM_STATES_HPP

#include <cmath>

#include "depolsim/qstate.hpp"
#include "depolsim/rng.hpp"

namespace depolsim {

// Haar-random pure state: two complex Gaussian amplitudes, normalized.
inline JonesVector random_pure_state(Rng& rng) {
  const complexd h(rng.normal(0, 1), rng.normal(0, 1));
  const complexd v(rng.normal(0, 1), rng.normal(0, 1));
  return JonesVector{h, v}.normalized();
}

// Uniform over the Bloch ball: isotropic direction, radius ~ u^(1/3).
inline DensityMatrix random_density_matrix(Rng& rng) {
  double x = rng.normal(0, 1);
  double y = rng.normal(0, 1);
  double z = rng.normal(0, 1);
  const double len = std::sqrt(x * x + y * y + z * z);
  const double radius = len > 0 ? std::cbrt(rng.uniform()) / len : 0.0;
  return density_from_bloch({x * radius, y * radius, z * radius});
}

}  // namespace depolsim

#endif  // DEPOLSIM_RANDOM_STATES_HPP
