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

#include "depolsim/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace depolsim {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t k0,
                             std::uint64_t k1, std::uint64_t k2) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ k0);
  h = mix64(h ^ k1);
  h = mix64(h ^ k2);
  return h;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal(double mu, double sigma) {
  double u1 = uniform();
  while (u1 == 0.0) {
    u1 = uniform();
  }
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return mu + sigma * radius * std::cos(2.0 * std::numbers::pi * u2);
}

std::int64_t Rng::binomial(std::int64_t n, double p) {
  if (n < 0) {
    throw std::invalid_argument("binomial: negative trial count");
  }
  if (p <= 0.0) {
    return 0;
  }
  if (p >= 1.0) {
    return n;
  }
  std::int64_t successes = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    successes += uniform() < p ? 1 : 0;
  }
  return successes;
}

}  // namespace depolsim
