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

#ifndef DEPOLSIM_RNG_HPP
#define DEPOLSIM_RNG_HPP

#include <cstdint>
#include <random>

namespace depolsim {

// SplitMix64 finalizer; bijective, good avalanche.
std::uint64_t mix64(std::uint64_t x);

// Seed of an independent substream keyed by up to three indices. Every
// simulated work unit owns one substream, which makes results independent
// of scheduling and worker count.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t k0,
                             std::uint64_t k1 = 0, std::uint64_t k2 = 0);

// Deterministic generator with the explicit samplers the simulator needs.
// Draw order is part of the reproducibility contract: callers must consume
// variates in a fixed sequence per substream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Box-Muller; consumes exactly two uniforms per call.
  double normal(double mu, double sigma);

  // Exact binomial sampler (Bernoulli summation), O(n).
  std::int64_t binomial(std::int64_t n, double p);

 private:
  std::mt19937_64 engine_;
};

}  // namespace depolsim

#endif  // DEPOLSIM_RNG_HPP
