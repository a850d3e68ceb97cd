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

#ifndef DEPOLSIM_PARALLEL_HPP
#define DEPOLSIM_PARALLEL_HPP

#include <cstddef>
#include <cstdint>
#include <utility>

namespace depolsim {

// Serial is the reference schedule; Parallel distributes iterations over
// OpenMP threads. Work units own their RNG substream and write to disjoint
// slots, so both modes produce bit-identical results.
enum class ExecMode { Serial, Parallel };

template <typename F>
void for_each_index(std::size_t n, ExecMode mode, F&& body) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) {
    body(i);
  }
}

}  // namespace depolsim

#endif  // DEPOLSIM_PARALLEL_HPP
