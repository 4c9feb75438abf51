// Copyright 2026 The qtrack Authors
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

#ifndef QTRACK_RANDOM_HPP_
#define QTRACK_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>

namespace qtrack {

// Counter-based SplitMix64 stream.
//
// Draw i of a stream with key k is mix64(k + (i + 1) * 0x9E3779B97F4A7C15),
// where mix64 is the SplitMix64 finalizer. split(id) derives a child key from
// (key, id) only, so a child stream does not depend on how many values the
// parent has produced or on how many siblings exist. Trial i of an experiment
// therefore sees the same numbers whether the experiment runs 1 or 1000
// trials.
//
// All samplers below are implemented here rather than through <random>
// distributions so that output is bit-identical across standard libraries.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;

  Rng split(std::uint64_t stream_id) const noexcept;

  std::uint64_t next() noexcept;
  result_type operator()() noexcept { return next(); }
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept;
  // Standard normal via Box-Muller; the paired value is cached.
  double normal() noexcept;
  // Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace qtrack

#endif  // QTRACK_RANDOM_HPP_
