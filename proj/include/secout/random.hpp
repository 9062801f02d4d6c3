// SPDX-License-Identifier: Apache-2.0
//
// secout - outage and secrecy outage analysis for fading wireless channels
// Copyright (C) 2026 the secout authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECOUT_RANDOM_HPP
#define SECOUT_RANDOM_HPP

#include <cstdint>

namespace secout {

/**
 * Small deterministic random stream (splitmix64 core).
 *
 * for_sample() derives an independent substream from (master seed, sample
 * index) alone, so a Monte Carlo run can hand sample i to any worker and
 * still produce the same draws. Each substream is confined to one worker.
 */
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    /// Counter-based substream: a pure function of (master_seed, sample_index).
    static RandomStream for_sample(std::uint64_t master_seed, std::uint64_t sample_index) {
        return RandomStream(mix(master_seed + golden * (sample_index + 1)));
    }

    std::uint64_t next_u64() {
        state_ += golden;
        return mix(state_);
    }

    /// Uniform draw in the open interval (0, 1).
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; pairs are cached.
    double next_normal();

    /// Unit-mean exponential.
    double next_exponential();

  private:
    static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double cached_normal_ = 0.0;
    bool have_cached_normal_ = false;
};

} // namespace secout

#endif // SECOUT_RANDOM_HPP
