// Copyright 2026 The Ringtoss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstddef>

#include "ringtoss/prob.hpp"

namespace ringtoss {

// n-th output of Vigna's splitmix64 stream seeded with `seed`, computed by
// direct indexing instead of iteration. Pure 64-bit integer arithmetic, so
// the value is identical across processes and platforms.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t n) {
    std::uint64_t z = seed + (n + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform on (0,1) from 64 random bits: centered 53-bit grid, never 0 or 1.
inline double unit_double(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Independent lanes of one seed. Lane 0/1 feed the shared proposal stream;
// higher lanes are free for experiment drivers (input draws, trial splits).
inline std::uint64_t lane_value(std::uint64_t seed, std::uint64_t lane, std::uint64_t i) {
    return splitmix64_at(splitmix64_at(seed, lane), i);
}

inline double lane_uniform(std::uint64_t seed, std::uint64_t lane, std::uint64_t i) {
    return unit_double(lane_value(seed, lane, i));
}

struct proposal {
    std::size_t y = 0;  // proposal symbol, distributed as the output marginal
    double u = 0.0;     // acceptance coordinate, uniform on (0,1)
};

// The shared stream {(Y_i, U_i)}, i >= 1, addressable by index. Both ends of
// the code construct it from the same seed and the same output marginal; all
// state is copied in, so instances are immutable and freely shared.
class common_randomness {
public:
    common_randomness(std::uint64_t seed, discrete_dist py)
        : seed_(seed), py_(std::move(py)) {}
    common_randomness(std::uint64_t seed, const joint_source& j)
        : common_randomness(seed, j.py()) {}

    std::uint64_t seed() const { return seed_; }

    proposal lookup(std::uint64_t i) const {
        const double vy = unit_double(lane_value(seed_, 0, i));
        const double vu = unit_double(lane_value(seed_, 1, i));
        return proposal{py_.sample(vy), vu};
    }

private:
    std::uint64_t seed_;
    discrete_dist py_;
};

}  // namespace ringtoss
