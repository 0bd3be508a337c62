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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringtoss {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_mismatch : error {
    using error::error;
};

struct not_stochastic : error {
    using error::error;
};

struct not_absolutely_continuous : error {
    using error::error;
};

struct unsupported_symbol : error {
    using error::error;
};

// Rejection search gave up after k_max proposals; tail probability (1 - 1/M)^k_max.
struct exhausted : error {
    explicit exhausted(std::size_t k_max)
        : error("proposal budget exhausted after " + std::to_string(k_max) + " steps"),
          k_max(k_max) {}
    std::size_t k_max;
};

struct not_singular : error {
    using error::error;
};

struct malformed_codeword : error {
    using error::error;
};

struct zero_probability_index : error {
    using error::error;
};

struct too_large : error {
    using error::error;
};

struct unbounded_ratio : error {
    using error::error;
};

struct quadrature_failure : error {
    using error::error;
};

}  // namespace ringtoss
