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
#include <string>
#include <vector>

#include "ringtoss/errors.hpp"
#include "ringtoss/prob.hpp"

namespace ringtoss {

// Binary symmetric channel with uniform input.
inline joint_source make_bsc(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw error("bsc flip probability must be in [0,1]");
    return joint_source(discrete_dist({0.5, 0.5}), {{1.0 - p, p}, {p, 1.0 - p}});
}

// Binary erasure channel with uniform input; output symbols 0, 1, erasure.
inline joint_source make_bec(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw error("bec erasure probability must be in [0,1]");
    return joint_source(discrete_dist({0.5, 0.5}),
                        {{1.0 - eps, 0.0, eps}, {0.0, 1.0 - eps, eps}});
}

// Noiseless channel Y = X on k symbols, uniform input.
inline joint_source make_identity(std::size_t k) {
    if (k < 1) throw error("identity preset needs at least one symbol");
    std::vector<double> px(k, 1.0 / static_cast<double>(k));
    std::vector<std::vector<double>> rows(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) rows[i][i] = 1.0;
    return joint_source(discrete_dist(px), rows);
}

// Cyclic additive noise uniform over a window of w out of k symbols:
// Y = X + J mod k with J uniform on {0,..,w-1}. Singular for every w.
inline joint_source make_uniform_additive(std::size_t k, std::size_t w) {
    if (k < 1 || w < 1 || w > k) throw error("uniform-additive needs 1 <= w <= k");
    std::vector<double> px(k, 1.0 / static_cast<double>(k));
    std::vector<std::vector<double>> rows(k, std::vector<double>(k, 0.0));
    for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t d = 0; d < w; ++d) rows[x][(x + d) % k] = 1.0 / static_cast<double>(w);
    }
    return joint_source(discrete_dist(px), rows);
}

// Parse "bsc:0.11", "bec:0.3", "identity:4", "uniform-additive:8:3".
inline joint_source make_preset(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw error("preset needs parameters, e.g. bsc:0.11");
    const std::string name = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    try {
        if (name == "bsc") return make_bsc(std::stod(args));
        if (name == "bec") return make_bec(std::stod(args));
        if (name == "identity") return make_identity(std::stoul(args));
        if (name == "uniform-additive") {
            const auto colon2 = args.find(':');
            if (colon2 == std::string::npos) {
                throw error("uniform-additive preset needs k and w, e.g. uniform-additive:8:3");
            }
            return make_uniform_additive(std::stoul(args.substr(0, colon2)),
                                         std::stoul(args.substr(colon2 + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw error("could not parse preset parameters in '" + spec + "'");
    } catch (const std::out_of_range&) {
        throw error("preset parameter out of range in '" + spec + "'");
    }
    throw error("unknown preset '" + name + "'");
}

}  // namespace ringtoss
