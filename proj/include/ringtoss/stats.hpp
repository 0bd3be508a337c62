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
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "ringtoss/errors.hpp"
#include "ringtoss/math_util.hpp"

namespace ringtoss {

struct gof_result {
    double stat = 0.0;
    std::size_t df = 0;
    double p_value = 0.0;
};

// Pearson chi-square goodness of fit of observed counts against a cell
// distribution. Any observation in a zero-probability cell fails outright.
inline gof_result chi_square_gof(const std::vector<std::uint64_t>& counts,
                                 const std::vector<double>& probs) {
    if (counts.size() != probs.size()) throw dimension_mismatch("gof cell count mismatch");
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    gof_result r;
    kahan_sum stat;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (probs[i] <= 0.0) {
            if (counts[i] > 0) {
                r.stat = kInf;
                r.p_value = 0.0;
                return r;
            }
            continue;
        }
        const double expected = probs[i] * static_cast<double>(total);
        const double d = static_cast<double>(counts[i]) - expected;
        stat.add(d * d / expected);
        ++r.df;
    }
    if (r.df == 0) throw error("gof needs at least one positive-probability cell");
    --r.df;
    r.stat = stat.value();
    r.p_value = r.df == 0 ? 1.0
                          : boost::math::gamma_q(0.5 * static_cast<double>(r.df), 0.5 * r.stat);
    return r;
}

}  // namespace ringtoss
