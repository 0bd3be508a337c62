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

#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ringtoss/errors.hpp"

namespace ringtoss {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Exact rational value of a finite double, via its mantissa and exponent.
inline bigrat exact_rational(double x) {
    if (x == 0.0) return bigrat(0);
    int e = 0;
    const double f = std::frexp(x, &e);  // x = f * 2^e, |f| in [0.5, 1)
    const auto mant = static_cast<std::int64_t>(std::ldexp(f, 53));
    bigrat r(mant);
    const int shift = e - 53;
    if (shift >= 0) {
        r *= bigrat(bigint(1) << shift);
    } else {
        r /= bigrat(bigint(1) << -shift);
    }
    return r;
}

// Drift-free reference for the telescoping identities of the index coding
// distribution: everything below treats the acceptance probabilities as exact
// rationals (the doubles convert exactly).
struct rational_telescope {
    explicit rational_telescope(const std::vector<double>& accept_probs) {
        probs.reserve(accept_probs.size());
        for (double a : accept_probs) probs.push_back(exact_rational(a));
    }

    // Q(k|z) = a_k * prod_{i<k} (1 - a_i), exact.
    bigrat q(std::size_t k) const {
        bigrat prefix(1);
        for (std::size_t i = 0; i + 1 < k; ++i) prefix *= 1 - probs[i];
        return prefix * probs[k - 1];
    }

    // sum_{k<=n} Q(k|z), exact term-by-term sum.
    bigrat partial_sum(std::size_t n) const {
        bigrat s(0);
        for (std::size_t k = 1; k <= n; ++k) s += q(k);
        return s;
    }

    // prod_{i<=n} (1 - a_i), exact.
    bigrat tail_product(std::size_t n) const {
        bigrat p(1);
        for (std::size_t i = 0; i < n; ++i) p *= 1 - probs[i];
        return p;
    }

    std::vector<bigrat> probs;
};

// ceil(-log2(q)) for a rational q in (0, 1]: the least t >= 0 with q >= 2^-t.
inline int ceil_neg_log2(const bigrat& q) {
    if (q <= 0) throw zero_probability_index("log of a nonpositive probability");
    bigint num = boost::multiprecision::numerator(q);
    const bigint den = boost::multiprecision::denominator(q);
    int t = 0;
    while (num < den) {
        num <<= 1;
        ++t;
    }
    return t;
}

// First `count` binary-expansion digits of a rational in [0, 1).
inline std::vector<std::uint8_t> rational_bits(bigrat v, int count) {
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        v *= 2;
        if (v >= 1) {
            bits.push_back(1);
            v -= 1;
        } else {
            bits.push_back(0);
        }
    }
    return bits;
}

}  // namespace ringtoss
