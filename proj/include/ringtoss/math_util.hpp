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
#include <limits>
#include <span>
#include <vector>

namespace ringtoss {

inline constexpr double kLog2E = 1.4426950408889634073599246810018921;  // log2(e)
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// x * log2(x) with the 0 * log 0 = 0 convention.
inline double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

// (1 - x) * log2(1 - x), accurate for small x, 0 at x >= 1.
inline double one_minus_xlog2(double x) {
    if (x >= 1.0 || x <= 0.0) return 0.0;
    return (1.0 - x) * std::log1p(-x) * kLog2E;
}

// ceil(-log2(q)) for q in (0, inf), exact integer arithmetic via frexp.
// With q = f * 2^e, f in [0.5, 1): the answer is 1 - e in all cases.
inline int ceil_neg_log2(double q) {
    int e = 0;
    (void)std::frexp(q, &e);
    return 1 - e;
}

// log2(2^a + 2^b) without leaving the log domain.
inline double log2_add_exp2(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    const double hi = a > b ? a : b;
    const double lo = a > b ? b : a;
    return hi + std::log1p(std::exp2(lo - hi)) * kLog2E;
}

// Neumaier-compensated accumulator. Downstream identities are checked to
// 1e-12 or tighter, which a plain running sum does not hold at these sizes.
class kahan_sum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Streaming mean / variance (Welford).
class running_stats {
public:
    void add(double x) {
        ++n_;
        const double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
    }
    std::uint64_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    double stderr_of_mean() const {
        return n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
    }

private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

}  // namespace ringtoss
