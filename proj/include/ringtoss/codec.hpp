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

#include <cfloat>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ringtoss/bitstring.hpp"
#include "ringtoss/errors.hpp"
#include "ringtoss/math_util.hpp"
#include "ringtoss/rational.hpp"
#include "ringtoss/sampler.hpp"

namespace ringtoss {

namespace detail {

// Shannon-Fano-Elias interval code over the sequential index distribution.
// The cumulative F(k) = 1 - prod_{i<=k}(1 - a_i) is carried as the prefix
// product pi = prod_{i<k}(1 - a_i); the codeword for k is the first
// ceil(-log2 q) + 1 bits of the interval midpoint F(k-1) + q/2, q = pi * a_k.
//
// Encoder and decoder run this walker with the same probabilities in the same
// order, so candidate codewords match bit for bit. If q falls below the
// smallest normal double the midpoint is recomputed in exact rational
// arithmetic; the trigger condition itself is evaluated on the shared doubles,
// keeping both sides in lockstep.
template <class ProbFn>
class sfe_walker {
public:
    explicit sfe_walker(ProbFn a) : a_(std::move(a)) {}

    // Codeword for the current candidate index; pre: current_reachable().
    bitstring codeword() {
        ensure_current();
        const double q = pi_ * cur_a_;
        // Rational path when q is subnormal, and also once pi itself is below
        // the resolution of doubles near 1: there (1 - pi) + q/2 collapses
        // onto 1.0 and deep indices would stop getting distinct midpoints.
        if (q < DBL_MIN || pi_ < 0x1.0p-52) return rational_codeword();
        const int len = ceil_neg_log2(q) + 1;
        const double mid = (1.0 - pi_) + 0.5 * q;
        bitstring bits;
        double v = mid;
        for (int t = 0; t < len; ++t) {
            v += v;  // exact: doubling does not round
            if (v >= 1.0) {
                bits.push_back(1);
                v -= 1.0;
            } else {
                bits.push_back(0);
            }
        }
        return bits;
    }

    // Step to the next index. Returns false once the remaining tail mass is
    // exactly zero (some earlier step had acceptance probability 1). The flag
    // is tracked separately from pi_, which can underflow to 0 while the true
    // product is still positive.
    bool advance() {
        ensure_current();
        if (cur_a_ >= 1.0) dead_ = true;
        pi_ *= 1.0 - cur_a_;
        ++k_;
        have_a_ = false;
        return !dead_;
    }

    bool current_reachable() {
        ensure_current();
        return cur_a_ > 0.0 && !dead_;
    }

    std::size_t index() const { return k_; }

private:
    void ensure_current() {
        if (!have_a_) {
            cur_a_ = a_(k_);
            have_a_ = true;
        }
    }

    bitstring rational_codeword() {
        bigrat pi(1);
        for (std::size_t i = 1; i < k_; ++i) pi *= 1 - exact_rational(a_(i));
        const bigrat q = pi * exact_rational(cur_a_);
        if (q <= 0) throw zero_probability_index("index has zero coding probability");
        const int len = ceil_neg_log2(q) + 1;
        if (len > 0xFFFF) throw error("codeword length exceeds the frame limit");
        const bigrat mid = (1 - pi) + q / 2;
        return bitstring(rational_bits(mid, len));
    }

    ProbFn a_;
    std::size_t k_ = 1;
    double pi_ = 1.0;  // prod_{i<k} (1 - a_i)
    double cur_a_ = 0.0;
    bool have_a_ = false;
    bool dead_ = false;
};

template <class ProbFn>
sfe_walker<ProbFn> make_sfe_walker(ProbFn a) {
    return sfe_walker<ProbFn>(std::move(a));
}

}  // namespace detail

struct encode_result {
    bitstring bits;
    std::size_t k = 0;
    std::size_t y = 0;
};

// Encode the index selected by rejection search for input x under the shared
// randomness z. Codeword length is exactly ceil(-log2 Q(k|z)) + 1.
inline encode_result encode_detail(std::size_t x, const common_randomness& z,
                                   const joint_source& j, const width_table& table,
                                   std::size_t k_max) {
    const index_result r = rejection_index(x, z, j, k_max);
    const ring_toss_dist dist(z, j, table);
    auto walker = detail::make_sfe_walker([&](std::size_t i) { return dist.accept_prob(i); });
    while (walker.index() < r.k) walker.advance();
    if (!walker.current_reachable()) {
        // Cannot happen for an index produced by rejection search: the
        // accepted x itself contributes mass to a_k.
        throw zero_probability_index("rejection index has zero coding probability");
    }
    return encode_result{walker.codeword(), r.k, r.y};
}

inline bitstring encode(std::size_t x, const common_randomness& z, const joint_source& j,
                        const width_table& table, std::size_t k_max) {
    return encode_detail(x, z, j, table, k_max).bits;
}

inline bitstring encode(std::size_t x, const common_randomness& z, const joint_source& j) {
    width_table table(j);
    return encode(x, z, j, table, default_k_max(j));
}

struct decode_result {
    std::size_t k = 0;
    std::size_t y = 0;
};

// Recover (k, y_k) from a codeword by replaying the encoder over candidate
// indices until its codeword matches. Never consults the encoded input.
inline decode_result decode(const bitstring& b, const common_randomness& z,
                            const joint_source& j, const width_table& table,
                            std::size_t k_max) {
    const ring_toss_dist dist(z, j, table);
    auto walker = detail::make_sfe_walker([&](std::size_t i) { return dist.accept_prob(i); });
    while (walker.index() <= k_max) {
        if (walker.current_reachable()) {
            const bitstring candidate = walker.codeword();
            if (candidate == b) {
                return decode_result{walker.index(), z.lookup(walker.index()).y};
            }
        }
        if (!walker.advance()) break;
    }
    throw malformed_codeword("codeword matches no index within the search budget");
}

inline decode_result decode(const bitstring& b, const common_randomness& z,
                            const joint_source& j) {
    width_table table(j);
    return decode(b, z, j, table, default_k_max(j));
}

struct rate_report {
    double mean_length = 0.0;
    double mean_length_stderr = 0.0;
    double cross_entropy_estimate = 0.0;  // mean of -log2 Q(K|Z)
    double cross_entropy_stderr = 0.0;
    double i_f = 0.0;
    double mi = 0.0;
    bool bound_ok = false;
    std::uint64_t trials = 0;
};

// Empirical rate of the full codec: fresh input and shared randomness per
// trial. bound_ok checks the mean length against I_F + log2 e + 2 within
// three standard errors (ideal-length window plus interval-code overhead).
inline rate_report measure_rate(const joint_source& j, std::uint64_t n_trials,
                                std::uint64_t seed0) {
    width_table table(j);
    const std::size_t k_max = default_k_max(j);
    running_stats len_stats;
    running_stats nll_stats;
    for (std::uint64_t t = 0; t < n_trials; ++t) {
        const std::uint64_t trial_seed = seed0 + t;
        const std::size_t x = j.px().sample(lane_uniform(trial_seed, 2, 0));
        common_randomness z(trial_seed, j);
        const encode_result enc = encode_detail(x, z, j, table, k_max);
        len_stats.add(static_cast<double>(enc.bits.size()));
        nll_stats.add(ring_toss_dist(z, j, table).neg_log2_prob(enc.k));
    }
    rate_report rep;
    rep.trials = n_trials;
    rep.mean_length = len_stats.mean();
    rep.mean_length_stderr = len_stats.stderr_of_mean();
    rep.cross_entropy_estimate = nll_stats.mean();
    rep.cross_entropy_stderr = nll_stats.stderr_of_mean();
    rep.i_f = functional_information(j);
    rep.mi = mutual_information(j);
    rep.bound_ok =
        rep.mean_length <= rep.i_f + kLog2E + 2.0 + 3.0 * rep.mean_length_stderr;
    return rep;
}

}  // namespace ringtoss
