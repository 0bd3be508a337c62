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
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ringtoss/errors.hpp"
#include "ringtoss/prob.hpp"
#include "ringtoss/stream.hpp"
#include "ringtoss/width.hpp"

namespace ringtoss {

// Every module evaluates acceptance through this one predicate, with the level
// L_i = M * u_i computed once per step. Rejection search, the width lookup
// (">= level"), the exact index law and the codec therefore agree bit for bit;
// a tie at floating-point equality counts as accept.
inline bool accepts(const joint_source& j, std::size_t x, std::size_t y, double level) {
    return j.ratio(x, y) >= level;
}

inline std::size_t default_k_max(const joint_source& j) {
    return static_cast<std::size_t>(std::ceil(64.0 * j.bound_m()));
}

struct index_result {
    std::size_t k = 0;               // accepted proposal index, 1-based
    std::size_t y = 0;               // accepted proposal symbol
    std::size_t steps_examined = 0;  // equals k
};

// First proposal index whose sample x would generate: K = min{i : M U_i <= r(Y_i|x)}.
inline index_result rejection_index(std::size_t x, const common_randomness& z,
                                    const joint_source& j, std::size_t k_max) {
    const double m = j.bound_m();
    for (std::size_t i = 1; i <= k_max; ++i) {
        const proposal p = z.lookup(i);
        if (accepts(j, x, p.y, m * p.u)) return index_result{i, p.y, i};
    }
    throw exhausted(k_max);
}

inline index_result rejection_index(std::size_t x, const common_randomness& z,
                                    const joint_source& j) {
    return rejection_index(x, z, j, default_k_max(j));
}

// The sequential index coding distribution
//   Q(k|z) = a_k * prod_{i<k} (1 - a_i),  a_i = w_{y_i}(M u_i),
// where a_i is the input-marginal probability of accepting proposal i.
class ring_toss_dist {
public:
    ring_toss_dist(const common_randomness& z, const joint_source& j, const width_table& table)
        : z_(&z), j_(&j), table_(&table) {}

    double accept_prob(std::uint64_t i) const {
        const proposal p = z_->lookup(i);
        return (*table_)[p.y](j_->bound_m() * p.u);
    }

    double prob(std::uint64_t k) const {
        double prefix = 1.0;
        for (std::uint64_t i = 1; i < k; ++i) prefix *= 1.0 - accept_prob(i);
        return prefix * accept_prob(k);
    }

    // sum_{k<=n} Q(k|z); telescopes to 1 - prod_{i<=n} (1 - a_i).
    double partial_sum(std::uint64_t n) const {
        double prefix = 1.0;
        for (std::uint64_t i = 1; i <= n; ++i) prefix *= 1.0 - accept_prob(i);
        return 1.0 - prefix;
    }

    // -log2 Q(k|z) without forming the product.
    double neg_log2_prob(std::uint64_t k) const {
        kahan_sum s;
        for (std::uint64_t i = 1; i < k; ++i) {
            s.add(-std::log1p(-accept_prob(i)) * kLog2E);
        }
        s.add(-std::log2(accept_prob(k)));
        return s.value();
    }

private:
    const common_randomness* z_;
    const joint_source* j_;
    const width_table* table_;
};

inline double ring_toss_prob(const common_randomness& z, const joint_source& j,
                             const width_table& table, std::uint64_t k) {
    return ring_toss_dist(z, j, table).prob(k);
}

inline double ring_toss_prob(const common_randomness& z, const joint_source& j, std::uint64_t k) {
    width_table table(j);
    return ring_toss_prob(z, j, table, k);
}

struct index_pmf {
    std::vector<double> p;   // p[k-1] = P(K = k | z) for k = 1..n
    double overflow = 0.0;   // input mass not captured by the first n proposals
};

// Exact conditional index law: P(K = k | z) = P_X(S_k \ union_{i<k} S_i) with
// S_i = {x : r(y_i|x) >= M u_i}, computed by sweeping membership masks.
inline index_pmf exact_index_dist(const common_randomness& z, const joint_source& j,
                                  std::size_t n) {
    const double m = j.bound_m();
    index_pmf out;
    out.p.assign(n, 0.0);
    std::vector<char> taken(j.nx(), 0);  // x already captured by an earlier S_i
    for (std::size_t k = 1; k <= n; ++k) {
        const proposal p = z.lookup(k);
        const double level = m * p.u;
        kahan_sum mass;
        for (std::size_t x = 0; x < j.nx(); ++x) {
            if (!taken[x] && j.px()(x) > 0.0 && accepts(j, x, p.y, level)) {
                taken[x] = 1;
                mass.add(j.px()(x));
            }
        }
        out.p[k - 1] = mass.value();
    }
    kahan_sum rest;
    for (std::size_t x = 0; x < j.nx(); ++x) {
        if (!taken[x]) rest.add(j.px()(x));
    }
    out.overflow = rest.value();
    return out;
}

// Pre-filtered search for singular channels: keep only indices whose level
// clears g(y_i), then take the first kept proposal that x can generate at all.
// Output-identical to rejection_index on singular channels.
inline index_result singular_index(std::size_t x, const common_randomness& z,
                                   const joint_source& j, const singularity_report& report,
                                   std::size_t k_max) {
    if (!report.is_singular) throw not_singular("singular_index on a nonsingular channel");
    const double m = j.bound_m();
    for (std::size_t i = 1; i <= k_max; ++i) {
        const proposal p = z.lookup(i);
        if (m * p.u <= report.g[p.y] && j.ratio(x, p.y) > 0.0) {
            return index_result{i, p.y, i};
        }
    }
    throw exhausted(k_max);
}

inline index_result singular_index(std::size_t x, const common_randomness& z,
                                   const joint_source& j, const singularity_report& report) {
    return singular_index(x, z, j, report, default_k_max(j));
}

struct batch_result {
    std::vector<std::uint64_t> y_counts;  // histogram of accepted symbols
    running_stats k_stats;                // index moments; mean approaches M
    std::uint64_t trials = 0;
};

// Repeated channel simulation for one input symbol with per-trial seeds
// seed0 + t; feeds the goodness-of-fit and index-law checks.
inline batch_result simulate_batch(const joint_source& j, std::size_t x, std::uint64_t n_trials,
                                   std::uint64_t seed0) {
    batch_result out;
    out.y_counts.assign(j.ny(), 0);
    out.trials = n_trials;
    const std::size_t k_max = default_k_max(j);
    for (std::uint64_t t = 0; t < n_trials; ++t) {
        common_randomness z(seed0 + t, j);
        const index_result r = rejection_index(x, z, j, k_max);
        ++out.y_counts[r.y];
        out.k_stats.add(static_cast<double>(r.k));
    }
    return out;
}

}  // namespace ringtoss
