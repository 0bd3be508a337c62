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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ringtoss/errors.hpp"
#include "ringtoss/math_util.hpp"
#include "ringtoss/prob.hpp"
#include "ringtoss/width.hpp"

namespace ringtoss {

struct redundancy_point {
    std::size_t n = 0;
    double i_f_n = 0.0;       // functional information of the n-fold product
    double n_i = 0.0;         // n * I(X;Y)
    double redundancy = 0.0;  // i_f_n - n_i
    double normalized = 0.0;  // redundancy / log2(n), 0 at n = 1
};

namespace detail {

// Oracle path: enumerate all input and output blocks. Exists to validate the
// structured paths below, so it is deliberately capped.
inline double product_fi_generic(const joint_source& base, std::size_t n) {
    const std::size_t nx = base.nx();
    const std::size_t ny = base.ny();
    double budget = 1.0;
    for (std::size_t i = 0; i < n; ++i) budget *= static_cast<double>(nx * ny);
    if (budget > static_cast<double>(1u << 20)) {
        throw too_large("product enumeration over budget; use a structured base or smaller n");
    }

    std::vector<std::size_t> ydig(n, 0);
    std::vector<std::size_t> xdig(n, 0);
    kahan_sum total;
    for (;;) {
        double pyn = 1.0;
        for (std::size_t i = 0; i < n; ++i) pyn *= base.py()(ydig[i]);
        if (pyn > 0.0) {
            std::vector<std::pair<double, double>> vm;
            std::fill(xdig.begin(), xdig.end(), 0);
            for (;;) {
                double mass = 1.0;
                double ratio = 1.0;
                for (std::size_t i = 0; i < n; ++i) {
                    mass *= base.px()(xdig[i]);
                    ratio *= base.ratio(xdig[i], ydig[i]);
                }
                if (mass > 0.0) vm.emplace_back(ratio, mass);
                std::size_t pos = 0;
                while (pos < n && ++xdig[pos] == nx) xdig[pos++] = 0;
                if (pos == n) break;
            }
            total.add(pyn * csd(width_function::from_level_masses(std::move(vm))));
        }
        std::size_t pos = 0;
        while (pos < n && ++ydig[pos] == ny) ydig[pos++] = 0;
        if (pos == n) break;
    }
    return total.value();
}

// Singular base: the block ratio is prod_i g(y_i) wherever it is nonzero, so
// each per-block width has a single positive level l with mass 1/l and
// csd = log2 l = sum_i log2 g(y_i). Averaging over blocks collapses to
// n * E_Y[log2 g(Y)].
inline double product_fi_singular(const joint_source& base, const singularity_report& rep,
                                  std::size_t n) {
    kahan_sum per_symbol;
    for (std::size_t y = 0; y < base.ny(); ++y) {
        if (base.y_supported(y)) per_symbol.add(base.py()(y) * std::log2(rep.g[y]));
    }
    return static_cast<double>(n) * per_symbol.value();
}

struct bsc_shape {
    bool ok = false;
    double p = 0.0;
};

inline bsc_shape match_bsc(const joint_source& base) {
    bsc_shape s;
    if (base.nx() != 2 || base.ny() != 2) return s;
    if (base.px()(0) != 0.5 || base.px()(1) != 0.5) return s;
    if (base.channel(0, 0) != base.channel(1, 1) || base.channel(0, 1) != base.channel(1, 0)) {
        return s;
    }
    s.ok = true;
    s.p = base.channel(0, 1);
    return s;
}

// Symmetric binary base: every output block has the same width function, with
// one ratio class per Hamming distance d, level 2^n p^d (1-p)^(n-d) and mass
// C(n,d) 2^-n. Levels and tail masses live in the log2 domain (they overflow
// and underflow doubles long before n reaches 16384). For a class with level
// l, mass m, inclusive tail T and exclusive tail w = T - m, the entropy
// contribution is
//   l * (-m log2 T - w log2(T / w)),
// which is the Abel-summed form of the stepwise integral; both products
// l * m and l * w are at most 1, so they are formed by exp2 of log sums.
inline double product_fi_bsc(double p, std::size_t n) {
    const double nn = static_cast<double>(n);
    const double l_match = std::log2(2.0 * (1.0 - p));
    const double l_flip = std::log2(2.0 * p);
    auto log2_choose = [&](double d) {
        return (std::lgamma(nn + 1.0) - std::lgamma(d + 1.0) - std::lgamma(nn - d + 1.0)) /
               0.6931471805599453094172321214581766;
    };

    // Class order: descending level. For p < 1/2 the level falls as the
    // distance grows, so descending level means ascending d.
    const bool level_falls_with_d = l_match > l_flip;
    kahan_sum total;
    double log_tail_excl = -kInf;
    for (std::size_t step = 0; step <= n; ++step) {
        const std::size_t d = level_falls_with_d ? step : n - step;
        const double dd = static_cast<double>(d);
        const double log_level = (nn - dd) * l_match + dd * l_flip;
        const double log_mass = log2_choose(dd) - nn;
        const double log_tail_incl = log2_add_exp2(log_mass, log_tail_excl);
        double term = std::exp2(log_level + log_mass) * (-log_tail_incl);
        if (log_tail_excl != -kInf) {
            term -= std::exp2(log_level + log_tail_excl) * (log_tail_incl - log_tail_excl);
        }
        total.add(term);
        log_tail_excl = log_tail_incl;
    }
    return total.value();
}

}  // namespace detail

// Functional information of the n-fold i.i.d. product of the base channel.
// Dispatches to exact structured paths (singular bases, symmetric binary
// bases) and falls back to capped enumeration otherwise.
inline double product_functional_information(const joint_source& base, std::size_t n) {
    if (n == 0) return 0.0;
    const singularity_report rep = detect_singular(base);
    if (rep.is_singular) return detail::product_fi_singular(base, rep, n);
    const detail::bsc_shape s = detail::match_bsc(base);
    if (s.ok) return detail::product_fi_bsc(s.p, n);
    return detail::product_fi_generic(base, n);
}

inline std::vector<redundancy_point> redundancy_curve(const joint_source& base,
                                                      const std::vector<std::size_t>& n_values) {
    const double mi = mutual_information(base);
    std::vector<redundancy_point> out;
    out.reserve(n_values.size());
    for (std::size_t n : n_values) {
        redundancy_point pt;
        pt.n = n;
        pt.i_f_n = product_functional_information(base, n);
        pt.n_i = static_cast<double>(n) * mi;
        pt.redundancy = pt.i_f_n - pt.n_i;
        pt.normalized = n >= 2 ? pt.redundancy / std::log2(static_cast<double>(n)) : 0.0;
        out.push_back(pt);
    }
    return out;
}

}  // namespace ringtoss
