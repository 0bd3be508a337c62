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
#include <utility>
#include <vector>

#include "ringtoss/errors.hpp"
#include "ringtoss/math_util.hpp"
#include "ringtoss/prob.hpp"

namespace ringtoss {

// Superlevel-mass function of a density ratio: w(l) = Q(dP/dQ >= l).
//
// Stored as a right-closed step function. levels_ are the ascending jump
// points; masses_ has one more entry, with masses_[j] the value on
// (levels_[j-1], levels_[j]] (levels_[-1] := 0). masses_[0] = 1 covers
// [0, levels_[0]] and masses_.back() = 0 covers (levels_.back(), inf).
// The ">= l" convention means the value AT a jump point still includes the
// mass sitting at that ratio level; the sampler relies on exactly this.
//
// w is a pdf in l: the stepwise integral is 1.
class width_function {
public:
    // Build from (ratio value, mass) pairs whose masses sum to 1. Duplicate
    // levels are merged; near-duplicates within 1e-12 absolute-or-relative
    // collapse onto their first representative (product channels produce
    // levels far above 1, where an absolute tolerance alone misses reordered
    // floating-point products).
    static width_function from_level_masses(std::vector<std::pair<double, double>> vm) {
        std::sort(vm.begin(), vm.end());
        std::vector<double> levels;
        std::vector<double> level_mass;
        for (const auto& [v, m] : vm) {
            if (m <= 0.0) continue;
            if (!levels.empty() &&
                v - levels.back() <= 1e-12 * std::max(1.0, std::abs(levels.back()))) {
                level_mass.back() += m;
            } else {
                levels.push_back(v);
                level_mass.push_back(m);
            }
        }
        width_function w;
        w.levels_ = std::move(levels);
        const std::size_t m = w.levels_.size();
        w.masses_.assign(m + 1, 0.0);
        kahan_sum tail;  // mass strictly above the current level
        for (std::size_t jj = m; jj-- > 0;) {
            w.masses_[jj + 1] = tail.value();
            tail.add(level_mass[jj]);
        }
        // At or below the lowest breakpoint every atom qualifies, so the
        // value there is exactly 1; the accumulated total only differs from
        // it by roundoff.
        w.masses_[0] = 1.0;
        return w;
    }

    // w(level) with the ">= level" convention.
    double operator()(double level) const {
        auto it = std::lower_bound(levels_.begin(), levels_.end(), level);
        return masses_[static_cast<std::size_t>(it - levels_.begin())];
    }

    double max_level() const { return levels_.empty() ? 0.0 : levels_.back(); }
    const std::vector<double>& levels() const { return levels_; }
    const std::vector<double>& masses() const { return masses_; }

    // Exact stepwise integral of f(w) dl over [0, max_level]; beyond the last
    // level w is 0. f must map 0 to 0 for this to be the full integral.
    template <class F>
    double integrate(F&& f) const {
        kahan_sum s;
        double prev = 0.0;
        for (std::size_t j = 0; j < levels_.size(); ++j) {
            s.add(f(masses_[j]) * (levels_[j] - prev));
            prev = levels_[j];
        }
        return s.value();
    }

    double integral() const {
        return integrate([](double w) { return w; });
    }

private:
    std::vector<double> levels_;
    std::vector<double> masses_;
};

// Width function of p against q over the support of q.
inline width_function width_of_pair(const discrete_dist& p, const discrete_dist& q) {
    if (p.size() != q.size()) throw dimension_mismatch("width_of_pair size mismatch");
    std::vector<std::pair<double, double>> vm;
    vm.reserve(q.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (q(i) > 0.0) {
            vm.emplace_back(p(i) / q(i), q(i));
        } else if (p(i) > 0.0) {
            throw not_absolutely_continuous("p has mass where q does not, index " +
                                            std::to_string(i));
        }
    }
    return width_function::from_level_masses(std::move(vm));
}

// Width function of P_{X|Y=y} against P_X. By Bayes the thresholded quantity
// is the channel density ratio r(y|x), so the breakpoints are exactly the
// stored ratio values -- the sampler's acceptance test and this function see
// identical doubles.
inline width_function width_given_y(const joint_source& j, std::size_t y) {
    if (y >= j.ny() || !j.y_supported(y)) {
        throw unsupported_symbol("output symbol " + std::to_string(y) +
                                 " has zero marginal probability");
    }
    std::vector<std::pair<double, double>> vm;
    vm.reserve(j.nx());
    for (std::size_t x = 0; x < j.nx(); ++x) {
        if (j.px()(x) > 0.0) vm.emplace_back(j.ratio(x, y), j.px()(x));
    }
    return width_function::from_level_masses(std::move(vm));
}

// Eagerly built per-output width table; read-only after construction.
class width_table {
public:
    explicit width_table(const joint_source& j) {
        widths_.reserve(j.ny());
        for (std::size_t y = 0; y < j.ny(); ++y) {
            widths_.push_back(j.y_supported(y) ? width_given_y(j, y)
                                               : width_function::from_level_masses({{0.0, 1.0}}));
        }
    }
    const width_function& operator[](std::size_t y) const { return widths_[y]; }

private:
    std::vector<width_function> widths_;
};

// Channel simulation divergence: differential entropy of the width pdf, in bits.
inline double csd(const width_function& w) {
    return w.integrate([](double v) { return -xlog2x(v); });
}

struct sandwich_result {
    double kl = 0.0;
    double csd = 0.0;
    bool holds = false;
};

// KL <= D_CS <= KL + log2(KL + 1) + 1.
inline sandwich_result kl_csd_sandwich_check(const discrete_dist& p, const discrete_dist& q) {
    sandwich_result r;
    r.kl = kl_divergence(p, q);
    r.csd = csd(width_of_pair(p, q));
    r.holds = (r.kl - 1e-9 <= r.csd) && (r.csd <= r.kl + std::log2(r.kl + 1.0) + 1.0 + 1e-9);
    return r;
}

namespace detail {

struct rate_info {
    double i_f = 0.0;           // functional information, bits
    double cross_entropy = 0.0;  // closed-form E[-log2 Q(K|Z)], bits
};

// Shared per-output sweep. The cross-entropy is
//   I_F - M * E_Y int_0^1 (1 - w_Y(M u)) log2(1 - w_Y(M u)) du,
// and substituting l = M u turns the inner integral into the exact stepwise
// integral of (1 - w) log2(1 - w) over [0, M] (the region above the last
// breakpoint has w = 0 and contributes nothing).
inline rate_info compute_rate_info(const joint_source& j, const width_table& table) {
    rate_info out;
    kahan_sum i_f;
    kahan_sum penalty;
    for (std::size_t y = 0; y < j.ny(); ++y) {
        const double py = j.py()(y);
        if (py <= 0.0) continue;
        const width_function& w = table[y];
        i_f.add(py * csd(w));
        penalty.add(-py * w.integrate([](double v) { return one_minus_xlog2(v); }));
    }
    out.i_f = i_f.value();
    out.cross_entropy = out.i_f + penalty.value();
    return out;
}

}  // namespace detail

// I_F(X;Y) = E_Y[ D_CS(P_{X|Y} || P_X) ], bits.
inline double functional_information(const joint_source& j) {
    width_table table(j);
    return detail::compute_rate_info(j, table).i_f;
}

// Exact expected codeword ideal length E[-log2 Q(K|Z)] of the index coding
// distribution; always within [I_F, I_F + log2 e].
inline double cross_entropy_oracle(const joint_source& j) {
    width_table table(j);
    return detail::compute_rate_info(j, table).cross_entropy;
}

}  // namespace ringtoss
