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
#include <string>
#include <utility>
#include <vector>

#include "ringtoss/errors.hpp"
#include "ringtoss/math_util.hpp"

namespace ringtoss {

inline constexpr double kRowSumTol = 1e-9;
inline constexpr double kSingularTol = 1e-9;

// Finite distribution over indices 0..n-1. Entries must be nonnegative and sum
// to 1 within kRowSumTol; the stored pmf is renormalized by the exact input sum
// so the sum-to-one invariant holds to machine precision afterwards.
class discrete_dist {
public:
    explicit discrete_dist(std::vector<double> pmf) : pmf_(std::move(pmf)) {
        if (pmf_.empty()) throw dimension_mismatch("empty pmf");
        kahan_sum s;
        for (double p : pmf_) {
            if (!(p >= 0.0)) throw not_stochastic("negative or NaN pmf entry");
            s.add(p);
        }
        const double total = s.value();
        if (std::abs(total - 1.0) > kRowSumTol) {
            throw not_stochastic("pmf sums to " + std::to_string(total));
        }
        for (double& p : pmf_) p /= total;
        cdf_.reserve(pmf_.size());
        kahan_sum c;
        for (double p : pmf_) {
            c.add(p);
            cdf_.push_back(c.value());
        }
        cdf_.back() = 1.0;
    }

    std::size_t size() const { return pmf_.size(); }
    double operator()(std::size_t i) const { return pmf_[i]; }
    const std::vector<double>& pmf() const { return pmf_; }
    const std::vector<double>& cdf() const { return cdf_; }

    // Inverse-CDF map of a uniform u in [0,1): the smallest index i with u < F(i).
    std::size_t sample(double u) const {
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        if (it == cdf_.end()) --it;
        return static_cast<std::size_t>(it - cdf_.begin());
    }

private:
    std::vector<double> pmf_;
    std::vector<double> cdf_;
};

struct singularity_report {
    bool is_singular = false;
    std::vector<double> g;        // per output symbol; 0 where the marginal is 0
    double max_deviation = 0.0;   // max |ratio - g| / max(1, g) over the support
};

// Input distribution plus a row-stochastic channel, with the derived output
// marginal, density ratio r(y|x) = P(y|x)/P(y) and its uniform bound M.
class joint_source {
public:
    joint_source(discrete_dist px, std::vector<std::vector<double>> channel)
        : px_(std::move(px)), channel_(std::move(channel)), py_(derive_py()) {
        ratio_.assign(nx(), std::vector<double>(ny(), 0.0));
        bound_m_ = 0.0;
        for (std::size_t x = 0; x < nx(); ++x) {
            for (std::size_t y = 0; y < ny(); ++y) {
                if (py_(y) > 0.0) {
                    ratio_[x][y] = channel_[x][y] / py_(y);
                    if (px_(x) > 0.0) bound_m_ = std::max(bound_m_, ratio_[x][y]);
                }
            }
        }
        bound_m_ = std::max(bound_m_, 1.0);
    }

    std::size_t nx() const { return px_.size(); }
    std::size_t ny() const { return channel_.front().size(); }
    const discrete_dist& px() const { return px_; }
    const discrete_dist& py() const { return py_; }
    double channel(std::size_t x, std::size_t y) const { return channel_[x][y]; }
    const std::vector<double>& channel_row(std::size_t x) const { return channel_[x]; }
    // Density ratio r(y|x); reported as 0 for output symbols outside the
    // marginal support (the math only ever uses it P_Y-almost surely).
    double ratio(std::size_t x, std::size_t y) const { return ratio_[x][y]; }
    double bound_m() const { return bound_m_; }
    bool y_supported(std::size_t y) const { return py_(y) > 0.0; }

    // Conditional row P(Y|X=x) as a distribution (for goodness-of-fit tests).
    discrete_dist conditional(std::size_t x) const { return discrete_dist(channel_[x]); }

private:
    discrete_dist derive_py() const {
        const std::size_t cols = channel_.empty() ? 0 : channel_.front().size();
        if (channel_.size() != px_.size() || cols == 0) {
            throw dimension_mismatch("channel must have one row per input symbol");
        }
        for (std::size_t x = 0; x < channel_.size(); ++x) {
            if (channel_[x].size() != cols) {
                throw dimension_mismatch("ragged channel row " + std::to_string(x));
            }
            kahan_sum s;
            for (double p : channel_[x]) {
                if (!(p >= 0.0)) throw not_stochastic("negative channel entry");
                s.add(p);
            }
            if (std::abs(s.value() - 1.0) > kRowSumTol) {
                throw not_stochastic("channel row " + std::to_string(x) + " sums to " +
                                     std::to_string(s.value()));
            }
        }
        std::vector<double> py(cols, 0.0);
        for (std::size_t y = 0; y < cols; ++y) {
            kahan_sum s;
            for (std::size_t x = 0; x < channel_.size(); ++x) {
                s.add(px_(x) * channel_[x][y]);
            }
            py[y] = s.value();
        }
        return discrete_dist(std::move(py));
    }

    discrete_dist px_;
    std::vector<std::vector<double>> channel_;
    discrete_dist py_;
    std::vector<std::vector<double>> ratio_;
    double bound_m_ = 1.0;
};

inline joint_source build_joint(discrete_dist px, std::vector<std::vector<double>> channel) {
    return joint_source(std::move(px), std::move(channel));
}

// I(X;Y) in bits.
inline double mutual_information(const joint_source& j) {
    kahan_sum s;
    for (std::size_t x = 0; x < j.nx(); ++x) {
        if (j.px()(x) == 0.0) continue;
        for (std::size_t y = 0; y < j.ny(); ++y) {
            const double mass = j.px()(x) * j.channel(x, y);
            if (mass > 0.0) s.add(mass * std::log2(j.ratio(x, y)));
        }
    }
    return s.value();
}

inline double entropy(const discrete_dist& d) {
    kahan_sum s;
    for (std::size_t i = 0; i < d.size(); ++i) s.add(-xlog2x(d(i)));
    return s.value();
}

// KL(p || q) in bits; requires p absolutely continuous w.r.t. q.
inline double kl_divergence(const discrete_dist& p, const discrete_dist& q) {
    if (p.size() != q.size()) throw dimension_mismatch("kl_divergence size mismatch");
    kahan_sum s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p(i) > 0.0) {
            if (q(i) == 0.0) {
                throw not_absolutely_continuous("p has mass where q does not, index " +
                                                std::to_string(i));
            }
            s.add(p(i) * std::log2(p(i) / q(i)));
        }
    }
    return s.value();
}

// A channel is singular when r(y|x) is a function of y alone on the support of
// the joint. Deviation is measured relative to max(1, g) since ratios scale
// with the alphabet size. g(y) is taken from the first supported input symbol,
// so on exactly singular channels g equals every supported ratio bit for bit.
inline singularity_report detect_singular(const joint_source& j, double tol = kSingularTol) {
    singularity_report rep;
    rep.is_singular = true;
    rep.g.assign(j.ny(), 0.0);
    for (std::size_t y = 0; y < j.ny(); ++y) {
        if (!j.y_supported(y)) continue;
        bool have_g = false;
        for (std::size_t x = 0; x < j.nx(); ++x) {
            if (j.px()(x) * j.channel(x, y) <= 0.0) continue;
            const double r = j.ratio(x, y);
            if (!have_g) {
                rep.g[y] = r;
                have_g = true;
            } else {
                const double dev = std::abs(r - rep.g[y]) / std::max(1.0, rep.g[y]);
                rep.max_deviation = std::max(rep.max_deviation, dev);
                if (dev > tol) rep.is_singular = false;
            }
        }
    }
    return rep;
}

}  // namespace ringtoss
