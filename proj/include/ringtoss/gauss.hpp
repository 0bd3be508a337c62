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
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ringtoss/errors.hpp"
#include "ringtoss/math_util.hpp"
#include "ringtoss/stream.hpp"

namespace ringtoss {

inline double normal_cdf(double z) {
    return 0.5 * std::erfc(-z * 0.70710678118654752440084436210485);
}

// Acklam's rational approximation to the standard normal quantile, polished
// with one Halley step through erfc. Accurate to a few ulps on (0, 1).
inline double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -kInf;
        if (p == 1.0) return kInf;
        throw error("normal_quantile needs p in [0,1]");
    }
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * 3.141592653589793238462643383279503) *
                     std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

// One-dimensional Gaussian, optionally truncated to a symmetric interval
// [-B, B] and renormalized.
struct gauss1d {
    double mean = 0.0;
    double var = 1.0;
    std::optional<double> trunc;  // symmetric bound B > 0

    double sigma() const { return std::sqrt(var); }
    double lo() const { return trunc ? -*trunc : -kInf; }
    double hi() const { return trunc ? *trunc : kInf; }

    // Untruncated standard-normal mass of the support.
    double support_mass() const {
        if (!trunc) return 1.0;
        const double s = sigma();
        return normal_cdf((hi() - mean) / s) - normal_cdf((lo() - mean) / s);
    }

    double log_pdf(double z) const {
        if (z < lo() || z > hi()) return -kInf;
        const double d = (z - mean) / sigma();
        return -0.5 * d * d - std::log(sigma()) -
               0.918938533204672741780329736405618 -  // log sqrt(2 pi)
               std::log(support_mass());
    }
    double pdf(double z) const {
        const double lp = log_pdf(z);
        return lp == -kInf ? 0.0 : std::exp(lp);
    }

    // Probability of [a, b] (clipped to the support).
    double mass(double a, double b) const {
        a = std::max(a, lo());
        b = std::min(b, hi());
        if (!(a < b)) return 0.0;
        const double s = sigma();
        return (normal_cdf((b - mean) / s) - normal_cdf((a - mean) / s)) / support_mass();
    }

    double cdf(double z) const {
        if (z <= lo()) return 0.0;
        if (z >= hi()) return 1.0;
        const double s = sigma();
        const double base = trunc ? normal_cdf((lo() - mean) / s) : 0.0;
        return (normal_cdf((z - mean) / s) - base) / support_mass();
    }

    double quantile(double q) const {
        const double s = sigma();
        const double flo = trunc ? normal_cdf((lo() - mean) / s) : 0.0;
        const double fhi = trunc ? normal_cdf((hi() - mean) / s) : 1.0;
        const double z = normal_quantile(flo + q * (fhi - flo));
        return std::clamp(mean + s * z, lo(), hi());
    }

    friend bool operator==(const gauss1d&, const gauss1d&) = default;
};

// Numeric width function of a Gaussian pair: eval(l) is the q-measure of
// {z : p(z)/q(z) >= l}. The log-ratio is the quadratic A z^2 + B z + C on the
// support of p, so superlevel sets are an interval, a half-line, or the
// complement of an interval, all measured through the Gaussian CDF.
class numeric_width {
public:
    numeric_width(gauss1d p, gauss1d q) : p_(p), q_(q) {
        if (p_.trunc && q_.trunc && *p_.trunc > *q_.trunc) {
            throw not_absolutely_continuous("p is truncated wider than q");
        }
        if (!p_.trunc && q_.trunc) {
            throw not_absolutely_continuous("untruncated p against truncated q");
        }
        a_ = 0.5 / q_.var - 0.5 / p_.var;
        b_ = p_.mean / p_.var - q_.mean / q_.var;
        c_ = 0.5 * q_.mean * q_.mean / q_.var - 0.5 * p_.mean * p_.mean / p_.var +
             std::log(q_.sigma() / p_.sigma()) + std::log(q_.support_mass()) -
             std::log(p_.support_mass());
        if (!p_.trunc && a_ >= 0.0 && !(p_ == q_)) {
            throw unbounded_ratio(
                "density ratio unbounded: p must be narrower than q or truncated");
        }
        max_level_ = compute_max_level();
    }

    double operator()(double level) const {
        if (level <= 0.0) return 1.0;
        const double t = std::log(level);
        const double plo = p_.lo();
        const double phi = p_.hi();
        if (a_ == 0.0 && b_ == 0.0) {
            return t <= c_ ? q_.mass(plo, phi) : 0.0;
        }
        if (a_ == 0.0) {
            const double z = (t - c_) / b_;
            return b_ > 0.0 ? q_.mass(std::max(plo, z), phi) : q_.mass(plo, std::min(phi, z));
        }
        const double disc = b_ * b_ - 4.0 * a_ * (c_ - t);
        if (a_ < 0.0) {
            if (disc <= 0.0) return 0.0;
            const double s = std::sqrt(disc);
            const double z1 = (-b_ + s) / (2.0 * a_);
            const double z2 = (-b_ - s) / (2.0 * a_);
            return q_.mass(std::max(plo, z1), std::min(phi, z2));
        }
        if (disc <= 0.0) return q_.mass(plo, phi);
        const double s = std::sqrt(disc);
        const double z1 = (-b_ - s) / (2.0 * a_);
        const double z2 = (-b_ + s) / (2.0 * a_);
        return q_.mass(plo, std::min(phi, z1)) + q_.mass(std::max(plo, z2), phi);
    }

    double max_level() const { return max_level_; }
    double log_ratio(double z) const {
        if (z < p_.lo() || z > p_.hi()) return -kInf;
        return (a_ * z + b_) * z + c_;
    }

private:
    double compute_max_level() const {
        double best = -kInf;
        auto consider = [&](double z) {
            if (std::isfinite(z)) best = std::max(best, (a_ * z + b_) * z + c_);
        };
        consider(p_.lo());
        consider(p_.hi());
        if (a_ < 0.0) {
            const double vertex = -b_ / (2.0 * a_);
            if (vertex >= p_.lo() && vertex <= p_.hi()) consider(vertex);
        }
        if (a_ == 0.0 && b_ == 0.0) best = c_;
        if (best == -kInf) throw unbounded_ratio("no finite ratio maximum");
        return std::exp(best);
    }

    gauss1d p_;
    gauss1d q_;
    double a_ = 0.0, b_ = 0.0, c_ = 0.0;
    double max_level_ = 0.0;
};

inline numeric_width gaussian_width(const gauss1d& p, const gauss1d& q) {
    return numeric_width(p, q);
}

namespace detail {

// Local error estimates below this are accepted regardless of the halved
// tolerance: cusps of the width function (level -> 0 or -> max) otherwise
// drive the per-segment target below roundoff while the segment's true
// contribution is already negligible.
inline constexpr double kQuadErrFloor = 1e-18;

// Adaptive Simpson with an absolute tolerance. Throws quadrature_failure if
// the depth budget runs out before the local error target is met.
inline double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                               double fl, double fm, double fh, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid);
    const double mh = 0.5 * (mid + hi);
    const double flm = f(lm);
    const double fmh = f(mh);
    const double whole = (hi - lo) / 6.0 * (fl + 4.0 * fm + fh);
    const double left = (mid - lo) / 6.0 * (fl + 4.0 * flm + fm);
    const double right = (hi - mid) / 6.0 * (fm + 4.0 * fmh + fh);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= std::max(tol, kQuadErrFloor)) return left + right + err;
    if (depth <= 0) throw quadrature_failure("adaptive quadrature depth exhausted");
    return adaptive_simpson(f, lo, mid, fl, flm, fm, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, mid, hi, fm, fmh, fh, 0.5 * tol, depth - 1);
}

// The width function has a root-type singularity in its derivative as the
// level approaches the ratio maximum, so the top of the range is pre-split
// geometrically before handing segments to the adaptive rule.
inline double integrate_width(const std::function<double(double)>& f, double max_level,
                              double tol) {
    std::vector<double> cuts{0.0};
    for (int j = 1; j <= 10; ++j) cuts.push_back(max_level * (1.0 - std::pow(2.0, -j)));
    cuts.push_back(max_level);
    kahan_sum total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        if (!(hi > lo)) continue;
        const double mid = 0.5 * (lo + hi);
        total.add(adaptive_simpson(f, lo, hi, f(lo), f(mid), f(hi),
                                   tol / static_cast<double>(cuts.size()), 52));
    }
    return total.value();
}

}  // namespace detail

inline constexpr double kGaussQuadTol = 1e-6;

// D_CS of a Gaussian pair in bits, by adaptive quadrature of -w log2 w.
inline double gaussian_csd(const gauss1d& p, const gauss1d& q) {
    const numeric_width w = gaussian_width(p, q);
    auto f = [&](double level) { return -xlog2x(w(level)); };
    return detail::integrate_width(f, w.max_level(), kGaussQuadTol);
}

// Integral of the width itself; equals 1 up to quadrature error.
inline double gaussian_width_integral(const numeric_width& w) {
    auto f = [&](double level) { return w(level); };
    return detail::integrate_width(f, w.max_level(), kGaussQuadTol);
}

// KL(p || q) between untruncated Gaussians, bits.
inline double gaussian_kl(const gauss1d& p, const gauss1d& q) {
    return kLog2E * (0.5 * ((p.var + (p.mean - q.mean) * (p.mean - q.mean)) / q.var - 1.0 -
                            std::log(p.var / q.var)));
}

// Additive-noise channel Y = X + N with X ~ N(0, x_var), N ~ N(0, noise_var),
// everything truncated to [-bound, bound] so the density ratio is finite.
struct awgn_channel {
    double x_var = 0.75;
    double noise_var = 0.25;
    double bound = 4.0;

    gauss1d prior() const { return gauss1d{0.0, x_var, bound}; }
    gauss1d marginal() const { return gauss1d{0.0, x_var + noise_var, bound}; }
    gauss1d conditional(double x) const { return gauss1d{x, noise_var, bound}; }

    double log_ratio(double y, double x) const {
        return conditional(x).log_pdf(y) - marginal().log_pdf(y);
    }
    double ratio(double y, double x) const { return std::exp(log_ratio(y, x)); }

    // Uniform bound M on the density ratio: maximize over x with the inner
    // maximum over y taken at the clipped quadratic vertex.
    double bound_m() const {
        auto best_log_ratio = [&](double x) {
            const double y_var = x_var + noise_var;
            double y = x * y_var / (y_var - noise_var);
            y = std::clamp(y, -bound, bound);
            return log_ratio(y, x);
        };
        double best = -kInf;
        const int grid = 4096;
        double best_x = 0.0;
        for (int i = 0; i <= grid; ++i) {
            const double x = -bound + 2.0 * bound * i / grid;
            const double v = best_log_ratio(x);
            if (v > best) {
                best = v;
                best_x = x;
            }
        }
        double lo = std::max(-bound, best_x - 2.0 * bound / grid);
        double hi = std::min(bound, best_x + 2.0 * bound / grid);
        for (int it = 0; it < 200; ++it) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (best_log_ratio(m1) < best_log_ratio(m2)) {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        return std::exp(best_log_ratio(0.5 * (lo + hi)));
    }
};

struct trace_step {
    std::size_t i = 0;
    double y = 0.0;
    double level = 0.0;
    bool accept = false;
};

// Evaluate the acceptance rule on explicit (proposal, level) pairs.
inline std::vector<trace_step> awgn_trace(const awgn_channel& ch, double x,
                                          const std::vector<std::pair<double, double>>& steps) {
    std::vector<trace_step> out;
    out.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto [y, level] = steps[i];
        out.push_back(trace_step{i + 1, y, level, ch.log_ratio(y, x) >= std::log(level)});
    }
    return out;
}

struct awgn_demo_result {
    std::vector<trace_step> trace;
    std::size_t k = 0;
    double y = 0.0;
};

// Seeded continuous rejection run: proposals are inverse-CDF draws from the
// truncated marginal, levels are M * U_i. The trace records every step.
inline awgn_demo_result awgn_demo(const awgn_channel& ch, double x, std::uint64_t seed,
                                  std::size_t k_max) {
    const gauss1d py = ch.marginal();
    const double m = ch.bound_m();
    awgn_demo_result out;
    for (std::size_t i = 1; i <= k_max; ++i) {
        const double y = py.quantile(lane_uniform(seed, 0, i));
        const double u = lane_uniform(seed, 1, i);
        const double level = m * u;
        const bool accept = ch.log_ratio(y, x) >= std::log(level);
        out.trace.push_back(trace_step{i, y, level, accept});
        if (accept) {
            out.k = i;
            out.y = y;
            return out;
        }
    }
    throw exhausted(k_max);
}

// x-space superlevel interval S = {x : r(y|x) >= level} and its prior mass;
// r is unimodal in x, so the set is found by a golden-section peak search
// followed by bisection on both flanks.
struct x_interval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty = true;
};

inline x_interval awgn_x_superlevel(const awgn_channel& ch, double y, double level) {
    const double log_l = std::log(level);
    auto f = [&](double x) { return ch.log_ratio(y, x) - log_l; };
    double lo = -ch.bound;
    double hi = ch.bound;
    double a = lo;
    double b = hi;
    for (int it = 0; it < 200; ++it) {
        const double m1 = a + (b - a) * 0.381966011250105;
        const double m2 = b - (b - a) * 0.381966011250105;
        if (f(m1) < f(m2)) {
            a = m1;
        } else {
            b = m2;
        }
    }
    const double peak = 0.5 * (a + b);
    if (f(peak) < 0.0) return x_interval{};
    auto bisect = [&](double inside, double outside) {
        if (f(outside) >= 0.0) return outside;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (inside + outside);
            (f(mid) >= 0.0 ? inside : outside) = mid;
        }
        return inside;
    };
    x_interval s;
    s.empty = false;
    s.lo = bisect(peak, lo);
    s.hi = bisect(peak, hi);
    return s;
}

inline double awgn_x_superlevel_mass(const awgn_channel& ch, double y, double level) {
    const x_interval s = awgn_x_superlevel(ch, y, level);
    return s.empty ? 0.0 : ch.prior().mass(s.lo, s.hi);
}

}  // namespace ringtoss
