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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ringtoss/codec.hpp"
#include "ringtoss/gauss.hpp"
#include "ringtoss/presets.hpp"
#include "ringtoss/product.hpp"
#include "ringtoss/rational.hpp"
#include "ringtoss/sampler.hpp"
#include "ringtoss/stats.hpp"
#include "ringtoss/width.hpp"

// Self-test suite: every distributional contract, coding bound and exact
// identity the library promises, runnable at two depths. "quick" covers the
// exact identities and small property runs; "full" adds the Monte Carlo
// contracts and the large product-channel scan.
namespace ringtoss::verify {

struct check_result {
    bool pass = true;
    std::string detail;
};

// Collects the first failure reason and a compact detail trail.
class checker {
public:
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok_ = false;
            if (first_fail_.empty()) first_fail_ = what;
        }
    }
    void note(const std::string& s) {
        if (!detail_.empty()) detail_ += ", ";
        detail_ += s;
    }
    check_result result() const {
        check_result r;
        r.pass = ok_;
        r.detail = ok_ ? detail_ : first_fail_;
        return r;
    }

private:
    bool ok_ = true;
    std::string first_fail_;
    std::string detail_;
};

inline std::string fmt(double v, int digits = 6) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

// Seeded Dirichlet-style joint for property runs.
inline joint_source random_joint(std::uint64_t seed, std::size_t nx, std::size_t ny) {
    std::uint64_t ctr = 0;
    auto draw = [&] { return lane_uniform(seed, 11, ctr++); };
    std::vector<double> px(nx);
    double s = 0.0;
    for (auto& v : px) {
        v = -std::log(draw());
        s += v;
    }
    for (auto& v : px) v /= s;
    std::vector<std::vector<double>> rows(nx, std::vector<double>(ny));
    for (auto& row : rows) {
        double rs = 0.0;
        for (auto& v : row) {
            v = -std::log(draw());
            rs += v;
        }
        for (auto& v : row) v /= rs;
    }
    return build_joint(discrete_dist(px), rows);
}

// ---------------------------------------------------------------------------
// Criterion 1: the closed-form index cross-entropy exceeds the functional
// information by at most log2 e, for random joints.
inline check_result check_oracle_window_exact() {
    checker c;
    double max_gap = 0.0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto j = random_joint(0xC1000 + s, 2 + s % 7, 2 + (s / 7) % 7);
        const double gap = cross_entropy_oracle(j) - functional_information(j);
        max_gap = std::max(max_gap, gap);
        c.require(gap >= -1e-12, "gap negative at joint " + std::to_string(s));
        c.require(gap <= kLog2E + 1e-9, "gap above log2(e) at joint " + std::to_string(s));
    }
    c.note("200 joints, max gap " + fmt(max_gap) + " <= " + fmt(kLog2E));
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 2: the Monte Carlo mean of -log2 Q(K|Z) agrees with the closed
// form within three standard errors.
inline check_result check_oracle_window_monte_carlo() {
    checker c;
    const std::uint64_t trials = 100000;
    std::vector<std::pair<std::string, joint_source>> cases;
    cases.emplace_back("bsc:0.11", make_bsc(0.11));
    cases.emplace_back("random-4x4", random_joint(0xC2001, 4, 4));
    cases.emplace_back("random-5x3", random_joint(0xC2002, 5, 3));
    for (const auto& [name, j] : cases) {
        width_table table(j);
        const std::size_t k_max = default_k_max(j);
        running_stats nll;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const std::uint64_t trial_seed = 0xC2000000 + t;
            const std::size_t x = j.px().sample(lane_uniform(trial_seed, 2, 0));
            const common_randomness z(trial_seed, j);
            const auto r = rejection_index(x, z, j, k_max);
            nll.add(ring_toss_dist(z, j, table).neg_log2_prob(r.k));
        }
        const double oracle = cross_entropy_oracle(j);
        const double err = std::abs(nll.mean() - oracle);
        c.require(err <= 3.0 * nll.stderr_of_mean(),
                  name + ": |" + fmt(nll.mean()) + " - " + fmt(oracle) + "| > 3 se");
        const double fi = functional_information(j);
        c.require(nll.mean() <= fi + kLog2E + 3.0 * nll.stderr_of_mean(),
                  name + ": empirical cross-entropy above the coding window");
        c.note(name + " " + fmt(nll.mean()) + "~" + fmt(oracle));
    }
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 3: functional information collapses to mutual information exactly
// on singular channels and stays strictly above it on nonsingular ones.
inline check_result check_singular_equality() {
    checker c;
    for (double eps : {0.1, 0.3, 0.5, 0.9}) {
        const auto j = make_bec(eps);
        const double gap = std::abs(functional_information(j) - mutual_information(j));
        c.require(gap <= 1e-9, "bec:" + fmt(eps) + " gap " + fmt(gap));
    }
    for (std::size_t k : {2u, 4u, 8u}) {
        const auto j = make_identity(k);
        const double gap = std::abs(functional_information(j) - mutual_information(j));
        c.require(gap <= 1e-9, "identity:" + std::to_string(k) + " gap " + fmt(gap));
    }
    {
        const auto j = make_uniform_additive(8, 3);
        const double gap = std::abs(functional_information(j) - mutual_information(j));
        c.require(gap <= 1e-9, "uniform-additive:8:3 gap " + fmt(gap));
    }
    for (double p : {0.05, 0.11, 0.3}) {
        const auto j = make_bsc(p);
        const double gap = functional_information(j) - mutual_information(j);
        c.require(gap > 1e-6, "bsc:" + fmt(p) + " gap " + fmt(gap) + " not positive");
    }
    c.note("singular families equal, flip family separated");
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 4: KL <= D_CS <= KL + log2(KL+1) + 1 on random pairs, plus the
// hand-computed worked pair.
inline check_result check_divergence_sandwich() {
    checker c;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        std::uint64_t ctr = 0;
        auto draw = [&] { return lane_uniform(0xC4000 + s, 12, ctr++); };
        const std::size_t n = 2 + s % 7;
        std::vector<double> pv(n), qv(n);
        double ps = 0.0, qs = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            pv[i] = -std::log(draw());
            qv[i] = -std::log(draw());
            ps += pv[i];
            qs += qv[i];
        }
        for (auto& v : pv) v /= ps;
        for (auto& v : qv) v /= qs;
        const auto r = kl_csd_sandwich_check(discrete_dist(pv), discrete_dist(qv));
        c.require(r.holds, "sandwich failed at pair " + std::to_string(s));
    }
    const auto worked =
        kl_csd_sandwich_check(discrete_dist({0.5, 0.5}), discrete_dist({0.25, 0.75}));
    c.require(std::abs(worked.kl - 0.20752) <= 5e-6, "worked kl " + fmt(worked.kl, 8));
    c.require(std::abs(worked.csd - 0.66667) <= 5e-6, "worked csd " + fmt(worked.csd, 8));
    c.require(worked.holds, "worked pair sandwich");
    c.note("1000 pairs, worked pair (" + fmt(worked.kl) + ", " + fmt(worked.csd) + ")");
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 5: the noiseless channel recovers source coding: I_F = log2 k and
// the measured rate stays within the coding window.
inline check_result check_noiseless_source_coding() {
    checker c;
    double worst_excess = -kInf;
    for (std::size_t k = 2; k <= 16; ++k) {
        const auto j = make_identity(k);
        const double fi = functional_information(j);
        const double target = std::log2(static_cast<double>(k));
        c.require(std::abs(fi - target) <= 1e-9,
                  "identity:" + std::to_string(k) + " I_F " + fmt(fi, 12));
        const auto rep = measure_rate(j, 100000, 0xC5000000 + (k << 24));
        const double limit = target + kLog2E + 2.0 + 3.0 * rep.mean_length_stderr;
        worst_excess = std::max(worst_excess, rep.mean_length - limit);
        c.require(rep.mean_length <= limit,
                  "identity:" + std::to_string(k) + " mean length " + fmt(rep.mean_length));
    }
    c.note("k=2..16, worst margin " + fmt(-worst_excess) + " bits below the cap");
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 6: decoded outputs pass a chi-square test against the conditional
// law at every input of the three preset channels.
inline check_result check_simulation_gof() {
    checker c;
    std::vector<std::pair<std::string, joint_source>> cases;
    cases.emplace_back("bsc:0.11", make_bsc(0.11));
    cases.emplace_back("bec:0.3", make_bec(0.3));
    cases.emplace_back("uniform-additive:8:3", make_uniform_additive(8, 3));
    const std::uint64_t trials = 100000;
    double min_p = 1.0;
    for (const auto& [name, j] : cases) {
        width_table table(j);
        const std::size_t k_max = default_k_max(j);
        for (std::size_t x = 0; x < j.nx(); ++x) {
            std::vector<std::uint64_t> counts(j.ny(), 0);
            for (std::uint64_t t = 0; t < trials; ++t) {
                const common_randomness z(0xC6A40000 + (x << 20) + t, j);
                const auto enc = encode_detail(x, z, j, table, k_max);
                const auto dec = decode(enc.bits, z, j, table, k_max);
                c.require(dec.k == enc.k && dec.y == enc.y, name + ": decode mismatch");
                ++counts[dec.y];
            }
            const auto g = chi_square_gof(counts, j.conditional(x).pmf());
            min_p = std::min(min_p, g.p_value);
            c.require(g.p_value > 1e-3,
                      name + " x=" + std::to_string(x) + " p=" + fmt(g.p_value));
        }
    }
    c.note("3 presets, all inputs, min p " + fmt(min_p));
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 7: the accepted index is geometric with mean M regardless of the
// input symbol.
inline check_result check_geometric_index_law() {
    checker c;
    std::vector<std::pair<std::string, joint_source>> cases;
    cases.emplace_back("bsc:0.11", make_bsc(0.11));
    cases.emplace_back("bec:0.3", make_bec(0.3));
    cases.emplace_back("uniform-additive:8:3", make_uniform_additive(8, 3));
    const std::uint64_t per_x = 100000;
    for (const auto& [name, j] : cases) {
        const double m = j.bound_m();
        const double sd = std::sqrt(m * (m - 1.0));
        running_stats pooled;
        for (std::size_t x = 0; x < j.nx(); ++x) {
            const auto res = simulate_batch(j, x, per_x, 0xC7000000 + (x << 22));
            const double want = 3.0 * sd / std::sqrt(static_cast<double>(per_x));
            c.require(std::abs(res.k_stats.mean() - m) <= want,
                      name + " x=" + std::to_string(x) + " mean K " + fmt(res.k_stats.mean()) +
                          " vs M " + fmt(m));
            pooled.add(res.k_stats.mean());
        }
        c.note(name + " mean K " + fmt(pooled.mean()) + " ~ M " + fmt(m));
    }
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 8: the set-difference index law equals per-input enumeration
// exactly, and its entropy never beats the cross-entropy against the coding
// distribution.
inline check_result check_exact_index_law() {
    checker c;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto j = random_joint(0xC8000 + s, 3, 3 + s % 3);
        const common_randomness z(0xC8F00 + s, j);
        const auto pmf = exact_index_dist(z, j, 8);
        double overflow = 0.0;
        std::vector<double> by_enum(8, 0.0);
        for (std::size_t x = 0; x < j.nx(); ++x) {
            bool found = false;
            for (std::size_t i = 1; i <= 8 && !found; ++i) {
                const proposal p = z.lookup(i);
                if (accepts(j, x, p.y, j.bound_m() * p.u)) {
                    by_enum[i - 1] += j.px()(x);
                    found = true;
                }
            }
            if (!found) overflow += j.px()(x);
        }
        for (std::size_t k = 0; k < 8; ++k) {
            c.require(std::abs(pmf.p[k] - by_enum[k]) <= 1e-15,
                      "index mass mismatch at z " + std::to_string(s));
        }
        c.require(std::abs(pmf.overflow - overflow) <= 1e-15,
                  "overflow mismatch at z " + std::to_string(s));

        // Gibbs: extend until the whole input mass is captured, then compare
        // entropy with the cross-entropy against the coding distribution.
        std::size_t n = 8;
        auto full = pmf;
        while (full.overflow > 0.0 && n < 4096) {
            n *= 2;
            full = exact_index_dist(z, j, n);
        }
        c.require(full.overflow == 0.0, "input mass not exhausted at z " + std::to_string(s));
        width_table table(j);
        const ring_toss_dist dist(z, j, table);
        double entropy_p = 0.0;
        double cross = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            const double p = full.p[k - 1];
            if (p <= 0.0) continue;
            entropy_p -= p * std::log2(p);
            cross += p * dist.neg_log2_prob(k);
        }
        c.require(entropy_p <= cross + 1e-9,
                  "entropy above cross-entropy at z " + std::to_string(s));
    }
    c.note("20 joints: exact match to 1e-15, Gibbs holds");
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 9: the coding distribution is normalized: exact telescoping in
// rational arithmetic and a geometric decay of the unexplained tail.
inline check_result check_coding_distribution_normalization() {
    checker c;
    std::vector<std::pair<std::string, joint_source>> cases;
    cases.emplace_back("bsc:0.11", make_bsc(0.11));
    cases.emplace_back("uniform-additive:8:3", make_uniform_additive(8, 3));
    for (const auto& [name, j] : cases) {
        width_table table(j);
        const double m = j.bound_m();
        running_stats tail_at_32;
        for (std::uint64_t s = 0; s < 25; ++s) {
            const common_randomness z(0xC9000 + s, j);
            const ring_toss_dist dist(z, j, table);
            std::vector<double> probs;
            for (std::uint64_t i = 1; i <= 32; ++i) probs.push_back(dist.accept_prob(i));
            const rational_telescope tele(probs);
            for (std::size_t n : {1u, 2u, 4u, 8u, 16u, 32u}) {
                c.require(tele.partial_sum(n) == 1 - tele.tail_product(n),
                          name + ": telescoping not exact at n=" + std::to_string(n));
            }
            bigrat prev(1);
            for (std::size_t n = 1; n <= 32; ++n) {
                const bigrat t = tele.tail_product(n);
                c.require(t <= prev, name + ": tail not monotone at z " + std::to_string(s));
                prev = t;
            }
            tail_at_32.add(static_cast<double>(tele.tail_product(32)));
        }
        const double expect = std::pow(1.0 - 1.0 / m, 32);
        c.require(tail_at_32.mean() <=
                      expect + 3.0 * tail_at_32.stderr_of_mean() + 1e-12,
                  name + ": mean tail " + fmt(tail_at_32.mean()) + " above " + fmt(expect));
        c.note(name + " tail(32) " + fmt(tail_at_32.mean()) + " ~ " + fmt(expect));
    }
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 10: codec round trips are exact, lengths follow the interval-code
// formula pointwise, and fixed-stream codeword sets are prefix-free.
inline check_result check_codec_roundtrip_prefix_free() {
    checker c;
    std::vector<std::pair<std::string, joint_source>> cases;
    cases.emplace_back("bsc:0.11", make_bsc(0.11));
    cases.emplace_back("bec:0.3", make_bec(0.3));
    cases.emplace_back("uniform-additive:8:3", make_uniform_additive(8, 3));
    cases.emplace_back("identity:4", make_identity(4));
    std::uint64_t done = 0;
    for (const auto& [name, j] : cases) {
        width_table table(j);
        const std::size_t k_max = default_k_max(j);
        for (std::uint64_t t = 0; t < 2500; ++t) {
            const std::uint64_t seed = 0xCA000000 + 4099 * done++;
            const std::size_t x = j.px().sample(lane_uniform(seed, 3, 0));
            const common_randomness z(seed, j);
            const auto enc = encode_detail(x, z, j, table, k_max);
            const auto dec = decode(enc.bits, z, j, table, k_max);
            c.require(dec.k == enc.k && dec.y == enc.y, name + ": round trip broke");
            const double q = ring_toss_dist(z, j, table).prob(enc.k);
            c.require(static_cast<int>(enc.bits.size()) == ceil_neg_log2(q) + 1,
                      name + ": length off the interval-code formula");
        }
        for (std::uint64_t s = 0; s < 200; ++s) {
            const common_randomness z(0xCAFE00 + s, j);
            std::map<std::size_t, bitstring> words;
            for (std::size_t x = 0; x < j.nx(); ++x) {
                if (j.px()(x) == 0.0) continue;
                const auto enc = encode_detail(x, z, j, table, k_max);
                words[enc.k] = enc.bits;
            }
            for (const auto& [ka, wa] : words) {
                for (const auto& [kb, wb] : words) {
                    c.require(ka == kb || !wa.is_prefix_of(wb), name + ": prefix collision");
                }
            }
        }
    }
    c.note(std::to_string(done) + " round trips exact, no prefix collisions");
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 11: the singular pre-filtered search is output-identical to plain
// rejection search.
inline check_result check_singular_prefilter_equivalence() {
    checker c;
    std::vector<std::pair<std::string, joint_source>> cases;
    cases.emplace_back("bec:0.3", make_bec(0.3));
    cases.emplace_back("uniform-additive:8:3", make_uniform_additive(8, 3));
    std::uint64_t runs = 0;
    for (const auto& [name, j] : cases) {
        const auto rep = detect_singular(j);
        c.require(rep.is_singular, name + " not detected singular");
        for (std::uint64_t s = 0; s < 1000; ++s) {
            const common_randomness z(0xCB000 + s, j);
            for (std::size_t x = 0; x < j.nx(); ++x) {
                const auto a = rejection_index(x, z, j);
                const auto b = singular_index(x, z, j, rep);
                c.require(a.k == b.k && a.y == b.y, name + ": mismatch at seed " +
                                                        std::to_string(s) + " x " +
                                                        std::to_string(x));
                ++runs;
            }
        }
    }
    c.note(std::to_string(runs) + " searches identical");
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 12: per-dimension redundancy of product channels: zero for
// singular bases, half a log for the symmetric flip channel.
inline check_result check_asymptotic_redundancy_dichotomy() {
    checker c;
    {
        std::vector<std::size_t> ns;
        for (std::size_t n = 1; n <= 16384; n *= 2) ns.push_back(n);
        double worst = 0.0;
        for (const auto& pt : redundancy_curve(make_bec(0.3), ns)) {
            worst = std::max(worst, std::abs(pt.redundancy));
            c.require(std::abs(pt.redundancy) <= 1e-9,
                      "bec redundancy " + fmt(pt.redundancy) + " at n=" + std::to_string(pt.n));
        }
        c.note("bec worst |redundancy| " + fmt(worst));
    }
    {
        const std::vector<std::size_t> ns{16, 64, 256, 1024, 4096, 16384};
        const auto curve = redundancy_curve(make_bsc(0.11), ns);
        for (const auto& pt : curve) {
            c.require(pt.redundancy >= 0.0,
                      "bsc redundancy negative at n=" + std::to_string(pt.n));
        }
        const auto& last = curve.back();
        c.require(last.normalized >= 0.40 && last.normalized <= 0.60,
                  "bsc normalized redundancy " + fmt(last.normalized) + " at n=16384");
        c.note("bsc normalized " + fmt(last.normalized) + " at n=16384");
    }
    return c.result();
}

// ---------------------------------------------------------------------------
// Criterion 13: continuous module: width pdf normalization, divergence
// sandwich against the closed-form Gaussian KL, the worked two-step
// accept/reject trace, and input-set hit frequencies.
inline check_result check_gaussian_width_suite() {
    checker c;
    for (std::uint64_t s = 0; s < 20; ++s) {
        std::uint64_t ctr = 0;
        auto draw = [&] { return lane_uniform(0xCD000 + s, 13, ctr++); };
        const double mp = -0.5 + draw();
        const double mq = -0.5 + draw();
        const double vp = 0.2 + 0.6 * draw();
        const double vq = vp + 0.2 + draw();
        const gauss1d p{mp, vp, {}};
        const gauss1d q{mq, vq, {}};
        const auto w = gaussian_width(p, q);
        const double total = gaussian_width_integral(w);
        c.require(std::abs(total - 1.0) <= 1e-6,
                  "width integral " + fmt(total, 9) + " at pair " + std::to_string(s));
        const double kl = gaussian_kl(p, q);
        const double cs = gaussian_csd(p, q);
        c.require(cs >= kl - 1e-6 && cs <= kl + std::log2(kl + 1.0) + 1.0 + 1e-6,
                  "gaussian sandwich failed at pair " + std::to_string(s));
    }
    {
        const gauss1d p{0.3, 0.25, {}};
        const gauss1d q{0.0, 1.0, {}};
        const double kl = gaussian_kl(p, q);
        const double cs = gaussian_csd(p, q);
        c.require(cs >= kl - 1e-6 && cs <= kl + std::log2(kl + 1.0) + 1.0 + 1e-6,
                  "narrow-wide pair sandwich");
        c.note("csd " + fmt(cs) + " in [" + fmt(kl) + ", " + fmt(kl + std::log2(kl + 1.0) + 1.0) +
               "]");
    }
    const awgn_channel ch;
    {
        const auto trace = awgn_trace(ch, -0.5, {{0.3, 1.5}, {-0.4, 1.1}});
        c.require(!trace[0].accept && trace[1].accept,
                  "worked trace decided " + std::to_string(trace[0].accept) + "," +
                      std::to_string(trace[1].accept));
        c.note("worked trace reject,accept");
    }
    {
        const std::uint64_t n = 100000;
        for (const auto& [y, level] :
             std::vector<std::pair<double, double>>{{0.3, 1.5}, {-0.4, 1.1}}) {
            const double analytic = awgn_x_superlevel_mass(ch, y, level);
            const double log_l = std::log(level);
            std::uint64_t hits = 0;
            for (std::uint64_t i = 0; i < n; ++i) {
                const double x = ch.prior().quantile(lane_uniform(0xCD77, 4, i));
                if (ch.log_ratio(y, x) >= log_l) ++hits;
            }
            const double freq = static_cast<double>(hits) / static_cast<double>(n);
            const double sigma =
                std::sqrt(std::max(analytic * (1.0 - analytic), 1e-12) / static_cast<double>(n));
            c.require(std::abs(freq - analytic) <= 3.0 * sigma + 1e-6,
                      "hit frequency " + fmt(freq) + " vs mass " + fmt(analytic));
        }
        c.note("hit frequencies within 3 sigma at 1e5 draws");
    }
    return c.result();
}

// ---------------------------------------------------------------------------
// Extra quick identities beyond the headline criteria.
inline check_result check_width_normalization() {
    checker c;
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto j = random_joint(0xCE000 + s, 2 + s % 6, 2 + (s / 6) % 6);
        for (std::size_t y = 0; y < j.ny(); ++y) {
            if (!j.y_supported(y)) continue;
            const auto w = width_given_y(j, y);
            c.require(w(0.0) == 1.0, "w(0) != 1");
            c.require(std::abs(w.integral() - 1.0) <= 1e-12, "width integral drifted");
            c.require(w.max_level() <= j.bound_m() + 1e-12, "level above the ratio bound");
        }
    }
    c.note("300 joints, all per-output widths normalized");
    return c.result();
}

inline check_result check_float_telescoping() {
    checker c;
    const auto j = make_bsc(0.3);
    width_table table(j);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const common_randomness z(0xCF000 + s, j);
        const ring_toss_dist dist(z, j, table);
        kahan_sum sum;
        for (std::uint64_t k = 1; k <= 24; ++k) sum.add(dist.prob(k));
        c.require(std::abs(sum.value() - dist.partial_sum(24)) <= 1e-12,
                  "float telescoping drifted at seed " + std::to_string(s));
    }
    c.note("20 streams to 1e-12");
    return c.result();
}

struct named_check {
    const char* name;
    bool quick;
    check_result (*fn)();
};

inline const std::vector<named_check>& all_checks() {
    static const std::vector<named_check> checks{
        {"oracle-window-exact", true, check_oracle_window_exact},
        {"oracle-window-monte-carlo", false, check_oracle_window_monte_carlo},
        {"singular-equality", true, check_singular_equality},
        {"divergence-sandwich", true, check_divergence_sandwich},
        {"noiseless-source-coding", false, check_noiseless_source_coding},
        {"simulation-gof", false, check_simulation_gof},
        {"geometric-index-law", false, check_geometric_index_law},
        {"exact-index-law", true, check_exact_index_law},
        {"coding-distribution-normalization", true, check_coding_distribution_normalization},
        {"codec-roundtrip-prefix-free", false, check_codec_roundtrip_prefix_free},
        {"singular-prefilter-equivalence", false, check_singular_prefilter_equivalence},
        {"asymptotic-redundancy-dichotomy", false, check_asymptotic_redundancy_dichotomy},
        {"gaussian-width-suite", false, check_gaussian_width_suite},
        {"width-normalization", true, check_width_normalization},
        {"float-telescoping", true, check_float_telescoping},
    };
    return checks;
}

// Runs the selected depth, printing one line per check and a wall-time
// summary. Returns the name of the first failing check, empty if all passed.
inline std::string run_checks(bool quick_only, std::ostream& out) {
    std::string first_fail;
    int ran = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& chk : all_checks()) {
        if (quick_only && !chk.quick) continue;
        const auto t0 = std::chrono::steady_clock::now();
        check_result r;
        try {
            r = chk.fn();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out << (r.pass ? "[PASS] " : "[FAIL] ") << chk.name << " (" << fmt(secs, 3) << "s): "
            << r.detail << "\n";
        ++ran;
        if (!r.pass && first_fail.empty()) first_fail = chk.name;
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << ran << " checks in " << fmt(total, 3) << "s\n";
    return first_fail;
}

}  // namespace ringtoss::verify
