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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "ringtoss/gauss.hpp"
#include "ringtoss/stats.hpp"

using namespace ringtoss;

TEST_CASE("normal quantile inverts the cdf") {
    for (double p : {1e-10, 1e-6, 0.01, 0.2, 0.5, 0.77, 0.999, 1.0 - 1e-9}) {
        CHECK(normal_cdf(normal_quantile(p)) == Catch::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("truncated gaussian basics") {
    const gauss1d g{0.5, 2.0, 3.0};
    CHECK(g.pdf(3.5) == 0.0);
    CHECK(g.cdf(-3.0) == 0.0);
    CHECK(g.cdf(3.0) == 1.0);
    CHECK(g.mass(-3.0, 3.0) == Catch::Approx(1.0).margin(1e-12));
    for (double q : {0.01, 0.3, 0.5, 0.9}) {
        CHECK(g.cdf(g.quantile(q)) == Catch::Approx(q).margin(1e-10));
    }
}

TEST_CASE("width of the trivial pair") {
    const gauss1d g{0.0, 1.0, {}};
    const auto w = gaussian_width(g, g);
    CHECK(w(0.0) == 1.0);
    CHECK(w(0.5) == 1.0);
    CHECK(w(1.0) == 1.0);
    CHECK(w(1.0000001) == 0.0);
    CHECK(gaussian_csd(g, g) == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("narrow-vs-wide pair: worked values and Monte Carlo agreement") {
    const gauss1d p{0.3, 0.25, {}};
    const gauss1d q{0.0, 1.0, {}};
    const auto w = gaussian_width(p, q);
    SECTION("superlevel mass at level 1.5 matches sampling") {
        const double analytic = w(1.5);
        std::uint64_t hits = 0;
        const std::uint64_t n = 2000000;
        for (std::uint64_t i = 0; i < n; ++i) {
            const double z = normal_quantile(lane_uniform(0xF1A5, 0, i));
            if (w.log_ratio(z) >= std::log(1.5)) ++hits;
        }
        const double freq = static_cast<double>(hits) / static_cast<double>(n);
        const double sigma = std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(n));
        CHECK(freq == Catch::Approx(analytic).margin(3.5 * sigma));
    }
    SECTION("integral is one and the level map is monotone") {
        CHECK(gaussian_width_integral(w) == Catch::Approx(1.0).margin(1e-6));
        double prev = 1.0;
        for (int i = 0; i <= 1000; ++i) {
            const double level = w.max_level() * i / 1000.0;
            const double v = w(level);
            CHECK(v <= prev + 1e-12);
            prev = v;
        }
    }
    SECTION("csd sits in the divergence sandwich") {
        const double kl = gaussian_kl(p, q);
        const double cs = gaussian_csd(p, q);
        CHECK(cs >= kl - 1e-6);
        CHECK(cs <= kl + std::log2(kl + 1.0) + 1.0 + 1e-6);
    }
}

TEST_CASE("random bounded pairs integrate to one and respect the sandwich") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const double mp = -0.5 + lane_uniform(100 + s, 0, 0);
        const double mq = -0.5 + lane_uniform(100 + s, 0, 1);
        const double vp = 0.2 + 0.6 * lane_uniform(100 + s, 0, 2);
        const double vq = vp + 0.2 + lane_uniform(100 + s, 0, 3);
        const gauss1d p{mp, vp, {}};
        const gauss1d q{mq, vq, {}};
        const auto w = gaussian_width(p, q);
        REQUIRE(gaussian_width_integral(w) == Catch::Approx(1.0).margin(1e-6));
        const double kl = gaussian_kl(p, q);
        const double cs = gaussian_csd(p, q);
        REQUIRE(cs >= kl - 1e-6);
        REQUIRE(cs <= kl + std::log2(kl + 1.0) + 1.0 + 1e-6);
    }
    SECTION("common truncation keeps any variance order bounded") {
        const gauss1d p{0.4, 1.5, 4.0};
        const gauss1d q{0.0, 1.0, 4.0};
        const auto w = gaussian_width(p, q);
        CHECK(gaussian_width_integral(w) == Catch::Approx(1.0).margin(1e-6));
    }
}

TEST_CASE("perturbation shrinks the divergence toward zero") {
    const gauss1d q{0.0, 1.0, 6.0};
    double first = 0.0;
    double prev = kInf;
    for (double delta : {0.4, 0.2, 0.1}) {
        const double cs = gaussian_csd(gauss1d{delta, 1.0, 6.0}, q);
        CHECK(cs < prev);
        if (first == 0.0) first = cs;
        prev = cs;
    }
    CHECK(prev < 0.5 * first);  // decay is at least linear in the shift
}

TEST_CASE("unbounded or incompatible pairs are refused") {
    CHECK_THROWS_AS(gaussian_width(gauss1d{0.0, 1.0, {}}, gauss1d{0.0, 0.25, {}}),
                    unbounded_ratio);
    CHECK_THROWS_AS(gaussian_width(gauss1d{0.3, 1.0, {}}, gauss1d{0.0, 1.0, {}}),
                    unbounded_ratio);
    CHECK_THROWS_AS(gaussian_width(gauss1d{0.0, 1.0, {}}, gauss1d{0.0, 1.0, 4.0}),
                    not_absolutely_continuous);
    CHECK_THROWS_AS(gaussian_width(gauss1d{0.0, 1.0, 5.0}, gauss1d{0.0, 1.0, 4.0}),
                    not_absolutely_continuous);
}

TEST_CASE("additive-noise demo") {
    const awgn_channel ch;
    SECTION("worked two-step trace: reject then accept") {
        const auto trace = awgn_trace(ch, -0.5, {{0.3, 1.5}, {-0.4, 1.1}});
        REQUIRE(trace.size() == 2);
        CHECK_FALSE(trace[0].accept);
        CHECK(trace[1].accept);
    }
    SECTION("centered proposal under the ratio accepts at once") {
        const auto trace = awgn_trace(ch, 0.0, {{0.0, 1.0}});
        REQUIRE(trace.size() == 1);
        CHECK(trace[0].accept);
    }
    SECTION("seeded run decides by the same rule it reports") {
        const auto res = awgn_demo(ch, -0.5, 2024, 1u << 22);
        REQUIRE(res.k == res.trace.size());
        for (const auto& st : res.trace) {
            CHECK(st.accept == (ch.log_ratio(st.y, -0.5) >= std::log(st.level)));
        }
    }
    SECTION("input-side superlevel mass matches direct sampling") {
        for (const auto& [y, level] : std::vector<std::pair<double, double>>{
                 {0.3, 1.5}, {-0.4, 1.1}, {1.2, 2.0}}) {
            const double analytic = awgn_x_superlevel_mass(ch, y, level);
            const double log_l = std::log(level);
            std::uint64_t hits = 0;
            const std::uint64_t n = 100000;
            for (std::uint64_t i = 0; i < n; ++i) {
                const double x = ch.prior().quantile(lane_uniform(0xA3, 4, i));
                if (ch.log_ratio(y, x) >= log_l) ++hits;
            }
            const double freq = static_cast<double>(hits) / static_cast<double>(n);
            const double sigma =
                std::sqrt(std::max(analytic * (1.0 - analytic), 1e-12) / static_cast<double>(n));
            CHECK(freq == Catch::Approx(analytic).margin(3.5 * sigma + 1e-6));
        }
    }
    SECTION("accepted outputs follow the truncated posterior") {
        const gauss1d target = ch.conditional(-0.5);
        std::vector<double> edges;
        const int bins = 20;
        for (int b = 1; b < bins; ++b) {
            edges.push_back(target.quantile(static_cast<double>(b) / bins));
        }
        std::vector<std::uint64_t> counts(bins, 0);
        const std::uint64_t trials = 2000;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const auto res = awgn_demo(ch, -0.5, 0xBEE5 + t, 1u << 22);
            int b = 0;
            while (b < bins - 1 && res.y > edges[b]) ++b;
            ++counts[b];
        }
        const auto gof = chi_square_gof(counts, std::vector<double>(bins, 1.0 / bins));
        CHECK(gof.p_value > 1e-3);
    }
}
