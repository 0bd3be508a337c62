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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ringtoss/presets.hpp"
#include "ringtoss/stream.hpp"
#include "ringtoss/width.hpp"

using namespace ringtoss;

namespace {

discrete_dist random_dist(std::uint64_t seed, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = -std::log(lane_uniform(seed, 8, i));
    const double s = std::accumulate(v.begin(), v.end(), 0.0);
    for (auto& x : v) x /= s;
    return discrete_dist(v);
}

joint_source random_joint(std::uint64_t seed, std::size_t nx, std::size_t ny) {
    std::uint64_t ctr = 0;
    auto draw = [&] { return lane_uniform(seed, 9, ctr++); };
    std::vector<double> px(nx);
    for (auto& v : px) v = -std::log(draw());
    double s = 0.0;
    for (double v : px) s += v;
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

}  // namespace

TEST_CASE("width function of hand-checked pairs") {
    SECTION("equal pair is the unit box") {
        const discrete_dist p({0.5, 0.5});
        const auto w = width_of_pair(p, p);
        CHECK(w(0.0) == 1.0);
        CHECK(w(1.0) == 1.0);
        CHECK(w(1.0000001) == 0.0);
        CHECK(w.integral() == Catch::Approx(1.0).margin(1e-15));
        CHECK(csd(w) == Catch::Approx(0.0).margin(1e-15));
    }
    SECTION("worked pair (1/2,1/2) vs (1/4,3/4)") {
        const auto w = width_of_pair(discrete_dist({0.5, 0.5}), discrete_dist({0.25, 0.75}));
        REQUIRE(w.levels().size() == 2);
        CHECK(w.levels()[0] == Catch::Approx(2.0 / 3.0).margin(1e-15));
        CHECK(w.levels()[1] == Catch::Approx(2.0).margin(1e-15));
        CHECK(w(0.5) == 1.0);
        CHECK(w(2.0 / 3.0) == 1.0);   // ">= level" keeps the mass at the level
        CHECK(w(0.7) == Catch::Approx(0.25).margin(1e-15));
        CHECK(w(2.0) == Catch::Approx(0.25).margin(1e-15));
        CHECK(w.integral() == Catch::Approx(1.0).margin(1e-15));
        CHECK(csd(w) == Catch::Approx(2.0 / 3.0).margin(1e-12));
    }
    SECTION("point mass vs uniform") {
        const auto w = width_of_pair(discrete_dist({1.0, 0.0}), discrete_dist({0.5, 0.5}));
        CHECK(w(0.0) == 1.0);
        CHECK(w(0.5) == Catch::Approx(0.5).margin(1e-15));
        CHECK(w(2.0) == Catch::Approx(0.5).margin(1e-15));
        CHECK(w(2.1) == 0.0);
        CHECK(w.integral() == Catch::Approx(1.0).margin(1e-15));
        CHECK(csd(w) == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("absolute continuity is enforced") {
        CHECK_THROWS_AS(width_of_pair(discrete_dist({0.5, 0.5}), discrete_dist({1.0, 0.0})),
                        not_absolutely_continuous);
    }
}

TEST_CASE("per-output width functions") {
    SECTION("identity channel") {
        const auto j = make_identity(4);
        const auto w = width_given_y(j, 1);
        CHECK(w(0.0) == 1.0);
        CHECK(w(1e-9) == Catch::Approx(0.25).margin(1e-15));
        CHECK(w(4.0) == Catch::Approx(0.25).margin(1e-15));
        CHECK(w.integral() == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("erasure output equals the marginal") {
        const auto j = make_bec(0.3);
        const auto w = width_given_y(j, 2);
        CHECK(w(0.5) == 1.0);
        CHECK(w(1.0) == 1.0);
        CHECK(w(1.0000001) == 0.0);
    }
    SECTION("non-erased output halves above zero") {
        const auto j = make_bec(0.3);
        const auto w = width_given_y(j, 0);
        CHECK(w(0.0) == 1.0);
        CHECK(w(1e-12) == Catch::Approx(0.5).margin(1e-15));
        CHECK(w(2.0) == Catch::Approx(0.5).margin(1e-15));
        CHECK(w(2.0000001) == 0.0);
    }
    SECTION("unsupported symbol") {
        const auto j = build_joint(discrete_dist({1.0, 0.0}), {{1.0, 0.0}, {0.0, 1.0}});
        CHECK_THROWS_AS(width_given_y(j, 1), unsupported_symbol);
    }
}

TEST_CASE("width invariants on random inputs") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto p = random_dist(2000 + s, 2 + s % 7);
        const auto q = random_dist(9000 + s, 2 + s % 7);
        const auto w = width_of_pair(p, q);
        REQUIRE(w(0.0) == 1.0);
        REQUIRE(w.integral() == Catch::Approx(1.0).margin(1e-12));
        const auto& ms = w.masses();
        REQUIRE(std::is_sorted(ms.rbegin(), ms.rend()));
        REQUIRE(ms.back() == 0.0);
        REQUIRE(std::is_sorted(w.levels().begin(), w.levels().end()));
    }
}

TEST_CASE("csd dominates kl and the sandwich holds") {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const auto p = random_dist(3000 + s, 2 + s % 6);
        const auto q = random_dist(4000 + s, 2 + s % 6);
        const auto r = kl_csd_sandwich_check(p, q);
        REQUIRE(r.holds);
        REQUIRE(r.csd >= r.kl - 1e-12);
    }
    const auto r = kl_csd_sandwich_check(discrete_dist({0.5, 0.5}), discrete_dist({0.25, 0.75}));
    CHECK(r.kl == Catch::Approx(0.20752).margin(1e-5));
    CHECK(r.csd == Catch::Approx(0.66667).margin(1e-5));
    CHECK(r.holds);
}

TEST_CASE("csd is invariant under joint relabeling") {
    const std::uint64_t seed = 77;
    const auto p = random_dist(seed, 6);
    const auto q = random_dist(seed + 1, 6);
    std::vector<std::size_t> perm{3, 0, 5, 1, 4, 2};
    std::vector<double> pp(6), qq(6);
    for (std::size_t i = 0; i < 6; ++i) {
        pp[perm[i]] = p(i);
        qq[perm[i]] = q(i);
    }
    CHECK(csd(width_of_pair(discrete_dist(pp), discrete_dist(qq))) ==
          Catch::Approx(csd(width_of_pair(p, q))).margin(1e-12));
}

TEST_CASE("functional information on known channels") {
    CHECK(functional_information(make_identity(4)) == Catch::Approx(2.0).margin(1e-12));
    CHECK(functional_information(make_bec(0.3)) == Catch::Approx(0.7).margin(1e-12));
    const auto indep = build_joint(discrete_dist({0.5, 0.5}), {{0.2, 0.8}, {0.2, 0.8}});
    CHECK(functional_information(indep) == Catch::Approx(0.0).margin(1e-12));
    CHECK(functional_information(make_uniform_additive(8, 3)) ==
          Catch::Approx(std::log2(8.0 / 3.0)).margin(1e-12));
}

TEST_CASE("functional information dominates mutual information; equality iff singular") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto j = random_joint(5000 + s, 2 + s % 4, 2 + (s / 4) % 4);
        const double mi = mutual_information(j);
        const double fi = functional_information(j);
        REQUIRE(fi >= mi - 1e-9);
        const bool singular = detect_singular(j).is_singular;
        if (singular) REQUIRE(std::abs(fi - mi) <= 1e-9);
        if (std::abs(fi - mi) > 1e-9) REQUIRE_FALSE(singular);
    }
    // Singular families hit equality exactly.
    for (double eps : {0.1, 0.3, 0.5, 0.9}) {
        const auto j = make_bec(eps);
        CHECK(std::abs(functional_information(j) - mutual_information(j)) <= 1e-12);
    }
}

TEST_CASE("cross-entropy oracle sits in the unit-nat window above I_F") {
    SECTION("independent pair costs nothing") {
        const auto indep = build_joint(discrete_dist({0.5, 0.5}), {{0.2, 0.8}, {0.2, 0.8}});
        CHECK(cross_entropy_oracle(indep) == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("binary identity costs exactly two bits") {
        CHECK(cross_entropy_oracle(make_identity(2)) == Catch::Approx(2.0).margin(1e-12));
    }
    SECTION("window holds on random joints") {
        for (std::uint64_t s = 0; s < 200; ++s) {
            const auto j = random_joint(6000 + s, 2 + s % 4, 2 + (s / 4) % 4);
            const double gap = cross_entropy_oracle(j) - functional_information(j);
            REQUIRE(gap >= -1e-12);
            REQUIRE(gap <= kLog2E + 1e-9);
        }
    }
    SECTION("bsc window") {
        const auto j = make_bsc(0.11);
        const double fi = functional_information(j);
        const double ce = cross_entropy_oracle(j);
        CHECK(ce >= fi);
        CHECK(ce <= fi + kLog2E);
    }
}
