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
#include <vector>

#include "ringtoss/presets.hpp"
#include "ringtoss/product.hpp"
#include "ringtoss/width.hpp"

using namespace ringtoss;

TEST_CASE("single-copy product equals the base functional information") {
    for (const auto& j : {make_bsc(0.11), make_bec(0.3), make_identity(4),
                          make_uniform_additive(8, 3)}) {
        CHECK(product_functional_information(j, 1) ==
              Catch::Approx(functional_information(j)).margin(1e-12));
    }
    const auto skew = build_joint(discrete_dist({0.3, 0.7}), {{0.9, 0.1}, {0.2, 0.8}});
    CHECK(product_functional_information(skew, 1) ==
          Catch::Approx(functional_information(skew)).margin(1e-12));
}

TEST_CASE("structured paths match generic enumeration") {
    SECTION("symmetric binary base") {
        for (std::size_t n : {2u, 4u, 8u}) {
            const double fast = detail::product_fi_bsc(0.11, n);
            const double slow = detail::product_fi_generic(make_bsc(0.11), n);
            CHECK(fast == Catch::Approx(slow).margin(1e-12));
        }
    }
    SECTION("erasure base") {
        const auto j = make_bec(0.3);
        const auto rep = detect_singular(j);
        for (std::size_t n : {2u, 4u, 6u}) {
            const double fast = detail::product_fi_singular(j, rep, n);
            const double slow = detail::product_fi_generic(j, n);
            CHECK(fast == Catch::Approx(slow).margin(1e-11));
        }
    }
    SECTION("skewed nonsingular base goes through enumeration") {
        const auto skew = build_joint(discrete_dist({0.3, 0.7}), {{0.9, 0.1}, {0.2, 0.8}});
        const double two = product_functional_information(skew, 2);
        CHECK(two == Catch::Approx(detail::product_fi_generic(skew, 2)).margin(1e-12));
        CHECK(two >= 2.0 * mutual_information(skew));
    }
}

TEST_CASE("enumeration refuses oversized blocks") {
    CHECK_THROWS_AS(detail::product_fi_generic(make_uniform_additive(8, 3), 8), too_large);
}

TEST_CASE("singular bases carry zero redundancy at any block length") {
    const std::vector<std::size_t> ns{1, 2, 4, 8, 16, 64, 256, 1024, 4096, 16384};
    SECTION("erasure") {
        for (const auto& pt : redundancy_curve(make_bec(0.3), ns)) {
            CHECK(std::abs(pt.redundancy) <= 1e-9);
        }
    }
    SECTION("identity") {
        for (const auto& pt : redundancy_curve(make_identity(4), ns)) {
            CHECK(std::abs(pt.redundancy) <= 1e-9);
        }
    }
    SECTION("cyclic additive") {
        for (const auto& pt : redundancy_curve(make_uniform_additive(8, 3), ns)) {
            CHECK(std::abs(pt.redundancy) <= 1e-9);
        }
    }
}

TEST_CASE("nonsingular redundancy grows like half a log") {
    const std::vector<std::size_t> ns{16, 64, 256, 1024, 4096, 16384};
    const auto curve = redundancy_curve(make_bsc(0.11), ns);
    for (const auto& pt : curve) {
        CHECK(pt.redundancy >= 0.0);  // superadditivity
    }
    const auto& last = curve.back();
    REQUIRE(last.n == 16384);
    CHECK(last.normalized >= 0.40);
    CHECK(last.normalized <= 0.60);
}
