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

// Acceptance suite: runs every distributional, coding and exactness contract
// at its stated tolerance and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "ringtoss/verify.hpp"

int main() {
    using namespace ringtoss::verify;
    struct criterion {
        const char* label;
        check_result (*fn)();
    };
    const criterion criteria[] = {
        {"01 index cross-entropy window, closed form", check_oracle_window_exact},
        {"02 index cross-entropy window, Monte Carlo", check_oracle_window_monte_carlo},
        {"03 singular channels: I_F equals I", check_singular_equality},
        {"04 KL / channel-simulation divergence sandwich", check_divergence_sandwich},
        {"05 noiseless source coding recovery", check_noiseless_source_coding},
        {"06 simulated outputs match the conditional law", check_simulation_gof},
        {"07 geometric index law, input-independent", check_geometric_index_law},
        {"08 exact conditional index law", check_exact_index_law},
        {"09 coding distribution normalization, exact", check_coding_distribution_normalization},
        {"10 codec round trip, lengths, prefix-freeness", check_codec_roundtrip_prefix_free},
        {"11 singular pre-filter equivalence", check_singular_prefilter_equivalence},
        {"12 product-channel redundancy dichotomy", check_asymptotic_redundancy_dichotomy},
        {"13 gaussian width, sandwich and demo trace", check_gaussian_width_suite},
    };

    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        check_result r;
        try {
            r = c.fn();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %s (%.1fs): %s\n", r.pass ? "PASS" : "FAIL", c.label, secs,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/13 criteria passed in %.1fs\n", 13 - failures, total);
    return failures;
}
