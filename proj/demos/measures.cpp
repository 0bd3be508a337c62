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

// Prints the information measures that bound the one-shot coding rate for a
// few channels, next to the naive geometric baseline.

#include <cstdio>
#include <string>
#include <vector>

#include "ringtoss/presets.hpp"
#include "ringtoss/width.hpp"

int main() {
    using namespace ringtoss;
    const std::vector<std::string> names{"bsc:0.11", "bec:0.3", "identity:4",
                                         "uniform-additive:8:3"};
    std::printf("%-22s %10s %10s %12s %8s %9s\n", "channel", "I", "I_F", "cross-ent", "naive",
                "singular");
    for (const auto& name : names) {
        const auto j = make_preset(name);
        const double naive = std::ceil(std::log2(j.bound_m())) + 1.0;
        std::printf("%-22s %10.5f %10.5f %12.5f %8.2f %9s\n", name.c_str(),
                    mutual_information(j), functional_information(j), cross_entropy_oracle(j),
                    naive, detect_singular(j).is_singular ? "yes" : "no");
    }
    return 0;
}
