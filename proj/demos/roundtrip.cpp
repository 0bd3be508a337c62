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

// Minimal end-to-end use: simulate one channel output for a given input and
// ship it as a short prefix-free codeword.

#include <cstdio>

#include "ringtoss/codec.hpp"
#include "ringtoss/presets.hpp"

int main() {
    using namespace ringtoss;
    const auto channel = make_bsc(0.11);
    const std::uint64_t seed = 20260809;  // shared by both ends
    const std::size_t x = 0;

    // Sender side: find the accepted proposal index and encode it.
    const common_randomness z(seed, channel);
    const width_table widths(channel);
    const auto sent = encode_detail(x, z, channel, widths, default_k_max(channel));
    std::printf("sent %zu bits for index %zu: %s\n", sent.bits.size(), sent.k,
                sent.bits.to_string().c_str());

    // Receiver side: same seed, no knowledge of x.
    const common_randomness z_rx(seed, channel);
    const auto got = decode(sent.bits, z_rx, channel);
    std::printf("receiver sampled y = %zu (index %zu)\n", got.y, got.k);
    return got.k == sent.k ? 0 : 1;
}
