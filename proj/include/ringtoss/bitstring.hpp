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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ringtoss/errors.hpp"

namespace ringtoss {

// A finite bit sequence. Codewords stay well under a few thousand bits, so
// one byte per bit keeps the code simple.
class bitstring {
public:
    bitstring() = default;
    explicit bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    void push_back(int bit) { bits_.push_back(bit ? 1 : 0); }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i]; }
    bool operator==(const bitstring& o) const { return bits_ == o.bits_; }

    bool is_prefix_of(const bitstring& o) const {
        if (size() > o.size()) return false;
        for (std::size_t i = 0; i < size(); ++i) {
            if (bits_[i] != o.bits_[i]) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(size());
        for (auto b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    // Wire framing: 16-bit big-endian bit count, then the bits packed
    // MSB-first and zero-padded to a whole byte. The prefix-free property
    // lives inside the code; storage needs byte alignment.
    std::vector<std::uint8_t> to_frame() const {
        if (size() > 0xFFFF) throw malformed_codeword("codeword too long to frame");
        std::vector<std::uint8_t> out;
        out.reserve(2 + (size() + 7) / 8);
        out.push_back(static_cast<std::uint8_t>(size() >> 8));
        out.push_back(static_cast<std::uint8_t>(size() & 0xFF));
        std::uint8_t cur = 0;
        int filled = 0;
        for (auto b : bits_) {
            cur = static_cast<std::uint8_t>((cur << 1) | b);
            if (++filled == 8) {
                out.push_back(cur);
                cur = 0;
                filled = 0;
            }
        }
        if (filled > 0) out.push_back(static_cast<std::uint8_t>(cur << (8 - filled)));
        return out;
    }

    static bitstring from_frame(const std::vector<std::uint8_t>& frame) {
        if (frame.size() < 2) throw malformed_codeword("frame shorter than its header");
        const std::size_t n = (static_cast<std::size_t>(frame[0]) << 8) | frame[1];
        if (frame.size() != 2 + (n + 7) / 8) {
            throw malformed_codeword("frame length does not match its bit count");
        }
        bitstring b;
        for (std::size_t i = 0; i < n; ++i) {
            b.push_back((frame[2 + i / 8] >> (7 - i % 8)) & 1);
        }
        return b;
    }

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace ringtoss
