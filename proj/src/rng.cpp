// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#include "authlab/rng.hpp"

#include <stdexcept>

namespace authlab {

namespace {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<std::uint8_t> SeededRng::next_bytes(std::size_t n) {
    std::vector<std::uint8_t> out;
    out.reserve(n);
    while (out.size() < n) {
        std::uint64_t w = next_u64();
        for (int i = 7; i >= 0 && out.size() < n; --i) {
            out.push_back(static_cast<std::uint8_t>((w >> (8 * i)) & 0xff));
        }
    }
    return out;
}

BigUint SeededRng::uniform(const BigUint& lo, const BigUint& hi) {
    if (hi < lo) {
        throw std::invalid_argument("uniform: hi < lo");
    }
    const BigUint range = hi - lo;  // draw in [0, range]
    if (range.is_zero()) {
        return lo;
    }
    const std::size_t bits = bit_length(range);
    const std::size_t words = (bits + 63) / 64;
    const BigUint mask = (BigUint(1) << bits) - 1;
    for (;;) {
        BigUint v = 0;
        for (std::size_t w = 0; w < words; ++w) {
            v <<= 64;
            v += next_u64();
        }
        v &= mask;
        if (v <= range) {
            return lo + v;
        }
    }
}

SeededRng SeededRng::fork(std::string_view label) const {
    return SeededRng(splitmix64(seed_ ^ fnv1a64(label)));
}

}  // namespace authlab
