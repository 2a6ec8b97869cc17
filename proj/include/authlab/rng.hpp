// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "authlab/biguint.hpp"

namespace authlab {

// Deterministic random source. All protocol randomness flows through one of
// these, passed explicitly; there is no global RNG state anywhere.
//
// The core generator is std::mt19937_64, whose output sequence for a given
// seed is fixed by the C++ standard, so transcripts replay bit-for-bit across
// platforms. Range reduction is done by rejection sampling on raw 64-bit
// words rather than std::uniform_int_distribution, which is not portable.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // `n` bytes, each u64 emitted big-endian.
    std::vector<std::uint8_t> next_bytes(std::size_t n);

    // Uniform draw from [lo, hi], both bounds inclusive.
    BigUint uniform(const BigUint& lo, const BigUint& hi);

    // Independent substream named by `label`. Forking depends only on the
    // original seed and the label, never on how much has been drawn.
    SeededRng fork(std::string_view label) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace authlab
