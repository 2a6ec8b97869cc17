// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace authlab {

// The protocols only need "some" one-way function f; the lab pins it to one
// concrete choice so transcripts are reproducible.
enum class HashId { Sha256 };

constexpr std::string_view hash_name(HashId) { return "sha2-256"; }

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);

// Keyed one-way map used to realize the server's secret redirect function.
Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> data);

}  // namespace authlab
