// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace authlab {

// Nonnegative arbitrary-precision integer; holds every residue mod p and
// every exponent mod p-1 in the protocols. The limb machinery comes from
// boost::multiprecision; the canonical wire form is ours: lowercase hex,
// no leading zeros, "0" for zero.
using BigUint = boost::multiprecision::cpp_int;

std::string to_hex(const BigUint& value);

// Strict parse of the canonical form. Rejects empty strings, uppercase
// digits, non-hex characters and redundant leading zeros.
BigUint from_hex(std::string_view text);

// Big-endian octets, left-padded with zeros to exactly `width` bytes.
// Throws std::invalid_argument if the value does not fit.
std::vector<std::uint8_t> to_bytes_be(const BigUint& value, std::size_t width);

BigUint from_bytes_be(std::span<const std::uint8_t> bytes);

// Number of significant bits; 0 for zero.
std::size_t bit_length(const BigUint& value);

}  // namespace authlab
