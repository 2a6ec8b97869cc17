// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#include "authlab/biguint.hpp"

#include <stdexcept>

#include "authlab/errors.hpp"

namespace authlab {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

std::string to_hex(const BigUint& value) {
    if (value.sign() < 0) {
        throw std::invalid_argument("to_hex: negative value");
    }
    if (value.is_zero()) {
        return "0";
    }
    std::string out;
    BigUint v = value;
    while (!v.is_zero()) {
        out.push_back(kHexDigits[static_cast<unsigned>(v & 0xf)]);
        v >>= 4;
    }
    return {out.rbegin(), out.rend()};
}

BigUint from_hex(std::string_view text) {
    if (text.empty()) {
        throw ParseError("hex integer: empty string");
    }
    if (text.size() > 1 && text.front() == '0') {
        throw ParseError("hex integer: leading zero is not canonical");
    }
    BigUint value = 0;
    for (char c : text) {
        const int d = hex_value(c);
        if (d < 0) {
            throw ParseError(std::string("hex integer: bad character '") + c + "'");
        }
        value <<= 4;
        value += d;
    }
    return value;
}

std::vector<std::uint8_t> to_bytes_be(const BigUint& value, std::size_t width) {
    if (value.sign() < 0) {
        throw std::invalid_argument("to_bytes_be: negative value");
    }
    const std::size_t needed = (bit_length(value) + 7) / 8;
    if (needed > width) {
        throw std::invalid_argument("to_bytes_be: value does not fit in width");
    }
    std::vector<std::uint8_t> out(width, 0);
    BigUint v = value;
    for (std::size_t i = 0; i < width && !v.is_zero(); ++i) {
        out[width - 1 - i] = static_cast<std::uint8_t>(v & 0xff);
        v >>= 8;
    }
    return out;
}

BigUint from_bytes_be(std::span<const std::uint8_t> bytes) {
    BigUint value = 0;
    for (std::uint8_t b : bytes) {
        value <<= 8;
        value += b;
    }
    return value;
}

std::size_t bit_length(const BigUint& value) {
    if (value.is_zero()) {
        return 0;
    }
    return boost::multiprecision::msb(value) + 1;
}

}  // namespace authlab
