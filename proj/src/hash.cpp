// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#include "authlab/hash.hpp"

#include <stdexcept>

#include <openssl/evp.h>

namespace authlab {

Digest sha256(std::span<const std::uint8_t> data) {
    Digest out{};
    std::size_t len = 0;
    if (EVP_Q_digest(nullptr, "SHA256", nullptr, data.data(), data.size(), out.data(), &len) != 1 ||
        len != out.size()) {
        throw std::runtime_error("sha256: digest failed");
    }
    return out;
}

Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> data) {
    Digest out{};
    std::size_t len = 0;
    if (EVP_Q_mac(nullptr, "HMAC", nullptr, "SHA256", nullptr, key.data(), key.size(),
                  data.data(), data.size(), out.data(), out.size(), &len) == nullptr ||
        len != out.size()) {
        throw std::runtime_error("hmac_sha256: mac failed");
    }
    return out;
}

}  // namespace authlab
