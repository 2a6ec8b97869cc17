// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#include "authlab/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

#include "authlab/errors.hpp"

namespace authlab {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string_view to_string(SchemeTag tag) {
    switch (tag) {
        case SchemeTag::HwangLi: return "hwang-li";
        case SchemeTag::Slh: return "slh";
        case SchemeTag::AwasthiLal: return "awasthi-lal";
        case SchemeTag::Improved: return "improved";
    }
    throw std::invalid_argument("unknown scheme tag");
}

SchemeTag scheme_from_string(std::string_view name) {
    if (name == "hwang-li") return SchemeTag::HwangLi;
    if (name == "slh") return SchemeTag::Slh;
    if (name == "awasthi-lal") return SchemeTag::AwasthiLal;
    if (name == "improved") return SchemeTag::Improved;
    throw ParseError("unknown scheme: " + std::string(name));
}

std::string_view to_string(IdPolicy policy) {
    return policy == IdPolicy::Strict ? "strict" : "permissive";
}

IdPolicy id_policy_from_string(std::string_view name) {
    if (name == "strict") return IdPolicy::Strict;
    if (name == "permissive") return IdPolicy::Permissive;
    throw ParseError("unknown id policy: " + std::string(name));
}

SystemParams make_system_params(Prime p, HashId hash, std::uint64_t delta_t_s, IdPolicy policy) {
    if (delta_t_s == 0) {
        throw std::invalid_argument("delta_t must be positive");
    }
    return SystemParams{std::move(p), hash, delta_t_s, policy};
}

ServerSecret make_server_secret(const SystemParams& params, SeededRng& rng) {
    ServerSecret secret;
    secret.x_s = rng.uniform(2, params.p.value() - 2);
    secret.red_key = rng.next_bytes(32);
    return secret;
}

void validate_server_secret(const ServerSecret& secret, const SystemParams& params) {
    if (secret.x_s < 2 || secret.x_s > params.p.value() - 2) {
        throw std::invalid_argument("server secret: x_s out of [2, p-2]");
    }
    if (secret.red_key.size() < 16) {
        throw std::invalid_argument("server secret: red key shorter than 16 bytes");
    }
}

Identity make_identity(std::string raw, const SystemParams& params) {
    Identity id;
    id.raw = std::move(raw);
    if (all_digits(id.raw)) {
        BigUint value = 0;
        for (char c : id.raw) {
            value *= 10;
            value += c - '0';
        }
        id.numeric = value % params.p.value();
    }
    return id;
}

bool luhn_valid(std::string_view digits) {
    if (!all_digits(digits)) {
        return false;
    }
    unsigned sum = 0;
    bool doubled = false;  // rightmost digit is not doubled
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        unsigned d = static_cast<unsigned>(*it - '0');
        if (doubled) {
            d *= 2;
            if (d > 9) d -= 9;
        }
        sum += d;
        doubled = !doubled;
    }
    return sum % 10 == 0;
}

BigUint t_exponent(Timestamp t, const BigUint& pw, HashId hash, const Prime& p) {
    if (pw >= p.value()) {
        throw std::invalid_argument("t_exponent: pw must be < p");
    }
    const std::size_t width = (bit_length(p.value()) + 7) / 8;
    std::vector<std::uint8_t> buf = to_bytes_be(pw, width);
    // T occupies the low 8 bytes of the PW-wide buffer; narrower moduli take
    // the low bytes of T.
    const std::size_t n = std::min<std::size_t>(8, width);
    for (std::size_t i = 0; i < n; ++i) {
        buf[width - 1 - i] ^= static_cast<std::uint8_t>((t.seconds >> (8 * i)) & 0xff);
    }
    (void)hash;  // single member enum; kept in the signature for the wire format
    const Digest digest = sha256(buf);
    return from_bytes_be(digest) % p.group_order();
}

BigUint t_exponent(Timestamp t, const BigUint& pw, const SystemParams& params) {
    return t_exponent(t, pw, params.hash, params.p);
}

BigUint red(const ServerSecret& secret, const Identity& id, const SystemParams& params) {
    if (!check_id_format(id, params)) {
        throw BadIdentityFormat("red: identity fails the active format policy");
    }
    const std::span<const std::uint8_t> raw_bytes(
        reinterpret_cast<const std::uint8_t*>(id.raw.data()), id.raw.size());
    const Digest mac = hmac_sha256(secret.red_key, raw_bytes);
    return from_bytes_be(mac) % (params.p.value() - 3) + 2;
}

bool check_id_format(const Identity& id, const SystemParams& params) {
    if (params.id_policy == IdPolicy::Strict) {
        return id.raw.size() == 12 && luhn_valid(id.raw);
    }
    return id.numeric.has_value() && *id.numeric >= 2 && *id.numeric <= params.p.value() - 2;
}

bool check_freshness(Timestamp t, Timestamp t_c, const SystemParams& params) {
    if (t_c < t) {
        return false;  // future-dated
    }
    return t_c.seconds - t.seconds <= params.delta_t_s;
}

std::string serialize_request(const LoginRequest& req) {
    nlohmann::json j;
    j["scheme"] = to_string(req.scheme);
    j["id"] = req.claimed_id;
    j["c1"] = to_hex(req.c1);
    j["c2"] = to_hex(req.c2);
    j["t"] = req.t.seconds;
    return j.dump();
}

LoginRequest deserialize_request(std::string_view bytes) {
    nlohmann::json j = nlohmann::json::parse(bytes, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object() || j.size() != 5) {
        throw MalformedRequest();
    }
    try {
        if (!j.at("t").is_number_unsigned() || !j.at("id").is_string()) {
            throw MalformedRequest();
        }
        LoginRequest req{
            scheme_from_string(j.at("scheme").get<std::string>()),
            j.at("id").get<std::string>(),
            from_hex(j.at("c1").get<std::string>()),
            from_hex(j.at("c2").get<std::string>()),
            Timestamp{j.at("t").get<std::uint64_t>()},
        };
        return req;
    } catch (const MalformedRequest&) {
        throw;
    } catch (const ParseError& e) {
        throw MalformedRequest(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw MalformedRequest(e.what());
    }
}

}  // namespace authlab
