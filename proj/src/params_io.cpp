// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#include "authlab/params_io.hpp"

#include <fstream>
#include <sstream>

#include "authlab/errors.hpp"

namespace authlab {

namespace {

std::string bytes_to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::vector<std::uint8_t> hex_to_bytes(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw ParseError("byte string: odd hex length");
    }
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw ParseError("byte string: bad hex character");
    };
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
    }
    return out;
}

}  // namespace

nlohmann::json params_to_json(const SystemParams& params) {
    return {{"p", to_hex(params.p.value())},
            {"hash", hash_name(params.hash)},
            {"delta_t_s", params.delta_t_s},
            {"id_policy", to_string(params.id_policy)}};
}

SystemParams params_from_json(const nlohmann::json& j) {
    try {
        if (j.at("hash").get<std::string>() != hash_name(HashId::Sha256)) {
            throw ParseError("params: unsupported hash");
        }
        const std::uint64_t delta = j.at("delta_t_s").get<std::uint64_t>();
        if (delta == 0) {
            throw ParseError("params: delta_t_s must be positive");
        }
        // Prime() re-runs the primality check on every load.
        return make_system_params(Prime(from_hex(j.at("p").get<std::string>())),
                                  HashId::Sha256, delta,
                                  id_policy_from_string(j.at("id_policy").get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("params: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("params: ") + e.what());
    }
}

nlohmann::json secret_to_json(const ServerSecret& secret) {
    return {{"x_s", to_hex(secret.x_s)}, {"red_key", bytes_to_hex(secret.red_key)}};
}

ServerSecret secret_from_json(const nlohmann::json& j, const SystemParams& params) {
    try {
        ServerSecret secret{from_hex(j.at("x_s").get<std::string>()),
                            hex_to_bytes(j.at("red_key").get<std::string>())};
        validate_server_secret(secret, params);
        return secret;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("secret: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("secret: ") + e.what());
    }
}

nlohmann::json credential_to_json(const Credential& cred, SchemeTag scheme) {
    nlohmann::json j{{"scheme", to_string(scheme)},
                     {"id", cred.id.raw},
                     {"pw", to_hex(cred.pw)}};
    if (cred.sid) {
        j["sid"] = to_hex(*cred.sid);
    }
    return j;
}

nlohmann::json outcome_to_json(const AttackOutcome& outcome) {
    return {{"attack", to_string(outcome.attack)},
            {"scheme", to_string(outcome.scheme)},
            {"succeeded", outcome.succeeded},
            {"detail", outcome.detail}};
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open for writing: " + path.string());
    }
    out << contents;
    if (!out.flush()) {
        throw Error("write failed: " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open: " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

}  // namespace authlab
