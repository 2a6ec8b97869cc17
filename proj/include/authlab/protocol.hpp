// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "authlab/biguint.hpp"
#include "authlab/hash.hpp"
#include "authlab/modmath.hpp"

namespace authlab {

enum class IdPolicy { Strict, Permissive };

enum class SchemeTag { HwangLi, Slh, AwasthiLal, Improved };

std::string_view to_string(SchemeTag tag);
SchemeTag scheme_from_string(std::string_view name);

std::string_view to_string(IdPolicy policy);
IdPolicy id_policy_from_string(std::string_view name);

// Public system parameters. Everything here may appear in transcripts.
struct SystemParams {
    Prime p;
    HashId hash = HashId::Sha256;
    std::uint64_t delta_t_s = 60;  // freshness window, > 0
    IdPolicy id_policy = IdPolicy::Permissive;
};

SystemParams make_system_params(Prime p, HashId hash, std::uint64_t delta_t_s, IdPolicy policy);

// Server-held secrets: the exponent x_s and the key of the redirect map.
// Neither field may ever reach a transcript or any public artifact.
struct ServerSecret {
    BigUint x_s;
    std::vector<std::uint8_t> red_key;  // >= 16 bytes
};

ServerSecret make_server_secret(const SystemParams& params, SeededRng& rng);
void validate_server_secret(const ServerSecret& secret, const SystemParams& params);

// A user identity as typed at registration. `raw` is kept verbatim for the
// format check and the redirect map; `numeric` is its decimal value mod p,
// present only when `raw` is a pure digit string.
struct Identity {
    std::string raw;
    std::optional<BigUint> numeric;
};

Identity make_identity(std::string raw, const SystemParams& params);

// Standard Luhn checksum over a digit string.
bool luhn_valid(std::string_view digits);

struct Timestamp {
    std::uint64_t seconds = 0;
    auto operator<=>(const Timestamp&) const = default;
};

// The wire message. `claimed_id` carries the user ID for hwang-li,
// awasthi-lal and improved; for slh it carries the shadow identity in the
// canonical hex encoding (that scheme sends SID in place of ID).
struct LoginRequest {
    SchemeTag scheme;
    std::string claimed_id;
    BigUint c1;
    BigUint c2;
    Timestamp t;

    bool operator==(const LoginRequest&) const = default;
};

// f(T xor PW) mod p-1: PW as big-endian bytes padded to the width of p,
// the timestamp xor-ed into the low (rightmost) 8 bytes, hashed, and the
// digest reduced mod p-1. Requires pw < p.
BigUint t_exponent(Timestamp t, const BigUint& pw, HashId hash, const Prime& p);
BigUint t_exponent(Timestamp t, const BigUint& pw, const SystemParams& params);

// The secret redirect map SID = Red(ID): a keyed MAC over the raw identity
// bytes, reduced into [2, p-2]. Requires the identity to pass the active
// format policy.
BigUint red(const ServerSecret& secret, const Identity& id, const SystemParams& params);

// STRICT: exactly 12 decimal digits with a valid Luhn check digit.
// PERMISSIVE: numeric value in [2, p-2].
bool check_id_format(const Identity& id, const SystemParams& params);

// true iff 0 <= t_c - t <= delta_t. Future-dated requests never pass.
bool check_freshness(Timestamp t, Timestamp t_c, const SystemParams& params);

// Canonical JSON object with keys scheme, id, c1, c2, t. Two serializations
// of the same request are byte-identical.
std::string serialize_request(const LoginRequest& req);
LoginRequest deserialize_request(std::string_view bytes);  // throws MalformedRequest

}  // namespace authlab
