// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>

#include "authlab/protocol.hpp"
#include "authlab/rng.hpp"

namespace authlab {

// What the server issues at registration. For awasthi-lal `sid` is absent:
// the login phase as published expects the user to key in only (ID, PW), so
// the card-side inputs genuinely lack the shadow identity.
struct Credential {
    Identity id;
    std::optional<BigUint> sid;
    BigUint pw;
};

// The card stores public parameters only; there is no field a secret could
// hide in.
struct SmartCard {
    SchemeTag scheme;
    HashId hash;
    Prime p;
};

enum class Verdict { Accept, Reject };
enum class Reason { Ok, BadIdFormat, StaleTimestamp, EquationMismatch };

struct VerifyResult {
    Verdict verdict;
    Reason reason;

    bool accepted() const { return verdict == Verdict::Accept; }
    bool operator==(const VerifyResult&) const = default;
};

std::string_view to_string(Verdict verdict);
std::string_view to_string(Reason reason);

// What the user physically types at the card reader. hwang-li and
// awasthi-lal take (ID, PW); slh takes (SID, PW); improved takes both halves
// of its SID||ID identity plus PW.
struct CardInputs {
    std::optional<Identity> id;
    std::optional<BigUint> sid;
    BigUint pw;

    static CardInputs from_credential(const Credential& cred, SchemeTag scheme);
};

// Registration, server side. hwang-li: PW = ID^xs mod p. The other three:
// SID = Red(ID), PW = SID^xs mod p; slh and improved hand SID to the user,
// awasthi-lal does not surface it to the card inputs.
std::pair<Credential, SmartCard> register_user(const ServerSecret& secret,
                                               const SystemParams& params,
                                               const Identity& id,
                                               SchemeTag scheme);

// Login, card side: C1 = B^r, C2 = B^t_exp * PW^r (mod p) with B = ID for
// hwang-li and B = SID otherwise. Always throws MissingSID for awasthi-lal,
// whose inputs cannot supply the base. `forced_r` is a test hook; nothing in
// the CLI reaches it.
LoginRequest make_login(const SmartCard& card, const CardInputs& inputs, Timestamp t,
                        SeededRng& rng,
                        const std::optional<BigUint>& forced_r = std::nullopt);

// Authentication, server side: format check, freshness window, then
// C2 = C1^xs * B^t_exp (mod p) in multiplication form.
VerifyResult verify(const ServerSecret& secret, const SystemParams& params,
                    const LoginRequest& req, Timestamp t_c);

// The two algebraic readings of the check equation. Multiplication form is
// what verify() runs; the inverse form divides out C1^xs instead. They are
// identical mathematics and the property harness holds them to that.
bool login_equation_mult(const SystemParams& params, const BigUint& x_s,
                         const LoginRequest& req, const BigUint& base);
bool login_equation_inverse(const SystemParams& params, const BigUint& x_s,
                            const LoginRequest& req, const BigUint& base);

// Draws `trials` random (id, r, t) instances, builds the honest request for
// each and returns true iff both equation forms accept every one.
bool verify_equation_identity(const SystemParams& params, const ServerSecret& secret,
                              std::size_t trials, SeededRng& rng);

}  // namespace authlab
