// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#include "authlab/schemes.hpp"

#include <stdexcept>

#include "authlab/errors.hpp"

namespace authlab {

namespace {

bool degenerate(const BigUint& numeric, const Prime& p) {
    return numeric.is_zero() || numeric == 1 || numeric == p.value() - 1;
}

// Claimed identity resolved to the verification base, or the format reason.
struct ResolvedClaim {
    bool ok;
    BigUint base;       // meaningful only when ok
    Identity identity;  // meaningful for the ID-carrying schemes
};

ResolvedClaim resolve_claim(const ServerSecret& secret, const SystemParams& params,
                            const LoginRequest& req) {
    if (req.scheme == SchemeTag::Slh) {
        // The wire carries SID. The server cannot re-derive it (Red maps the
        // registered identity, which is not sent), so the claimed value is
        // used directly after a numeric range check.
        BigUint sid;
        try {
            sid = from_hex(req.claimed_id);
        } catch (const ParseError&) {
            return {false, 0, {}};
        }
        if (sid < 2 || sid > params.p.value() - 2) {
            return {false, 0, {}};
        }
        return {true, std::move(sid), {}};
    }
    Identity id = make_identity(req.claimed_id, params);
    if (!check_id_format(id, params)) {
        return {false, 0, {}};
    }
    if (req.scheme == SchemeTag::HwangLi) {
        BigUint base = *id.numeric;
        return {true, std::move(base), std::move(id)};
    }
    // awasthi-lal and improved: the server recomputes SID = Red(ID).
    BigUint base = red(secret, id, params);
    return {true, std::move(base), std::move(id)};
}

}  // namespace

std::string_view to_string(Verdict verdict) {
    return verdict == Verdict::Accept ? "ACCEPT" : "REJECT";
}

std::string_view to_string(Reason reason) {
    switch (reason) {
        case Reason::Ok: return "OK";
        case Reason::BadIdFormat: return "BAD_ID_FORMAT";
        case Reason::StaleTimestamp: return "STALE_TIMESTAMP";
        case Reason::EquationMismatch: return "EQUATION_MISMATCH";
    }
    throw std::invalid_argument("unknown reason");
}

CardInputs CardInputs::from_credential(const Credential& cred, SchemeTag scheme) {
    switch (scheme) {
        case SchemeTag::HwangLi:
        case SchemeTag::AwasthiLal:
            return {cred.id, std::nullopt, cred.pw};
        case SchemeTag::Slh:
            return {std::nullopt, cred.sid, cred.pw};
        case SchemeTag::Improved:
            return {cred.id, cred.sid, cred.pw};
    }
    throw std::invalid_argument("unknown scheme tag");
}

std::pair<Credential, SmartCard> register_user(const ServerSecret& secret,
                                               const SystemParams& params,
                                               const Identity& id, SchemeTag scheme) {
    if (!id.numeric.has_value()) {
        throw BadIdentityFormat("register: identity is not a digit string");
    }
    if (degenerate(*id.numeric, params.p)) {
        throw DegenerateIdentity();
    }
    if (!check_id_format(id, params)) {
        throw BadIdentityFormat();
    }

    Credential cred;
    cred.id = id;
    if (scheme == SchemeTag::HwangLi) {
        cred.pw = mod_pow(*id.numeric, secret.x_s, params.p);
    } else {
        const BigUint sid = red(secret, id, params);
        cred.pw = mod_pow(sid, secret.x_s, params.p);
        if (scheme != SchemeTag::AwasthiLal) {
            cred.sid = sid;
        }
        // awasthi-lal: the server computed SID but the card-side inputs do
        // not receive it; that omission is the scheme's published defect.
    }
    return {std::move(cred), SmartCard{scheme, params.hash, params.p}};
}

LoginRequest make_login(const SmartCard& card, const CardInputs& inputs, Timestamp t,
                        SeededRng& rng, const std::optional<BigUint>& forced_r) {
    if (card.scheme == SchemeTag::AwasthiLal) {
        throw MissingSID();
    }

    BigUint base;
    std::string claimed;
    switch (card.scheme) {
        case SchemeTag::HwangLi:
            if (!inputs.id || !inputs.id->numeric) {
                throw std::invalid_argument("make_login: hwang-li needs a numeric identity");
            }
            base = *inputs.id->numeric;
            claimed = inputs.id->raw;
            break;
        case SchemeTag::Slh:
            if (!inputs.sid) {
                throw std::invalid_argument("make_login: slh needs the shadow identity");
            }
            base = *inputs.sid;
            claimed = to_hex(base);
            break;
        case SchemeTag::Improved:
            if (!inputs.sid || !inputs.id) {
                throw std::invalid_argument("make_login: improved needs SID||ID");
            }
            base = *inputs.sid;
            claimed = inputs.id->raw;
            break;
        case SchemeTag::AwasthiLal:
            throw MissingSID();
    }
    if (inputs.pw >= card.p.value()) {
        throw std::invalid_argument("make_login: pw must be < p");
    }

    const BigUint r = forced_r ? *forced_r : sample_exponent(card.p, rng);
    const BigUint c1 = mod_pow(base, r, card.p);
    const BigUint texp = t_exponent(t, inputs.pw, card.hash, card.p);
    const BigUint m = mod_pow(base, texp, card.p);
    const BigUint c2 = (m * mod_pow(inputs.pw, r, card.p)) % card.p.value();
    return LoginRequest{card.scheme, std::move(claimed), c1, c2, t};
}

VerifyResult verify(const ServerSecret& secret, const SystemParams& params,
                    const LoginRequest& req, Timestamp t_c) {
    const ResolvedClaim claim = resolve_claim(secret, params, req);
    if (!claim.ok) {
        return {Verdict::Reject, Reason::BadIdFormat};
    }
    if (!check_freshness(req.t, t_c, params)) {
        return {Verdict::Reject, Reason::StaleTimestamp};
    }
    // Out-of-range residues cannot satisfy the equation over canonical
    // representatives.
    if (req.c1 >= params.p.value() || req.c2 >= params.p.value()) {
        return {Verdict::Reject, Reason::EquationMismatch};
    }
    if (!login_equation_mult(params, secret.x_s, req, claim.base)) {
        return {Verdict::Reject, Reason::EquationMismatch};
    }
    return {Verdict::Accept, Reason::Ok};
}

bool login_equation_mult(const SystemParams& params, const BigUint& x_s,
                         const LoginRequest& req, const BigUint& base) {
    const BigUint pw = mod_pow(base, x_s, params.p);
    const BigUint texp = t_exponent(req.t, pw, params);
    const BigUint rhs =
        (mod_pow(req.c1, x_s, params.p) * mod_pow(base, texp, params.p)) % params.p.value();
    return req.c2 == rhs;
}

bool login_equation_inverse(const SystemParams& params, const BigUint& x_s,
                            const LoginRequest& req, const BigUint& base) {
    if (req.c1.is_zero()) {
        return false;  // C1^xs has no inverse; the divided form cannot hold
    }
    const BigUint pw = mod_pow(base, x_s, params.p);
    const BigUint texp = t_exponent(req.t, pw, params);
    const BigUint lhs =
        (req.c2 * mod_inv(mod_pow(req.c1, x_s, params.p), params.p)) % params.p.value();
    return lhs == mod_pow(base, texp, params.p);
}

bool verify_equation_identity(const SystemParams& params, const ServerSecret& secret,
                              std::size_t trials, SeededRng& rng) {
    for (std::size_t i = 0; i < trials; ++i) {
        const BigUint base = rng.uniform(2, params.p.value() - 2);
        const BigUint r = sample_exponent(params.p, rng);
        const Timestamp t{rng.next_u64()};

        const BigUint pw = mod_pow(base, secret.x_s, params.p);
        const BigUint c1 = mod_pow(base, r, params.p);
        const BigUint texp = t_exponent(t, pw, params);
        const BigUint c2 =
            (mod_pow(base, texp, params.p) * mod_pow(pw, r, params.p)) % params.p.value();
        const LoginRequest req{SchemeTag::HwangLi, to_hex(base), c1, c2, t};

        if (!login_equation_mult(params, secret.x_s, req, base) ||
            !login_equation_inverse(params, secret.x_s, req, base)) {
            return false;
        }
    }
    return true;
}

}  // namespace authlab
