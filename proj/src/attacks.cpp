// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#include "authlab/attacks.hpp"

#include <stdexcept>

#include "authlab/errors.hpp"

namespace authlab {

namespace {

void require_unit_range(const BigUint& v, const Prime& p, const char* what) {
    if (v < 1 || v >= p.value()) {
        throw std::invalid_argument(std::string(what) + " must be in [1, p-1]");
    }
}

BigUint draw_coprime_exponent(const Prime& p, SeededRng& rng) {
    const BigUint order = p.group_order();
    for (;;) {
        BigUint k = rng.uniform(2, p.value() - 2);
        if (boost::multiprecision::gcd(k, order) == 1) {
            return k;
        }
    }
}

Identity forged_identity(const BigUint& value, const SystemParams& params) {
    return make_identity(render_forged_id(value, params.id_policy), params);
}

// The insider material each forgery attack starts from: the attacker's own
// legally issued pair, over IDs for hwang-li and over SIDs elsewhere.
std::pair<BigUint, BigUint> insider_pair(const Credential& cred, SchemeTag scheme) {
    if (scheme == SchemeTag::HwangLi) {
        return {*cred.id.numeric, cred.pw};
    }
    return {cred.sid.value(), cred.pw};
}

}  // namespace

std::string_view to_string(AttackTag tag) {
    switch (tag) {
        case AttackTag::ChanCheng: return "chan-cheng";
        case AttackTag::ChangHwang: return "chang-hwang";
        case AttackTag::Group: return "group";
        case AttackTag::Masquerade: return "masquerade";
        case AttackTag::Leung: return "leung";
    }
    throw std::invalid_argument("unknown attack tag");
}

AttackTag attack_from_string(std::string_view name) {
    if (name == "chan-cheng") return AttackTag::ChanCheng;
    if (name == "chang-hwang") return AttackTag::ChangHwang;
    if (name == "group") return AttackTag::Group;
    if (name == "masquerade") return AttackTag::Masquerade;
    if (name == "leung") return AttackTag::Leung;
    throw ParseError("unknown attack: " + std::string(name));
}

ForgedPair chan_cheng_forge(const BigUint& id_a, const BigUint& pw_a, const Prime& p) {
    require_unit_range(id_a, p, "chan_cheng_forge: id");
    require_unit_range(pw_a, p, "chan_cheng_forge: pw");
    return {(id_a * id_a) % p.value(), (pw_a * pw_a) % p.value(), AttackTag::ChanCheng};
}

ForgedPair chang_hwang_forge(const BigUint& id_a, const BigUint& pw_a, const BigUint& k,
                             const Prime& p) {
    if (k < 1) {
        throw std::invalid_argument("chang_hwang_forge: k must be >= 1");
    }
    require_unit_range(id_a, p, "chang_hwang_forge: id");
    require_unit_range(pw_a, p, "chang_hwang_forge: pw");
    return {mod_pow(id_a, k, p), mod_pow(pw_a, k, p), AttackTag::ChangHwang};
}

ForgedPair group_forge(std::span<const std::pair<BigUint, BigUint>> pairs, const Prime& p) {
    if (pairs.empty()) {
        throw EmptyCoalition();
    }
    BigUint claimed = 1, pw = 1;
    for (const auto& [id_j, pw_j] : pairs) {
        claimed = (claimed * id_j) % p.value();
        pw = (pw * pw_j) % p.value();
    }
    return {std::move(claimed), std::move(pw), AttackTag::Group};
}

ForgedPair leung_forge(const BigUint& sid_a, const BigUint& pw_a, const BigUint& k,
                       const Prime& p) {
    if (k < 1) {
        throw std::invalid_argument("leung_forge: k must be >= 1");
    }
    require_unit_range(sid_a, p, "leung_forge: sid");
    require_unit_range(pw_a, p, "leung_forge: pw");
    return {mod_pow(sid_a, k, p), mod_pow(pw_a, k, p), AttackTag::Leung};
}

BigUint slh_masquerade(const Identity& id_a, const BigUint& k, const RegistrationOracle& oracle,
                       const SystemParams& params, SchemeTag scheme) {
    if (!id_a.numeric) {
        throw BadIdentityFormat("slh_masquerade: victim identity is not numeric");
    }
    // gcd screen first: an uninvertible k can never recover the password.
    const BigUint k_inv = exp_inv(k, params.p.group_order());
    const BigUint id_b = mod_pow(*id_a.numeric, k, params.p);
    const BigUint pw_b = oracle(render_forged_id(id_b, params.id_policy), scheme);
    return mod_pow(pw_b, k_inv, params.p);
}

std::string render_forged_id(const BigUint& value, IdPolicy policy) {
    std::string dec = value.str();
    if (policy == IdPolicy::Strict && dec.size() <= 12) {
        dec.insert(0, 12 - dec.size(), '0');
    }
    return dec;
}

Identity random_valid_identity(const SystemParams& params, SeededRng& rng) {
    if (params.id_policy == IdPolicy::Permissive) {
        const BigUint numeric = rng.uniform(2, params.p.value() - 2);
        return make_identity(numeric.str(), params);
    }
    for (;;) {
        std::string digits;
        for (int i = 0; i < 11; ++i) {
            digits.push_back(static_cast<char>('0' + rng.next_u64() % 10));
        }
        for (char check = '0'; check <= '9'; ++check) {
            if (luhn_valid(digits + check)) {
                digits.push_back(check);
                break;
            }
        }
        Identity id = make_identity(digits, params);
        const BigUint& n = *id.numeric;
        if (!n.is_zero() && n != 1 && n != params.p.value() - 1) {
            return id;
        }
    }
}

std::optional<bool> expected_success(AttackTag attack, SchemeTag scheme, IdPolicy policy) {
    switch (scheme) {
        case SchemeTag::HwangLi:
            if (attack == AttackTag::Leung) {
                return std::nullopt;  // no shadow identities to raise
            }
            // Under STRICT the forged identity almost never lands on a valid
            // 12-digit Luhn string, so the published format defense holds.
            return policy == IdPolicy::Permissive;
        case SchemeTag::Slh:
            // SIDs face only a numeric range check on the wire, so the
            // power-map forgeries go through; the registration channel
            // (masquerade) stays defended because Red cannot be steered.
            return attack != AttackTag::Masquerade;
        case SchemeTag::AwasthiLal:
        case SchemeTag::Improved:
            return false;
    }
    throw std::invalid_argument("unknown scheme tag");
}

ForgeryAttempt attempt_forgery(const SystemParams& params, const ServerSecret& secret,
                               AttackTag attack, SchemeTag scheme, Timestamp t,
                               SeededRng& rng) {
    ForgeryAttempt out;
    const Identity victim_id = random_valid_identity(params, rng);
    out.victim_id = victim_id.raw;
    auto [victim, card] = register_user(secret, params, victim_id, scheme);

    if (scheme == SchemeTag::AwasthiLal) {
        out.note = "no forged login possible: the scheme's login phase cannot run (MissingSID)";
        return out;
    }

    CardInputs inputs;
    try {
        switch (attack) {
            case AttackTag::ChanCheng:
            case AttackTag::ChangHwang:
            case AttackTag::Group:
            case AttackTag::Leung: {
                ForgedPair forged{0, 0, attack};
                const auto [own_claim, own_pw] = insider_pair(victim, scheme);
                if (attack == AttackTag::ChanCheng) {
                    forged = chan_cheng_forge(own_claim, own_pw, params.p);
                } else if (attack == AttackTag::Group) {
                    const Identity second_id = random_valid_identity(params, rng);
                    auto [second, second_card] = register_user(secret, params, second_id, scheme);
                    const auto [claim2, pw2] = insider_pair(second, scheme);
                    const std::pair<BigUint, BigUint> coalition[] = {
                        {own_claim, own_pw}, {claim2, pw2}};
                    forged = group_forge(coalition, params.p);
                } else {
                    const BigUint k = rng.uniform(2, params.p.value() - 2);
                    forged = attack == AttackTag::Leung
                                 ? leung_forge(own_claim, own_pw, k, params.p)
                                 : chang_hwang_forge(own_claim, own_pw, k, params.p);
                }
                inputs.pw = forged.pw;
                if (scheme == SchemeTag::HwangLi) {
                    inputs.id = forged_identity(forged.claimed, params);
                } else {
                    inputs.sid = forged.claimed;
                    if (scheme == SchemeTag::Improved) {
                        // The pair is x_s-consistent but the wire carries an
                        // ID; the attacker can only guess one and hope Red
                        // maps it onto the forged SID.
                        inputs.id = random_valid_identity(params, rng);
                    }
                }
                break;
            }
            case AttackTag::Masquerade: {
                const BigUint k = draw_coprime_exponent(params.p, rng);
                std::string registered;
                RegistrationOracle oracle = [&](const std::string& raw, SchemeTag target) {
                    Identity forged_id = make_identity(raw, params);
                    try {
                        auto [cred, unused_card] =
                            register_user(secret, params, forged_id, target);
                        registered = raw;
                        return cred.pw;
                    } catch (const Error& e) {
                        throw RegistrationRefused(e.what());
                    }
                };
                const BigUint recovered = slh_masquerade(victim_id, k, oracle, params, scheme);
                out.attacker_id = registered;
                inputs.pw = recovered;
                inputs.id = victim_id;
                if (scheme == SchemeTag::Slh) {
                    // The victim's SID was issued over the secure channel;
                    // the attacker's only handle is the public identity.
                    inputs.sid = *victim_id.numeric;
                } else if (scheme == SchemeTag::Improved) {
                    inputs.sid = rng.uniform(2, params.p.value() - 2);
                }
                break;
            }
        }
    } catch (const RegistrationRefused& e) {
        out.note = std::string("registration refused: ") + e.what();
        return out;
    }

    LoginRequest req = make_login(card, inputs, t, rng);
    out.verdict = verify(secret, params, req, t);
    out.accepted = out.verdict->accepted();
    out.claimed_format_ok = out.verdict->reason != Reason::BadIdFormat;
    out.note = out.accepted ? "forged login accepted"
                            : std::string("rejected: ") + std::string(to_string(out.verdict->reason));
    out.request = std::move(req);
    return out;
}

std::vector<AttackOutcome> run_attack_matrix(const SystemParams& params,
                                             const ServerSecret& secret,
                                             std::span<const SchemeTag> schemes,
                                             std::size_t trials, SeededRng& rng) {
    if (trials < 1) {
        throw std::invalid_argument("run_attack_matrix: trials must be >= 1");
    }
    constexpr AttackTag kAttacks[] = {AttackTag::ChanCheng, AttackTag::ChangHwang,
                                      AttackTag::Group, AttackTag::Masquerade, AttackTag::Leung};
    std::vector<AttackOutcome> outcomes;
    for (const SchemeTag scheme : schemes) {
        for (const AttackTag attack : kAttacks) {
            if (!expected_success(attack, scheme, params.id_policy).has_value()) {
                continue;  // unsupported cell
            }
            const std::string label =
                std::string(to_string(attack)) + "/" + std::string(to_string(scheme));
            SeededRng cell_rng = rng.fork(label);
            std::size_t accepts = 0;
            std::size_t format_ok = 0;
            std::string first_note;
            for (std::size_t i = 0; i < trials; ++i) {
                const Timestamp t{1'000'000'000 + i};
                ForgeryAttempt attempt =
                    attempt_forgery(params, secret, attack, scheme, t, cell_rng);
                accepts += attempt.accepted ? 1 : 0;
                format_ok += attempt.claimed_format_ok ? 1 : 0;
                if (i == 0) {
                    first_note = attempt.note;
                }
            }
            std::string detail = std::to_string(accepts) + "/" + std::to_string(trials) +
                                 " forged logins accepted";
            if (params.id_policy == IdPolicy::Strict && scheme == SchemeTag::HwangLi) {
                detail += "; forged-id format survival " + std::to_string(format_ok) + "/" +
                          std::to_string(trials);
            }
            if (accepts == 0 && !first_note.empty()) {
                detail += " (" + first_note + ")";
            }
            outcomes.push_back({attack, scheme, accepts > 0, std::move(detail)});
        }
    }
    return outcomes;
}

bool matrix_matches_expected(std::span<const AttackOutcome> outcomes, IdPolicy policy) {
    for (const AttackOutcome& cell : outcomes) {
        const std::optional<bool> want = expected_success(cell.attack, cell.scheme, policy);
        if (!want.has_value() || *want != cell.succeeded) {
            return false;
        }
    }
    return true;
}

}  // namespace authlab
