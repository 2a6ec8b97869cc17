// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "authlab/schemes.hpp"

namespace authlab {

enum class AttackTag { ChanCheng, ChangHwang, Group, Masquerade, Leung };

std::string_view to_string(AttackTag tag);
AttackTag attack_from_string(std::string_view name);

// A forged (identity-or-SID, password) pair. Pairs from these attacks are
// x_s-consistent: pw = claimed^xs mod p for the true server secret, i.e.
// indistinguishable from an issued credential.
struct ForgedPair {
    BigUint claimed;
    BigUint pw;
    AttackTag provenance;
};

struct AttackOutcome {
    AttackTag attack;
    SchemeTag scheme;
    bool succeeded;  // true iff some verify call on forged material accepted
    std::string detail;
};

// Squares a known valid pair: (ID^2, PW^2) mod p is valid again because
// password derivation is a group homomorphism.
ForgedPair chan_cheng_forge(const BigUint& id_a, const BigUint& pw_a, const Prime& p);

// The k-th power generalization; k = 2 reproduces chan_cheng_forge exactly.
ForgedPair chang_hwang_forge(const BigUint& id_a, const BigUint& pw_a, const BigUint& k,
                             const Prime& p);

// Coalition forgery: componentwise product of known valid pairs.
ForgedPair group_forge(std::span<const std::pair<BigUint, BigUint>> pairs, const Prime& p);

// The same k-th power forgery run over shadow identities.
ForgedPair leung_forge(const BigUint& sid_a, const BigUint& pw_a, const BigUint& k,
                       const Prime& p);

// Registration access the masquerade attack drives: submit a raw identity
// string under a scheme, get the issued password back. Implementations throw
// RegistrationRefused when the server turns the identity away.
using RegistrationOracle = std::function<BigUint(const std::string& raw_id, SchemeTag scheme)>;

// Masquerade via registration: register ID_A^k mod p, then take the k-th
// root of the issued password. "pw_b to the power -k" is read as the k-th
// root, recovered as pw_b^(k^-1 mod p-1); inverting k needs gcd(k, p-1) = 1
// (coprimality to p alone is vacuous for k < p and does not make the
// exponent invertible). Returns the recovered victim password.
BigUint slh_masquerade(const Identity& id_a, const BigUint& k, const RegistrationOracle& oracle,
                       const SystemParams& params, SchemeTag scheme);

// Decimal rendering of a forged numeric identity for wire submission. Under
// STRICT the value is zero-padded to 12 digits when it fits; values that do
// not fit stay plain decimal and fail the format check downstream.
std::string render_forged_id(const BigUint& value, IdPolicy policy);

// Fresh identity that passes the active policy and is not degenerate mod p.
Identity random_valid_identity(const SystemParams& params, SeededRng& rng);

// One end-to-end attack attempt against a live server: register the victim
// (and whatever the attacker registers), build the forged login through the
// normal card path with honest timestamps, submit it.
struct ForgeryAttempt {
    std::string victim_id;
    std::optional<std::string> attacker_id;   // masquerade registers a derived identity
    std::optional<LoginRequest> request;      // absent when no login can be built
    std::optional<VerifyResult> verdict;
    bool accepted = false;
    bool claimed_format_ok = false;           // did the forged identity survive the format check
    std::string note;
};

ForgeryAttempt attempt_forgery(const SystemParams& params, const ServerSecret& secret,
                               AttackTag attack, SchemeTag scheme, Timestamp t, SeededRng& rng);

// Expected verdict per cell for the active identity policy; nullopt marks an
// unsupported combination (leung needs shadow identities).
std::optional<bool> expected_success(AttackTag attack, SchemeTag scheme, IdPolicy policy);

// Runs every supported attack against every listed scheme, `trials` fresh
// victims per cell; a cell succeeds when at least one verify accepted.
std::vector<AttackOutcome> run_attack_matrix(const SystemParams& params,
                                             const ServerSecret& secret,
                                             std::span<const SchemeTag> schemes,
                                             std::size_t trials, SeededRng& rng);

bool matrix_matches_expected(std::span<const AttackOutcome> outcomes, IdPolicy policy);

}  // namespace authlab
