// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "authlab/attacks.hpp"
#include "authlab/errors.hpp"
#include "oracles.hpp"

using namespace authlab;

namespace {

const Prime p23{BigUint(23)};
const Prime p64{from_hex("ffffffffffffffc5")};  // 2^64 - 59

SystemParams params23() { return make_system_params(p23, HashId::Sha256, 60, IdPolicy::Permissive); }
SystemParams params64(IdPolicy policy = IdPolicy::Permissive) {
    return make_system_params(p64, HashId::Sha256, 60, policy);
}

ServerSecret secret_with_xs(const SystemParams& params, BigUint x_s) {
    SeededRng rng(321);
    ServerSecret secret = make_server_secret(params, rng);
    secret.x_s = std::move(x_s);
    return secret;
}

bool xs_consistent(const ForgedPair& pair, const BigUint& x_s, const Prime& p) {
    return mod_pow(pair.claimed, x_s, p) == pair.pw;
}

const AttackOutcome* find_cell(const std::vector<AttackOutcome>& m, AttackTag a, SchemeTag s) {
    const auto it = std::find_if(m.begin(), m.end(), [&](const AttackOutcome& cell) {
        return cell.attack == a && cell.scheme == s;
    });
    return it == m.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("chan-cheng: squaring a valid pair stays valid") {
    // victim (5, 17) under xs = 7 at p = 23; forged pair frozen from the
    // exponentiation oracle
    const ForgedPair forged = chan_cheng_forge(5, 17, p23);
    CHECK(forged.claimed == 2);
    CHECK(forged.pw == 13);
    CHECK(oracle::naive_mod_pow(2, 7, 23) == 13);
    CHECK(xs_consistent(forged, 7, p23));  // no knowledge of xs was used

    const ForgedPair fixed = chan_cheng_forge(1, 1, p23);
    CHECK(fixed.claimed == 1);
    CHECK(fixed.pw == 1);

    CHECK_THROWS_AS(chan_cheng_forge(0, 17, p23), std::invalid_argument);
    CHECK_THROWS_AS(chan_cheng_forge(5, 23, p23), std::invalid_argument);
}

TEST_CASE("chang-hwang: k-th power forgery") {
    const ForgedPair forged = chang_hwang_forge(5, 17, 3, p23);
    CHECK(forged.claimed == 10);  // 125 mod 23
    CHECK(forged.pw == oracle::naive_mod_pow(17, 3, 23));
    CHECK(forged.pw == oracle::naive_mod_pow(10, 7, 23));  // consistent under xs = 7

    // k = 1 reproduces the original pair; k = 2 is exactly chan-cheng
    const ForgedPair identity = chang_hwang_forge(5, 17, 1, p23);
    CHECK(identity.claimed == 5);
    CHECK(identity.pw == 17);

    SeededRng rng(9);
    for (int i = 0; i < 200; ++i) {
        const BigUint id = rng.uniform(1, 22);
        const BigUint pw = rng.uniform(1, 22);
        const ForgedPair a = chan_cheng_forge(id, pw, p23);
        const ForgedPair b = chang_hwang_forge(id, pw, 2, p23);
        CHECK(a.claimed == b.claimed);
        CHECK(a.pw == b.pw);
    }

    CHECK_THROWS_AS(chang_hwang_forge(5, 17, 0, p23), std::invalid_argument);
}

TEST_CASE("group forgery multiplies pairs") {
    const SystemParams params = params23();
    const ServerSecret secret = secret_with_xs(params, 7);

    const std::pair<BigUint, BigUint> one[] = {{5, 17}};
    const ForgedPair single = group_forge(one, p23);
    CHECK(single.claimed == 5);
    CHECK(single.pw == 17);

    // two xs-consistent pairs multiply into an xs-consistent pair
    const BigUint pw9 = mod_pow(9, secret.x_s, p23);
    const std::pair<BigUint, BigUint> two[] = {{5, 17}, {9, pw9}};
    const ForgedPair coalition = group_forge(two, p23);
    CHECK(coalition.claimed == (5 * 9) % 23);
    CHECK(xs_consistent(coalition, 7, p23));

    CHECK_THROWS_AS(group_forge({}, p23), EmptyCoalition);
}

TEST_CASE("leung: the same algebra over shadow identities") {
    const ForgedPair leung = leung_forge(5, 17, 3, p23);
    const ForgedPair chang = chang_hwang_forge(5, 17, 3, p23);
    CHECK(leung.claimed == chang.claimed);
    CHECK(leung.pw == chang.pw);
    CHECK(leung.provenance == AttackTag::Leung);
    CHECK(xs_consistent(leung_forge(5, 17, 2, p23), 7, p23));
}

TEST_CASE("relation preservation across forges: pw = claimed^xs always") {
    for (const Prime& p : {p23, p64}) {
        const SystemParams params = make_system_params(p, HashId::Sha256, 60,
                                                       IdPolicy::Permissive);
        SeededRng seeder(77);
        const ServerSecret secret = make_server_secret(params, seeder);
        SeededRng rng(88);
        const int trials = p.value() == 23 ? 1000 : 200;
        for (int i = 0; i < trials; ++i) {
            const BigUint victim = rng.uniform(2, p.value() - 2);
            const BigUint pw = mod_pow(victim, secret.x_s, p);
            const BigUint k = rng.uniform(1, p.value() - 2);

            CHECK(xs_consistent(chan_cheng_forge(victim, pw, p), secret.x_s, p));
            CHECK(xs_consistent(chang_hwang_forge(victim, pw, k, p), secret.x_s, p));
            CHECK(xs_consistent(leung_forge(victim, pw, k, p), secret.x_s, p));

            const BigUint victim2 = rng.uniform(2, p.value() - 2);
            const std::pair<BigUint, BigUint> pairs[] = {
                {victim, pw}, {victim2, mod_pow(victim2, secret.x_s, p)}};
            CHECK(xs_consistent(group_forge(pairs, p), secret.x_s, p));
        }
    }
}

TEST_CASE("masquerade recovers the victim password through registration") {
    const SystemParams params = params23();
    const ServerSecret secret = secret_with_xs(params, 7);
    const RegistrationOracle oracle = [&](const std::string& raw, SchemeTag scheme) {
        try {
            const auto [cred, card] =
                register_user(secret, params, make_identity(raw, params), scheme);
            return cred.pw;
        } catch (const Error& e) {
            throw RegistrationRefused(e.what());
        }
    };

    // worked instance: victim 5, k = 3. id_b = 10, pw_b = 10^7 = 14,
    // recovered = 14^15 = 5^7 = 17 (all mod 23)
    const Identity victim = make_identity("5", params);
    const BigUint recovered = slh_masquerade(victim, 3, oracle, params, SchemeTag::HwangLi);
    CHECK(recovered == 17);
    CHECK(recovered == oracle::naive_mod_pow(5, 7, 23));

    // k = 1 degenerates to re-registering the victim identity
    CHECK(slh_masquerade(victim, 1, oracle, params, SchemeTag::HwangLi) == 17);

    // even k shares a factor with p-1 = 22
    CHECK_THROWS_AS(slh_masquerade(victim, 2, oracle, params, SchemeTag::HwangLi), NotCoprime);
}

TEST_CASE("masquerade exactness: every coprime k, every victim, p = 23") {
    const SystemParams params = params23();
    for (std::uint64_t xs = 2; xs <= 21; ++xs) {
        const ServerSecret secret = secret_with_xs(params, xs);
        const RegistrationOracle oracle = [&](const std::string& raw, SchemeTag scheme) {
            const auto [cred, card] =
                register_user(secret, params, make_identity(raw, params), scheme);
            return cred.pw;
        };
        for (std::uint64_t k = 1; k <= 21; ++k) {
            if (oracle::euclid_gcd(k, 22) != 1) continue;
            for (std::uint64_t v = 2; v <= 21; ++v) {
                const Identity victim = make_identity(std::to_string(v), params);
                const BigUint recovered =
                    slh_masquerade(victim, k, oracle, params, SchemeTag::HwangLi);
                CHECK(recovered == mod_pow(v, xs, p23));
            }
        }
    }
}

TEST_CASE("masquerade against red-based registration recovers garbage") {
    const SystemParams params = params64();
    SeededRng seeder(3);
    const ServerSecret secret = make_server_secret(params, seeder);
    const RegistrationOracle oracle = [&](const std::string& raw, SchemeTag scheme) {
        const auto [cred, card] =
            register_user(secret, params, make_identity(raw, params), scheme);
        return cred.pw;
    };
    SeededRng rng(4);
    const Identity victim = make_identity(rng.uniform(2, p64.value() - 2).str(), params);
    const BigUint true_pw =
        register_user(secret, params, victim, SchemeTag::Improved).first.pw;
    const BigUint recovered = slh_masquerade(victim, 3, oracle, params, SchemeTag::Improved);
    CHECK(recovered != true_pw);
}

TEST_CASE("masquerade surfaces registration refusals") {
    const SystemParams params = params64(IdPolicy::Strict);
    const ServerSecret secret = secret_with_xs(params, 7);
    const RegistrationOracle oracle = [&](const std::string& raw, SchemeTag scheme) {
        try {
            const auto [cred, card] =
                register_user(secret, params, make_identity(raw, params), scheme);
            return cred.pw;
        } catch (const Error& e) {
            throw RegistrationRefused(e.what());
        }
    };
    // a 64-bit power of the victim id essentially never renders as a valid
    // 12-digit Luhn string
    const Identity victim = make_identity("523987123453", params);
    CHECK_THROWS_AS(slh_masquerade(victim, 3, oracle, params, SchemeTag::HwangLi),
                    RegistrationRefused);
}

TEST_CASE("render_forged_id honors the policy") {
    CHECK(render_forged_id(BigUint(42), IdPolicy::Permissive) == "42");
    CHECK(render_forged_id(BigUint(42), IdPolicy::Strict) == "000000000042");
    CHECK(render_forged_id(from_hex("ffffffffffffffc4"), IdPolicy::Strict) ==
          "18446744073709551556");  // 20 digits, cannot be padded into 12
}

TEST_CASE("random_valid_identity respects policy and degeneracy") {
    SeededRng rng(5);
    const SystemParams strict = params64(IdPolicy::Strict);
    for (int i = 0; i < 200; ++i) {
        const Identity id = random_valid_identity(strict, rng);
        CHECK(id.raw.size() == 12);
        CHECK(oracle::luhn_oracle(id.raw));
    }
    const SystemParams permissive = params23();
    for (int i = 0; i < 200; ++i) {
        const Identity id = random_valid_identity(permissive, rng);
        CHECK(*id.numeric >= 2);
        CHECK(*id.numeric <= 21);
    }
}

TEST_CASE("attack matrix reproduces the security claims at 64-bit p") {
    const SystemParams params = params64();
    SeededRng seeder(6);
    const ServerSecret secret = make_server_secret(params, seeder);
    const SchemeTag targets[] = {SchemeTag::HwangLi, SchemeTag::Slh, SchemeTag::Improved};
    SeededRng rng(7);
    const std::vector<AttackOutcome> matrix =
        run_attack_matrix(params, secret, targets, 50, rng);

    CHECK(matrix.size() == 14);  // 3 schemes x 5 attacks, minus leung/hwang-li
    CHECK(find_cell(matrix, AttackTag::Leung, SchemeTag::HwangLi) == nullptr);

    CHECK(find_cell(matrix, AttackTag::ChanCheng, SchemeTag::HwangLi)->succeeded);
    CHECK(find_cell(matrix, AttackTag::ChangHwang, SchemeTag::HwangLi)->succeeded);
    CHECK(find_cell(matrix, AttackTag::Group, SchemeTag::HwangLi)->succeeded);
    CHECK(find_cell(matrix, AttackTag::Masquerade, SchemeTag::HwangLi)->succeeded);

    CHECK(find_cell(matrix, AttackTag::ChanCheng, SchemeTag::Slh)->succeeded);
    CHECK(find_cell(matrix, AttackTag::Leung, SchemeTag::Slh)->succeeded);
    CHECK_FALSE(find_cell(matrix, AttackTag::Masquerade, SchemeTag::Slh)->succeeded);

    for (const AttackTag attack :
         {AttackTag::ChanCheng, AttackTag::ChangHwang, AttackTag::Group,
          AttackTag::Masquerade, AttackTag::Leung}) {
        CHECK_FALSE(find_cell(matrix, attack, SchemeTag::Improved)->succeeded);
    }

    CHECK(matrix_matches_expected(matrix, params.id_policy));

    AttackOutcome flipped = matrix.front();
    flipped.succeeded = !flipped.succeeded;
    const AttackOutcome deviant[] = {flipped};
    CHECK_FALSE(matrix_matches_expected(deviant, params.id_policy));
}

TEST_CASE("strict policy blocks hwang-li forgeries by format") {
    const SystemParams params = params64(IdPolicy::Strict);
    SeededRng seeder(8);
    const ServerSecret secret = make_server_secret(params, seeder);
    const SchemeTag targets[] = {SchemeTag::HwangLi};
    SeededRng rng(9);
    const std::vector<AttackOutcome> matrix =
        run_attack_matrix(params, secret, targets, 100, rng);

    const AttackOutcome* cc = find_cell(matrix, AttackTag::ChanCheng, SchemeTag::HwangLi);
    REQUIRE(cc != nullptr);
    CHECK_FALSE(cc->succeeded);
    CHECK(cc->detail.find("format survival 0/100") != std::string::npos);
    CHECK(matrix_matches_expected(matrix, IdPolicy::Strict));
}

TEST_CASE("attacks against awasthi-lal have no login to forge") {
    const SystemParams params = params64();
    SeededRng seeder(10);
    const ServerSecret secret = make_server_secret(params, seeder);
    const SchemeTag targets[] = {SchemeTag::AwasthiLal};
    SeededRng rng(11);
    const std::vector<AttackOutcome> matrix = run_attack_matrix(params, secret, targets, 3, rng);
    CHECK(matrix.size() == 5);
    for (const AttackOutcome& cell : matrix) {
        CHECK_FALSE(cell.succeeded);
        CHECK(cell.detail.find("MissingSID") != std::string::npos);
    }
}

TEST_CASE("matrix rejects zero trials") {
    const SystemParams params = params64();
    SeededRng seeder(12);
    const ServerSecret secret = make_server_secret(params, seeder);
    const SchemeTag targets[] = {SchemeTag::HwangLi};
    SeededRng rng(13);
    CHECK_THROWS_AS(run_attack_matrix(params, secret, targets, 0, rng), std::invalid_argument);
}

TEST_CASE("forgery attempts are deterministic under a fixed seed") {
    const SystemParams params = params64();
    SeededRng seeder(14);
    const ServerSecret secret = make_server_secret(params, seeder);
    SeededRng a(15), b(15);
    const ForgeryAttempt fa =
        attempt_forgery(params, secret, AttackTag::ChanCheng, SchemeTag::HwangLi, Timestamp{1}, a);
    const ForgeryAttempt fb =
        attempt_forgery(params, secret, AttackTag::ChanCheng, SchemeTag::HwangLi, Timestamp{1}, b);
    REQUIRE(fa.request.has_value());
    REQUIRE(fb.request.has_value());
    CHECK(serialize_request(*fa.request) == serialize_request(*fb.request));
    CHECK(fa.accepted == fb.accepted);
}
