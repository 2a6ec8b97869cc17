// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#include "authlab/simulator.hpp"

#include <algorithm>
#include <stdexcept>

#include "authlab/errors.hpp"

namespace authlab::sim {

namespace {

class Recorder {
public:
    void emit(std::uint64_t time, EventKind kind, nlohmann::json payload) {
        transcript_.events.push_back({next_seq_++, time, kind, std::move(payload)});
    }

    Transcript take() { return std::move(transcript_); }

private:
    std::uint64_t next_seq_ = 0;
    Transcript transcript_;
};

nlohmann::json request_payload(const LoginRequest& req) {
    return nlohmann::json::parse(serialize_request(req));
}

nlohmann::json verdict_payload(const VerifyResult& result) {
    return {{"verdict", to_string(result.verdict)}, {"reason", to_string(result.reason)}};
}

}  // namespace

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Register: return "REGISTER";
        case EventKind::LoginSent: return "LOGIN_SENT";
        case EventKind::LoginVerdict: return "LOGIN_VERDICT";
        case EventKind::EavesdropCapture: return "EAVESDROP_CAPTURE";
        case EventKind::ReplaySent: return "REPLAY_SENT";
        case EventKind::LoginFailure: return "LOGIN_FAILURE";
    }
    throw std::invalid_argument("unknown event kind");
}

std::string Transcript::to_jsonl() const {
    std::string out;
    for (const Event& e : events) {
        nlohmann::json j;
        j["seq"] = e.seq;
        j["time"] = e.time;
        j["kind"] = to_string(e.kind);
        j["payload"] = e.payload;
        out += j.dump();
        out += '\n';
    }
    return out;
}

Transcript scenario_legit_session(SchemeTag scheme, const SystemParams& params,
                                  const ServerSecret& secret, std::uint64_t seed,
                                  const SimOptions& opts) {
    if (scheme == SchemeTag::AwasthiLal) {
        throw UnsupportedCombination(
            "awasthi-lal has no runnable login phase; use the flaw scenario");
    }
    SeededRng rng(seed);
    SimClock clock{Timestamp{opts.start_time}, opts.card_skew_s};
    Recorder rec;

    SeededRng id_rng = rng.fork("identity");
    const Identity id = random_valid_identity(params, id_rng);
    auto [cred, card] = register_user(secret, params, id, scheme);
    rec.emit(clock.now.seconds, EventKind::Register,
             {{"scheme", to_string(scheme)}, {"id", id.raw}});

    clock.advance(1);
    SeededRng login_rng = rng.fork("login");
    const LoginRequest req =
        make_login(card, CardInputs::from_credential(cred, scheme), clock.card_time(), login_rng);
    rec.emit(clock.now.seconds, EventKind::LoginSent, request_payload(req));

    clock.advance(opts.transit_delay_s);
    const VerifyResult result = verify(secret, params, req, clock.now);
    rec.emit(clock.now.seconds, EventKind::LoginVerdict, verdict_payload(result));
    return rec.take();
}

Transcript scenario_replay(SchemeTag scheme, const SystemParams& params,
                           const ServerSecret& secret, std::uint64_t delay_s,
                           std::uint64_t seed, const SimOptions& opts) {
    if (scheme == SchemeTag::AwasthiLal) {
        throw UnsupportedCombination(
            "awasthi-lal has no runnable login phase; use the flaw scenario");
    }
    SeededRng rng(seed);
    SimClock clock{Timestamp{opts.start_time}, opts.card_skew_s};
    Recorder rec;

    SeededRng id_rng = rng.fork("identity");
    const Identity id = random_valid_identity(params, id_rng);
    auto [cred, card] = register_user(secret, params, id, scheme);
    rec.emit(clock.now.seconds, EventKind::Register,
             {{"scheme", to_string(scheme)}, {"id", id.raw}});

    clock.advance(1);
    SeededRng login_rng = rng.fork("login");
    const LoginRequest req =
        make_login(card, CardInputs::from_credential(cred, scheme), clock.card_time(), login_rng);
    rec.emit(clock.now.seconds, EventKind::LoginSent, request_payload(req));
    rec.emit(clock.now.seconds, EventKind::EavesdropCapture, request_payload(req));

    clock.advance(opts.transit_delay_s);
    const VerifyResult original = verify(secret, params, req, clock.now);
    rec.emit(clock.now.seconds, EventKind::LoginVerdict, verdict_payload(original));

    // Replayed so it reaches the server delay_s after the original timestamp,
    // but never before the original verdict was rendered.
    const std::uint64_t replay_at = std::max(req.t.seconds + delay_s, clock.now.seconds);
    clock.now.seconds = replay_at;
    nlohmann::json replay_info = request_payload(req);
    replay_info["replay_delay_s"] = delay_s;
    rec.emit(clock.now.seconds, EventKind::ReplaySent, std::move(replay_info));
    const VerifyResult replay = verify(secret, params, req, clock.now);
    rec.emit(clock.now.seconds, EventKind::LoginVerdict, verdict_payload(replay));
    return rec.take();
}

Transcript scenario_awasthi_lal_flaw(const SystemParams& params, const ServerSecret& secret,
                                     std::uint64_t seed, const SimOptions& opts) {
    SeededRng rng(seed);
    SimClock clock{Timestamp{opts.start_time}, opts.card_skew_s};
    Recorder rec;

    SeededRng id_rng = rng.fork("identity");
    const Identity id = random_valid_identity(params, id_rng);
    auto [cred, card] = register_user(secret, params, id, SchemeTag::AwasthiLal);
    rec.emit(clock.now.seconds, EventKind::Register,
             {{"scheme", to_string(SchemeTag::AwasthiLal)}, {"id", id.raw}});

    clock.advance(1);
    SeededRng login_rng = rng.fork("login");
    try {
        make_login(card, CardInputs::from_credential(cred, SchemeTag::AwasthiLal),
                   clock.card_time(), login_rng);
        throw std::logic_error("awasthi-lal login unexpectedly produced a request");
    } catch (const MissingSID& e) {
        rec.emit(clock.now.seconds, EventKind::LoginFailure,
                 {{"error", "MissingSID"}, {"detail", e.what()}});
    }
    return rec.take();
}

Transcript scenario_forgery(AttackTag attack, SchemeTag scheme, const SystemParams& params,
                            const ServerSecret& secret, std::uint64_t seed,
                            const SimOptions& opts) {
    if (scheme != SchemeTag::AwasthiLal &&
        !expected_success(attack, scheme, params.id_policy).has_value()) {
        throw UnsupportedCombination(std::string(to_string(attack)) + " does not apply to " +
                                     std::string(to_string(scheme)));
    }
    SeededRng rng(seed);
    SimClock clock{Timestamp{opts.start_time}, opts.card_skew_s};
    Recorder rec;

    SeededRng attack_rng = rng.fork("attack");
    clock.advance(1);
    const ForgeryAttempt attempt = attempt_forgery(params, secret, attack, scheme,
                                                   clock.card_time(), attack_rng);
    rec.emit(opts.start_time, EventKind::Register,
             {{"scheme", to_string(scheme)}, {"id", attempt.victim_id}, {"role", "victim"}});
    if (attempt.attacker_id) {
        rec.emit(opts.start_time, EventKind::Register,
                 {{"scheme", to_string(scheme)}, {"id", *attempt.attacker_id},
                  {"role", "attacker"}});
    }
    if (!attempt.request) {
        rec.emit(clock.now.seconds, EventKind::LoginFailure,
                 {{"error", "no forged login"}, {"detail", attempt.note}});
        return rec.take();
    }
    rec.emit(clock.now.seconds, EventKind::LoginSent, request_payload(*attempt.request));
    clock.advance(opts.transit_delay_s);
    const VerifyResult result = verify(secret, params, *attempt.request, clock.now);
    rec.emit(clock.now.seconds, EventKind::LoginVerdict, verdict_payload(result));
    return rec.take();
}

}  // namespace authlab::sim
