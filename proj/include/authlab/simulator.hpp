// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "authlab/attacks.hpp"

namespace authlab::sim {

// Virtual time only: nothing in the simulator reads a wall clock. The skew
// offsets the card's view of `now`; the server always sees `now` itself.
struct SimClock {
    Timestamp now;
    std::int64_t skew_s = 0;

    void advance(std::uint64_t seconds) { now.seconds += seconds; }
    Timestamp card_time() const {
        return Timestamp{now.seconds + static_cast<std::uint64_t>(skew_s)};
    }
};

enum class EventKind {
    Register,
    LoginSent,
    LoginVerdict,
    EavesdropCapture,
    ReplaySent,
    LoginFailure,  // a login phase that could not produce a request at all
};

std::string_view to_string(EventKind kind);

struct Event {
    std::uint64_t seq;
    std::uint64_t time;
    EventKind kind;
    nlohmann::json payload;
};

struct Transcript {
    std::vector<Event> events;

    // One event per line: {"seq":..,"time":..,"kind":..,"payload":{..}}.
    std::string to_jsonl() const;
};

struct SimOptions {
    std::uint64_t start_time = 1'000'000'000;
    std::uint64_t transit_delay_s = 1;
    std::int64_t card_skew_s = 0;
};

// register -> login -> verify after transit; ends in a LOGIN_VERDICT event.
// The scheme must be able to run its login phase (not awasthi-lal).
Transcript scenario_legit_session(SchemeTag scheme, const SystemParams& params,
                                  const ServerSecret& secret, std::uint64_t seed,
                                  const SimOptions& opts = {});

// An eavesdropper captures an honest request and replays it so that it
// reaches the server delay_s seconds after the original timestamp (never
// before the original verdict). Window-only freshness means an in-window
// replay is accepted; only delay_s > delta_t is caught.
Transcript scenario_replay(SchemeTag scheme, const SystemParams& params,
                           const ServerSecret& secret, std::uint64_t delay_s,
                           std::uint64_t seed, const SimOptions& opts = {});

// Registration succeeds, then the login phase dies with MissingSID before
// any request exists; the transcript records a LOGIN_FAILURE instead of a
// LOGIN_SENT/LOGIN_VERDICT pair.
Transcript scenario_awasthi_lal_flaw(const SystemParams& params, const ServerSecret& secret,
                                     std::uint64_t seed, const SimOptions& opts = {});

// One attack attempt against one scheme, ending in a verdict event (or a
// failure event when no forged login can be built). Throws
// UnsupportedCombination for cells the attack matrix does not define.
Transcript scenario_forgery(AttackTag attack, SchemeTag scheme, const SystemParams& params,
                            const ServerSecret& secret, std::uint64_t seed,
                            const SimOptions& opts = {});

}  // namespace authlab::sim
