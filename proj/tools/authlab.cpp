// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
//
// Exit codes (stable contract):
//   0  success / login ACCEPT / matrix as expected
//   2  usage error or malformed input
//   3  login REJECT
//   4  scheme flaw (awasthi-lal login cannot run)
//   5  attack matrix deviates from the expected pattern
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "authlab/errors.hpp"
#include "authlab/params_io.hpp"
#include "authlab/simulator.hpp"

namespace {

using namespace authlab;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr std::uint64_t kDefaultLoginTime = 1'000'000'000;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("AUTHLAB_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return kDefaultSeed;
}

SystemParams load_params(const std::string& path) {
    return params_from_json(nlohmann::json::parse(read_file(path)));
}

ServerSecret load_secret(const std::string& path, const SystemParams& params) {
    return secret_from_json(nlohmann::json::parse(read_file(path)), params);
}

// Self-contained parameters for commands run without --config/--secret:
// derived from the seed alone, so bare invocations reproduce exactly.
std::pair<SystemParams, ServerSecret> default_setup(std::uint64_t seed) {
    SeededRng rng(seed);
    SeededRng prime_rng = rng.fork("default-prime");
    SystemParams params = make_system_params(gen_prime(64, prime_rng), HashId::Sha256, 60,
                                             IdPolicy::Permissive);
    SeededRng secret_rng = rng.fork("default-secret");
    ServerSecret secret = make_server_secret(params, secret_rng);
    return {std::move(params), std::move(secret)};
}

std::pair<SystemParams, ServerSecret> load_setup(const std::string& config_path,
                                                 const std::string& secret_path,
                                                 std::uint64_t seed) {
    if (config_path.empty() != secret_path.empty()) {
        throw Error("--config and --secret must be given together");
    }
    if (config_path.empty()) {
        return default_setup(seed);
    }
    SystemParams params = load_params(config_path);
    ServerSecret secret = load_secret(secret_path, params);
    return {std::move(params), std::move(secret)};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        write_file(out_path, text);
    }
}

int cmd_keygen(unsigned bits, std::uint64_t seed, const std::string& params_path,
               const std::string& secret_path, std::uint64_t delta_t, const std::string& policy) {
    SeededRng rng(seed);
    SeededRng prime_rng = rng.fork("prime");
    SystemParams params = make_system_params(gen_prime(bits, prime_rng), HashId::Sha256, delta_t,
                                             id_policy_from_string(policy));
    SeededRng secret_rng = rng.fork("secret");
    ServerSecret secret = make_server_secret(params, secret_rng);
    write_file(params_path, params_to_json(params).dump(2) + "\n");
    write_file(secret_path, secret_to_json(secret).dump(2) + "\n");
    std::cout << "public parameters -> " << params_path << "\n"
              << "server secret     -> " << secret_path
              << "  (plaintext demo file; keep it out of anything shared)\n";
    return 0;
}

int cmd_register(const std::string& config_path, const std::string& secret_path,
                 const std::string& scheme_name, const std::string& raw_id,
                 const std::string& out_path) {
    SystemParams params = load_params(config_path);
    ServerSecret secret = load_secret(secret_path, params);
    const SchemeTag scheme = scheme_from_string(scheme_name);
    const Identity id = make_identity(raw_id, params);
    auto [cred, card] = register_user(secret, params, id, scheme);
    emit(credential_to_json(cred, scheme).dump(), out_path);
    return 0;
}

int cmd_login(const std::string& config_path, const std::string& cred_path,
              std::uint64_t time_s, std::uint64_t seed, const std::string& out_path) {
    SystemParams params = load_params(config_path);
    nlohmann::json j = nlohmann::json::parse(read_file(cred_path));
    const SchemeTag scheme = scheme_from_string(j.at("scheme").get<std::string>());

    CardInputs inputs;
    inputs.id = make_identity(j.at("id").get<std::string>(), params);
    inputs.pw = from_hex(j.at("pw").get<std::string>());
    if (j.contains("sid")) {
        inputs.sid = from_hex(j.at("sid").get<std::string>());
    }

    SmartCard card{scheme, params.hash, params.p};
    SeededRng rng = SeededRng(seed).fork("login");
    const LoginRequest req = make_login(card, inputs, Timestamp{time_s}, rng);
    emit(serialize_request(req), out_path);
    return 0;
}

int cmd_verify(const std::string& config_path, const std::string& secret_path,
               const std::string& request_path, std::optional<std::uint64_t> received_s) {
    SystemParams params = load_params(config_path);
    ServerSecret secret = load_secret(secret_path, params);
    const LoginRequest req = deserialize_request(read_file(request_path));
    const Timestamp t_c{received_s ? *received_s : req.t.seconds + 1};
    const VerifyResult result = verify(secret, params, req, t_c);
    nlohmann::json out{{"verdict", to_string(result.verdict)},
                       {"reason", to_string(result.reason)}};
    std::cout << out.dump() << "\n";
    return result.accepted() ? 0 : 3;
}

int cmd_attack_matrix(const std::string& config_path, const std::string& secret_path,
                      std::size_t trials, std::uint64_t seed, const std::string& output) {
    auto [params, secret] = load_setup(config_path, secret_path, seed);
    const SchemeTag targets[] = {SchemeTag::HwangLi, SchemeTag::Slh, SchemeTag::Improved};
    SeededRng rng = SeededRng(seed).fork("matrix");
    const std::vector<AttackOutcome> outcomes =
        run_attack_matrix(params, secret, targets, trials, rng);

    if (output == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const AttackOutcome& cell : outcomes) {
            arr.push_back(outcome_to_json(cell));
        }
        std::cout << arr.dump() << "\n";
    } else {
        std::printf("%-12s %-10s %-8s %s\n", "ATTACK", "SCHEME", "FORGED", "DETAIL");
        for (const AttackOutcome& cell : outcomes) {
            std::printf("%-12s %-10s %-8s %s\n", std::string(to_string(cell.attack)).c_str(),
                        std::string(to_string(cell.scheme)).c_str(),
                        cell.succeeded ? "yes" : "no", cell.detail.c_str());
        }
    }
    return matrix_matches_expected(outcomes, params.id_policy) ? 0 : 5;
}

int cmd_scenario(const std::string& name, const std::string& scheme_name,
                 const std::string& attack_name, std::uint64_t delay_s, std::int64_t skew_s,
                 const std::string& config_path, const std::string& secret_path,
                 std::uint64_t seed, const std::string& out_path) {
    auto [params, secret] = load_setup(config_path, secret_path, seed);
    sim::SimOptions opts;
    opts.card_skew_s = skew_s;

    sim::Transcript transcript;
    if (name == "legit") {
        transcript = sim::scenario_legit_session(scheme_from_string(scheme_name), params, secret,
                                                 seed, opts);
    } else if (name == "replay") {
        transcript = sim::scenario_replay(scheme_from_string(scheme_name), params, secret,
                                          delay_s, seed, opts);
    } else if (name == "awasthi-lal-flaw") {
        transcript = sim::scenario_awasthi_lal_flaw(params, secret, seed, opts);
    } else if (name == "forgery") {
        transcript = sim::scenario_forgery(attack_from_string(attack_name),
                                           scheme_from_string(scheme_name), params, secret, seed,
                                           opts);
    } else {
        throw Error("unknown scenario: " + name);
    }
    emit(transcript.to_jsonl(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "authlab: four classic smart-card remote-user authentication schemes, the published "
        "attacks against them, and a deterministic simulator"};
    app.require_subcommand(1);
    app.fallthrough();  // let --seed appear after the subcommand name

    std::optional<std::uint64_t> seed_flag;
    app.add_option("--seed", seed_flag,
                   "RNG seed (fallback: AUTHLAB_SEED env, then " + std::to_string(kDefaultSeed) +
                       ")");

    // keygen
    auto* keygen = app.add_subcommand("keygen", "generate public parameters and server secret");
    unsigned bits = 64;
    std::string kg_params = "params.json", kg_secret = "secret.json", kg_policy = "permissive";
    std::uint64_t kg_delta = 60;
    keygen->add_option("--bits", bits, "prime size in bits (>= 16)")
        ->check(CLI::Range(16u, 2048u));
    keygen->add_option("--out-params", kg_params, "public parameters path");
    keygen->add_option("--out-secret", kg_secret, "server secret path");
    keygen->add_option("--delta-t", kg_delta, "freshness window in seconds")
        ->check(CLI::PositiveNumber);
    keygen->add_option("--id-policy", kg_policy, "strict | permissive")
        ->check(CLI::IsMember({"strict", "permissive"}));

    // register
    auto* reg = app.add_subcommand("register", "issue a credential and smart card");
    std::string rg_config, rg_secret, rg_scheme, rg_id, rg_out;
    reg->add_option("--config", rg_config, "public parameters file")->required();
    reg->add_option("--secret", rg_secret, "server secret file")->required();
    reg->add_option("--scheme", rg_scheme, "hwang-li | slh | awasthi-lal | improved")->required();
    reg->add_option("--id", rg_id, "identity string to register")->required();
    reg->add_option("--out", rg_out, "write credential JSON here (default: stdout)");

    // login
    auto* login = app.add_subcommand("login", "build a login request from a credential");
    std::string lg_config, lg_cred, lg_out;
    std::uint64_t lg_time = kDefaultLoginTime;
    login->add_option("--config", lg_config, "public parameters file")->required();
    login->add_option("--credential", lg_cred, "credential JSON from `register`")->required();
    login->add_option("--time", lg_time, "card timestamp (seconds)");
    login->add_option("--out", lg_out, "write request JSON here (default: stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "check a login request server-side");
    std::string vf_config, vf_secret, vf_request;
    std::optional<std::uint64_t> vf_time;
    ver->add_option("--config", vf_config, "public parameters file")->required();
    ver->add_option("--secret", vf_secret, "server secret file")->required();
    ver->add_option("--request", vf_request, "login request file")->required();
    ver->add_option("--time-received", vf_time, "server receipt time (default: request t + 1)");

    // attack-matrix
    auto* matrix = app.add_subcommand("attack-matrix",
                                      "run every published attack against every scheme");
    std::string mx_config, mx_secret, mx_output = "table";
    std::size_t mx_trials = 1000;
    matrix->add_option("--config", mx_config, "public parameters file (default: derived from seed)");
    matrix->add_option("--secret", mx_secret, "server secret file (default: derived from seed)");
    matrix->add_option("--trials", mx_trials, "fresh victims per cell")
        ->check(CLI::PositiveNumber);
    matrix->add_option("--output", mx_output, "table | json")
        ->check(CLI::IsMember({"table", "json"}));

    // scenario
    auto* scen = app.add_subcommand("scenario", "replayable single-session simulations");
    std::string sc_name, sc_scheme = "improved", sc_attack = "chan-cheng";
    std::string sc_config, sc_secret, sc_out;
    std::uint64_t sc_delay = 0;
    std::int64_t sc_skew = 0;
    scen->add_option("--name", sc_name, "legit | replay | awasthi-lal-flaw | forgery")
        ->required()
        ->check(CLI::IsMember({"legit", "replay", "awasthi-lal-flaw", "forgery"}));
    scen->add_option("--scheme", sc_scheme, "target scheme");
    scen->add_option("--attack", sc_attack, "attack for the forgery scenario");
    scen->add_option("--delay", sc_delay, "replay delay in seconds");
    scen->add_option("--skew", sc_skew, "card clock skew in seconds");
    scen->add_option("--config", sc_config, "public parameters file (default: derived from seed)");
    scen->add_option("--secret", sc_secret, "server secret file (default: derived from seed)");
    scen->add_option("--out", sc_out, "write transcript JSONL here (default: stdout)");

    try {
        app.parse(argc, argv);
        const std::uint64_t seed = resolve_seed(seed_flag);
        if (*keygen) {
            return cmd_keygen(bits, seed, kg_params, kg_secret, kg_delta, kg_policy);
        }
        if (*reg) {
            return cmd_register(rg_config, rg_secret, rg_scheme, rg_id, rg_out);
        }
        if (*login) {
            return cmd_login(lg_config, lg_cred, lg_time, seed, lg_out);
        }
        if (*ver) {
            return cmd_verify(vf_config, vf_secret, vf_request, vf_time);
        }
        if (*matrix) {
            return cmd_attack_matrix(mx_config, mx_secret, mx_trials, seed, mx_output);
        }
        if (*scen) {
            return cmd_scenario(sc_name, sc_scheme, sc_attack, sc_delay, sc_skew, sc_config,
                                sc_secret, seed, sc_out);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const MissingSID& e) {
        std::cerr << "scheme flaw: " << e.what() << "\n"
                  << "The awasthi-lal card needs C1 = SID^r mod p, but the user keys in only "
                     "(ID, PW) and the card stores only (f, p): the login phase cannot proceed. "
                     "The improved scheme fixes this by issuing SID||ID.\n";
        return 4;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
