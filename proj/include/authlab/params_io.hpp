// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "authlab/attacks.hpp"

namespace authlab {

// JSON file formats shared by the CLI and the tests. The params file is
// public; the secret file is demo-grade plaintext and says so in the docs.
//
//   params:     { "p": hex, "hash": "sha2-256", "delta_t_s": int,
//                 "id_policy": "strict"|"permissive" }
//   secret:     { "x_s": hex, "red_key": hex }
//   credential: { "scheme": tag, "id": string, "pw": hex, "sid": hex? }

nlohmann::json params_to_json(const SystemParams& params);
SystemParams params_from_json(const nlohmann::json& j);  // re-checks primality of p

nlohmann::json secret_to_json(const ServerSecret& secret);
ServerSecret secret_from_json(const nlohmann::json& j, const SystemParams& params);

nlohmann::json credential_to_json(const Credential& cred, SchemeTag scheme);

nlohmann::json outcome_to_json(const AttackOutcome& outcome);

void write_file(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace authlab
