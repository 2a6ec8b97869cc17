// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
//
// Drives the real CLI binary end to end. ctest passes the binary path as the
// last argument; it is stripped before doctest sees the command line.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

std::string g_cli;
std::filesystem::path g_dir;

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        output.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(output)};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string path(const char* name) { return (g_dir / name).string(); }

}  // namespace

TEST_CASE("keygen is deterministic and splits public from secret") {
    const std::string pa = path("pa.json"), sa = path("sa.json");
    const std::string pb = path("pb.json"), sb = path("sb.json");
    CHECK(run("keygen --bits 64 --seed 5 --out-params " + pa + " --out-secret " + sa).exit_code ==
          0);
    CHECK(run("keygen --bits 64 --seed 5 --out-params " + pb + " --out-secret " + sb).exit_code ==
          0);
    CHECK(slurp(pa) == slurp(pb));
    CHECK(slurp(sa) == slurp(sb));

    const auto params = nlohmann::json::parse(slurp(pa));
    const auto secret = nlohmann::json::parse(slurp(sa));
    CHECK(params.contains("p"));
    CHECK_FALSE(params.contains("red_key"));
    CHECK(secret.contains("red_key"));
    CHECK(secret.contains("x_s"));

    CHECK(run("keygen --bits 8 --seed 5").exit_code == 2);  // below the 16-bit floor
}

TEST_CASE("register/login/verify chain exits 0 and rejects tampering with 3") {
    const std::string p = path("p.json"), s = path("s.json");
    REQUIRE(run("keygen --bits 64 --seed 9 --out-params " + p + " --out-secret " + s).exit_code ==
            0);

    const std::string cred = path("cred.json"), req = path("req.json");
    CHECK(run("register --config " + p + " --secret " + s +
              " --scheme improved --id 123456789 --out " + cred)
              .exit_code == 0);
    CHECK(run("login --config " + p + " --credential " + cred + " --out " + req).exit_code == 0);
    const RunResult ok = run("verify --config " + p + " --secret " + s + " --request " + req);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("ACCEPT") != std::string::npos);

    // doctor c2 and expect exit 3
    auto j = nlohmann::json::parse(slurp(req));
    std::string c2 = j["c2"];
    c2.back() = c2.back() == '0' ? '1' : '0';
    j["c2"] = c2;
    std::ofstream(path("req_bad.json")) << j.dump();
    const RunResult bad =
        run("verify --config " + p + " --secret " + s + " --request " + path("req_bad.json"));
    CHECK(bad.exit_code == 3);
    CHECK(bad.output.find("REJECT") != std::string::npos);

    // stale receipt time
    const std::uint64_t t = nlohmann::json::parse(slurp(req))["t"].get<std::uint64_t>();
    const RunResult stale = run("verify --config " + p + " --secret " + s + " --request " + req +
                                " --time-received " + std::to_string(t + 1000));
    CHECK(stale.exit_code == 3);
    CHECK(stale.output.find("STALE_TIMESTAMP") != std::string::npos);
}

TEST_CASE("awasthi-lal login explains the flaw and exits 4") {
    const std::string p = path("p2.json"), s = path("s2.json");
    REQUIRE(run("keygen --bits 64 --seed 11 --out-params " + p + " --out-secret " + s)
                .exit_code == 0);
    const std::string cred = path("cred_al.json");
    REQUIRE(run("register --config " + p + " --secret " + s +
                " --scheme awasthi-lal --id 987654 --out " + cred)
                .exit_code == 0);
    const RunResult r = run("login --config " + p + " --credential " + cred);
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("SID") != std::string::npos);
}

TEST_CASE("usage and malformed input exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("attack-matrix --trials 0").exit_code == 2);
    CHECK(run("verify --config nope.json --secret nope.json --request nope.json").exit_code == 2);

    const std::string p = path("p3.json"), s = path("s3.json");
    REQUIRE(run("keygen --bits 64 --seed 13 --out-params " + p + " --out-secret " + s)
                .exit_code == 0);
    CHECK(run("register --config " + p + " --secret " + s + " --scheme nope --id 5").exit_code ==
          2);
    CHECK(run("register --config " + p + " --secret " + s + " --scheme improved --id 1")
              .exit_code == 2);  // degenerate identity

    std::ofstream(path("trunc.json")) << "{\"c1\":\"0\"";
    CHECK(run("verify --config " + p + " --secret " + s + " --request " + path("trunc.json"))
              .exit_code == 2);
}

TEST_CASE("attack-matrix json output is byte-stable and exits 0 on the expected pattern") {
    const RunResult a = run("attack-matrix --seed 42 --trials 60 --output json");
    const RunResult b = run("attack-matrix --seed 42 --trials 60 --output json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.output == b.output);

    const auto matrix = nlohmann::json::parse(a.output);
    CHECK(matrix.is_array());
    CHECK(matrix.size() == 14);

    const RunResult table = run("attack-matrix --seed 42 --trials 20 --output table");
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("chan-cheng") != std::string::npos);

    // a different seed still reproduces the published pattern
    CHECK(run("attack-matrix --seed 777 --trials 20 --output json").exit_code == 0);
}

TEST_CASE("AUTHLAB_SEED env var is the seed fallback") {
    const RunResult flag = run("attack-matrix --seed 64 --trials 10 --output json");
    FILE* pipe = popen(("AUTHLAB_SEED=64 " + g_cli + " attack-matrix --trials 10 --output json 2>&1")
                           .c_str(),
                       "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    pclose(pipe);
    CHECK(output == flag.output);
}

TEST_CASE("scenario subcommand writes replayable jsonl") {
    const std::string out1 = path("t1.jsonl"), out2 = path("t2.jsonl");
    CHECK(run("scenario --name legit --scheme improved --seed 3 --out " + out1).exit_code == 0);
    CHECK(run("scenario --name legit --scheme improved --seed 3 --out " + out2).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(slurp(out1).find("LOGIN_VERDICT") != std::string::npos);

    const RunResult flaw = run("scenario --name awasthi-lal-flaw --seed 3");
    CHECK(flaw.exit_code == 0);
    CHECK(flaw.output.find("MissingSID") != std::string::npos);

    const RunResult forgery = run("scenario --name forgery --scheme slh --attack leung --seed 3");
    CHECK(forgery.exit_code == 0);
    CHECK(forgery.output.find("ACCEPT") != std::string::npos);

    CHECK(run("scenario --name legit --scheme awasthi-lal --seed 3").exit_code == 2);
    CHECK(run("scenario --name forgery --scheme hwang-li --attack leung --seed 3").exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli [doctest args] <path-to-authlab>\n");
        return 1;
    }
    g_cli = argv[argc - 1];

    char tmpl[] = "/tmp/authlab_cli_XXXXXX";
    if (mkdtemp(tmpl) == nullptr) {
        std::perror("mkdtemp");
        return 1;
    }
    g_dir = tmpl;

    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    const int rc = ctx.run();
    std::filesystem::remove_all(g_dir);
    return rc;
}
