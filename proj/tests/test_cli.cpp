#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef PRIMAL_CLI_PATH
#error "PRIMAL_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PRIMAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("reduce") {
    auto r = run_cli("reduce 72");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "9_\xCF\x86, k=1, coord 9_8\n");

    auto zero = run_cli("reduce 0");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "\xE2\x88\x85 (null class)\n");

    auto neg = run_cli("reduce -927");
    CHECK(neg.exit_code == 0);
    CHECK(neg.out.rfind("-9_\xCF\x86", 0) == 0);

    CHECK(run_cli("reduce twelve").exit_code == 64);
}

TEST_CASE("encode and decode") {
    CHECK(run_cli("encode 359").out == "8_40\n");
    CHECK(run_cli("decode 8 40").out == "359\n");
    CHECK(run_cli("decode 1 1").out == "1\n");
    CHECK(run_cli("decode -5 2").out == "-14\n");
    CHECK(run_cli("decode 0 1").exit_code == 64);
    CHECK(run_cli("decode 3 0").exit_code == 64);
    CHECK(run_cli("encode 0").exit_code == 64);
}

TEST_CASE("audit exit codes") {
    auto ok = run_cli("audit 4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.rfind("81/81 match", 0) == 0);

    auto strict = run_cli("audit 7 --strict");
    CHECK(strict.exit_code == 2);
    CHECK(strict.out.find("80/81 match") != std::string::npos);

    auto lax = run_cli("audit 6");
    CHECK(lax.exit_code == 0);
    CHECK(lax.out.rfind("9/81 match", 0) == 0);

    CHECK(run_cli("audit 12").exit_code == 64);
}

TEST_CASE("table rendering reaches stdout") {
    auto t = run_cli("table 7 --format csv");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("1;4;7") != std::string::npos);
    CHECK(run_cli("table 2").exit_code == 64);
}

TEST_CASE("axioms") {
    auto add = run_cli("axioms add");
    CHECK(add.exit_code == 0);
    CHECK(add.out.find("neutral: 9_\xCF\x86") != std::string::npos);

    auto mul = run_cli("axioms mul");
    CHECK(mul.exit_code == 0);
    CHECK(mul.out.find("no opposite for: 3 6 9") != std::string::npos);
}

TEST_CASE("conjecture subcommands") {
    auto cycle = run_cli("conjecture power-cycle --max-n 200");
    CHECK(cycle.exit_code == 0);
    CHECK(cycle.out.rfind("0 violations", 0) == 0);

    auto witness = run_cli("conjecture witness mul 2 2 13 --bound 100");
    CHECK(witness.exit_code == 0);
    CHECK(witness.out.rfind("no witnesses, exhausted", 0) == 0);

    // target 5 is not congruent to 2*2: domain refusal
    CHECK(run_cli("conjecture witness mul 2 2 5 --bound 100").exit_code == 1);

    auto cubes = run_cli("conjecture cubes-profile");
    CHECK(cubes.exit_code == 0);
    CHECK(cubes.out.find("0 1 2 3 6 7 8") != std::string::npos);

    CHECK(run_cli("conjecture ninth-equiv --bound 1000").out.rfind("0 violations", 0) == 0);
    CHECK(run_cli("conjecture fermat-profile --exponent 3").out.find("cycle_stable=true") !=
          std::string::npos);
}

TEST_CASE("search and bench") {
    auto s = run_cli("search --k 29 --bound 10");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("(1,1,3)") != std::string::npos);

    auto filtered = run_cli("search --k 13 --bound 100");
    CHECK(filtered.exit_code == 0);
    CHECK(filtered.out.find("filtered-out") != std::string::npos);

    auto b = run_cli("bench --k-min 1 --k-max 20 --bound 10");
    CHECK(b.exit_code == 0);
    CHECK(b.out.find("solution sets equal") != std::string::npos);

    // resource guard
    CHECK(run_cli("search --k-min 1 --k-max 100 --bound 500 --ceiling 1000").exit_code == 1);
    CHECK(run_cli("search --bound nope").exit_code == 64);
}

TEST_CASE("json output is parseable and stable") {
    auto a = run_cli("--json search --k-min 1 --k-max 12 --bound 6 --workers 2");
    auto b = run_cli("--json search --k-min 1 --k-max 12 --bound 6 --workers 8");
    CHECK(a.exit_code == 0);
    auto ja = nlohmann::json::parse(a.out);
    auto jb = nlohmann::json::parse(b.out);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
    CHECK(ja["per_k"].size() == 12);

    auto w = run_cli("--json conjecture witness mul 2 2 4 --bound 50");
    auto jw = nlohmann::json::parse(w.out);
    CHECK(jw["universal"] == false);
    CHECK(jw["exhausted"] == true);
}
