#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <doctest.h>
#include <json.hpp>

#ifndef ANDERSON_LAB_CLI_PATH
#define ANDERSON_LAB_CLI_PATH "anderson_lab"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        env + " " + std::string(ANDERSON_LAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli classify") {
    SUBCASE("reflection-free witness is exactly good, exit 0") {
        const RunResult r = run_cli("classify --dims 7 --potential 1,1,-1,1,-1,-1,-1");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["verdict"] == "GoodExact");
        CHECK(j["schema_version"] == 1);
    }
    SUBCASE("constant potential is certified bad") {
        const RunResult r = run_cli("classify --dims 5 --potential 1,1,1,1,1");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["verdict"] == "BadCertified");
        CHECK(j["certificate"]["reason"] == "degenerate-spectrum");
    }
    SUBCASE("length mismatch exits 1") {
        CHECK(run_cli("classify --dims 7 --potential 1,1").exit_code == 1);
    }
    SUBCASE("non-numeric potential exits 1") {
        CHECK(run_cli("classify --dims 3 --potential 1,x,1").exit_code == 1);
    }
    SUBCASE("sampled continuous potential on the square grid") {
        const RunResult r = run_cli("classify --dims 3,3 --dist uniform:-1,1 --seed 9");
        CHECK(r.exit_code == 0);
        CHECK(nlohmann::json::parse(r.out)["verdict"] == "GoodNumerical");
    }
}

TEST_CASE("cli exact and bound") {
    SUBCASE("closed form on the 7-cycle") {
        const RunResult r = run_cli("exact --L 7 --p 0.5");
        CHECK(r.exit_code == 0);
        CHECK(nlohmann::json::parse(r.out)["bad_probability"].get<double>() ==
              doctest::Approx(0.78125).epsilon(1e-14));
    }
    SUBCASE("composite length exits 1") {
        CHECK(run_cli("exact --L 9 --p 0.5").exit_code == 1);
    }
    SUBCASE("shift bound on the square grid") {
        const RunResult r = run_cli("bound --dims 3,3 --p 0.5");
        CHECK(r.exit_code == 0);
        CHECK(nlohmann::json::parse(r.out)["bad_probability_lower_bound"].get<double>() ==
              doctest::Approx(0.02734375).epsilon(1e-14));
    }
}

TEST_CASE("cli heatmap") {
    SUBCASE("shape and bytewise determinism") {
        const std::string args = "heatmap --dims 12 --dist uniform:-1,1 --t-grid 0.1:5:4 --seed 7";
        const RunResult a = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out.rfind("t,k,lambda,log_ipr\n", 0) == 0);
        const long lines = std::count(a.out.begin(), a.out.end(), '\n');
        CHECK(lines == 1 + 4 * 12);

        const RunResult b = run_cli(args);
        CHECK(b.out == a.out);

        // Worker count must not leak into the bytes.
        const RunResult c = run_cli(args, "ANDERSON_LAB_THREADS=1");
        CHECK(c.out == a.out);
    }
    SUBCASE("reversed range exits 1") {
        CHECK(run_cli("heatmap --dims 12 --dist uniform:-1,1 --t-grid 5:0.1:50").exit_code == 1);
    }
}

TEST_CASE("cli enumerate and mc") {
    SUBCASE("every sign pattern on the 5-cycle is bad") {
        const RunResult r = run_cli("enumerate --dims 5 --p 0.5");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["estimate"].get<double>() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(j["trials"] == 32);
        CHECK(j["params"]["classifier"] == "exact-prime");
    }
    SUBCASE("monte carlo on continuous potentials finds nothing bad") {
        const RunResult r =
            run_cli("mc --dims 5 --dist uniform:-1,1 --trials 50 --seed 21");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["estimate"].get<double>() == 0.0);
        CHECK(j["counts_by_verdict"]["GoodExact"] == 50);
    }
}

TEST_CASE("cli paths") {
    const RunResult r = run_cli("paths --dims 5 --from 2 --to 0");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["distance"] == 2);
    CHECK(j["paths"].size() == 1);
    CHECK(j["path_sum"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(j["propagator_power_entry"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cli selftest fault injection") {
    // A corrupted eigensolver bound must make the selftest fail and name the
    // broken invariant.
    const RunResult r = run_cli("selftest --criterion 6 --inject-fault eigh-residual");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("eigensolver residual bound exceeded") != std::string::npos);
}
