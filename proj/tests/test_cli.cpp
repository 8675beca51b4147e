#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// Exercises the gr-cup binary end to end. Skipped when GRCUP_BIN is not set
// (ctest provides it; direct runs of the unit binary may not).

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run(const std::string& args) {
    const char* bin = std::getenv("GRCUP_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool cli_available() {
    return std::getenv("GRCUP_BIN") != nullptr;
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "grcup-cli-XXXXXX").string();
        REQUIRE(::mkdtemp(tmpl.data()) != nullptr);
        path = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("generators emits the pinned JSON schema") {
    if (!cli_available()) return;
    const CliResult r = run("generators --n 4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"n\":4,\"special\":true,\"m\":2,\"g\":[[],[[3,0],[0,2]],[[2,1]]]}\n");

    const CliResult text = run("generators --n 4");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("g5 = 0\n") != std::string::npos);
    CHECK(text.out.find("g6 = w2^3 + w3^2\n") != std::string::npos);
    CHECK(text.out.find("g7 = w2^2*w3\n") != std::string::npos);
}

TEST_CASE("usage and precondition failures exit with code 2") {
    if (!cli_available()) return;
    CHECK(run("generators --n 3").exit_code == 2);
    CHECK(run("generators").exit_code == 2);
    CHECK(run("cup --n 4 --format csv").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("table --from 9 --to 5").exit_code == 2);
    CHECK(run("immersion --n 5").exit_code == 2);

    TempDir tmp;
    CHECK(run("basis --n 5 --paper-family --cache-dir " + tmp.path.string()).exit_code == 2);
}

TEST_CASE("cache I/O failures exit with code 4") {
    if (!cli_available()) return;
    TempDir tmp;
    const fs::path blocker = tmp.path / "blocker";
    std::ofstream(blocker) << "file";
    CHECK(run("basis --n 4 --cache-dir " + blocker.string()).exit_code == 4);
}

TEST_CASE("verified basis runs exit cleanly and report verification") {
    if (!cli_available()) return;
    TempDir tmp;
    const CliResult r = run("basis --n 12 --verify --cache-dir " + tmp.path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verified: true\n") != std::string::npos);

    // Warm rerun produces identical bytes on stdout.
    const CliResult warm = run("basis --n 12 --verify --cache-dir " + tmp.path.string());
    CHECK(warm.exit_code == 0);
    CHECK(warm.out == r.out);

    const CliResult fam =
        run("basis --n 12 --paper-family --verify --cache-dir " + tmp.path.string());
    CHECK(fam.exit_code == 0);
    CHECK(fam.out == r.out);
}

TEST_CASE("verify-all reports per-n lines") {
    if (!cli_available()) return;
    TempDir tmp;
    const CliResult r = run("verify-all --from 4 --to 5 --cache-dir " + tmp.path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n=4 ok") != std::string::npos);
    CHECK(r.out.find("chains=3/3") != std::string::npos);
    CHECK(r.out.find("n=5 ok") != std::string::npos);
}
