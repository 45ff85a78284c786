#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "reference_values.hpp"
#include "xih/report_io.hpp"

// Drives the installed binary through the shell and checks bytes and exit
// codes, i.e. the contract scripts and CI would rely on.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    std::string out_path = "/tmp/xih_cli_out_" + std::to_string(++counter) + ".txt";
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "\"" XIH_CLI_BIN "\" " +
                      args + " > " + out_path + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    RunResult r;
    if (rc != -1 && WIFEXITED(rc)) r.exit_code = WEXITSTATUS(rc);
    r.out = slurp(out_path);
    std::remove(out_path.c_str());
    return r;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verification subcommand emits JSON records and exits zero") {
    RunResult r = run_cli("verify eq11 --x 0,0.5,1 --rel-tol 1e-8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("[\n", 0) == 0);
    CHECK(count_occurrences(r.out, "\"identity_id\"") == 3);
    CHECK(count_occurrences(r.out, "\"pass\": true") == 3);
    CHECK(count_occurrences(r.out, "\"pass\": false") == 0);
}

TEST_CASE("zeros subcommand emits the three-row CSV table") {
    RunResult r = run_cli("zeros --max-height 30 --format csv");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "index,gamma,bracket_lo,bracket_hi");
    const double expect[3] = {14.134725141734694, 21.022039638771555,
                              25.010857580145689};
    for (int i = 1; i <= 3; ++i) {
        CHECK(lines[i].rfind(std::to_string(i) + ",", 0) == 0);
        double gamma = std::strtod(lines[i].c_str() + 2, nullptr);
        CHECK(std::abs(gamma - expect[i - 1]) <= 1e-8);
    }
}

TEST_CASE("byte-identical output regardless of worker thread count") {
    const std::string args = "verify eq11 --x 0.5,1 --format csv";
    RunResult one = run_cli(args, "XI_HARMONIC_THREADS=1");
    RunResult four = run_cli(args, "XI_HARMONIC_THREADS=4");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.out == four.out);
    CHECK(!one.out.empty());
}

TEST_CASE("usage problems exit with code 2") {
    CHECK(run_cli("").exit_code == 2);                      // subcommand required
    CHECK(run_cli("frobnicate").exit_code == 2);            // unknown subcommand
    CHECK(run_cli("verify eq11 --x").exit_code == 2);       // flag missing its value
    CHECK(run_cli("verify eq11 --bogus 3").exit_code == 2); // unknown flag
    CHECK(run_cli("verify eq11 --x 1,zebra").exit_code == 2);
    CHECK(run_cli("verify eq11 --x 1,,2").exit_code == 2);
    CHECK(run_cli("zeros --max-height 100").exit_code == 2);  // above the scan cap
    CHECK(run_cli("verify laplace-chain --s 2").exit_code == 2);
    CHECK(run_cli("verify duffin --x 1 --y 1 --m-max 4").exit_code == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("an unmeetable gate turns into exit code 1") {
    RunResult r = run_cli("verify upsilon --s 2 --rel-tol 1e-30");
    CHECK(r.exit_code == 1);
    CHECK(count_occurrences(r.out, "\"pass\": false") == 1);
}

TEST_CASE("series verification plus the small-x probe") {
    RunResult r = run_cli("verify duffin --x 1 --y 1");
    CHECK(r.exit_code == 0);
    CHECK(count_occurrences(r.out, "\"identity_id\"") == 2);
    CHECK(count_occurrences(r.out, "\"pass\": true") == 2);
}

TEST_CASE("boundary recovery: deep ladder passes, shallow pair does not") {
    CHECK(run_cli("boundary --x 1").exit_code == 0);
    CHECK(run_cli("boundary --x 1 --y 1,0.5").exit_code == 1);
}

TEST_CASE("single-dimension resolvent chain run") {
    RunResult r = run_cli("verify laplace-chain --n 1 --format csv");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1].rfind("LAPLACE_CHAIN,", 0) == 0);
    CHECK(lines[1].find(",true,") != std::string::npos);
}

TEST_CASE("--out writes the file and keeps stdout quiet") {
    std::string path = "/tmp/xih_cli_zeros_out.csv";
    RunResult r = run_cli("zeros --max-height 21 --format csv --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    xih::ZerosTable t = xih::load_zeros_file(path);
    REQUIRE(t.entries.size() == 1);
    CHECK(std::abs(t.entries[0].gamma - ref::gamma_zero_1) <= 1e-8);
    std::remove(path.c_str());
}

TEST_CASE("bundled zeros table matches a fresh scan") {
    xih::ZerosTable t = xih::load_zeros_file(std::string(XIH_DATA_DIR) + "/zeros3.csv");
    REQUIRE(t.entries.size() == 3);
    const double want[3] = {ref::gamma_zero_1, ref::gamma_zero_2, ref::gamma_zero_3};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(t.entries[static_cast<std::size_t>(i)].gamma - want[i]) <= 1e-8);
        CHECK(t.entries[static_cast<std::size_t>(i)].bracket_lo <
              t.entries[static_cast<std::size_t>(i)].bracket_hi);
    }
}

TEST_CASE("scan rows from a zeros file: two ordinates plus the control") {
    std::string data = std::string(XIH_DATA_DIR) + "/zeros3.csv";
    RunResult r = run_cli("rh-scan --zeros-file " + data + " --y 0.5 --format csv");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "gamma,y,value");
    CHECK(lines[1].rfind("14.13472514", 0) == 0);
    CHECK(lines[2].rfind("21.02203963", 0) == 0);
    CHECK(lines[3].rfind("10,", 0) == 0);
}

}  // TEST_SUITE
