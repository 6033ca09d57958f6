// Drives the installed binary through a shell, checking pipe composition,
// exit codes and byte-determinism across worker counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

const std::string bin = FRACMATCH_BIN;

}  // namespace

TEST_CASE("gen pipes into stats for every family") {
    for (std::string family : {"triangle-star", "c5", "k2k3", "triangles"}) {
        for (int k = 1; k <= 6; ++k) {
            RunResult r = run(bin + " gen " + family + " " + std::to_string(k) + " | " + bin +
                              " stats --format tsv");
            CHECK(r.exit_code == 0);
            CHECK_FALSE(r.out.empty());
        }
    }
}

TEST_CASE("gen pipes into verify for every family") {
    for (int k = 1; k <= 6; ++k) {
        for (std::string family : {"triangle-star", "c5", "k2k3"}) {
            RunResult r = run(bin + " gen " + family + " " + std::to_string(k) + " | " + bin +
                              " verify --mode connected");
            CHECK(r.exit_code == 0);
        }
        // k*K3 is disconnected for k >= 2; union mode covers the family.
        RunResult r = run(bin + " gen triangles " + std::to_string(k) + " | " + bin +
                          " verify --mode union");
        CHECK(r.exit_code == 0);
    }
}

TEST_CASE("stats golden lines") {
    RunResult r = run("echo Bw | " + bin + " stats");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"graph6\":\"Bw\",\"n\":3,\"alpha\":1,\"alpha_f_halves\":3,\"gap_sixths\":3,"
          "\"class\":\"disjoint_triangles\"}\n");
    RunResult empty = run("echo @ | " + bin + " stats --format tsv");
    CHECK(empty.out == "@\t1\t0\t0\t0\tnot_extremal\n");
}

TEST_CASE("witness golden lines") {
    // K_{1,3} encodes as "Cs"; hub witness {0} at value 2 for both flavors.
    RunResult r = run("printf 'Cs\\nBw\\n' | " + bin + " witness --format tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "Cs\t2\t0\t2\t0\nBw\t1\t-\t0\t-\n");
}

TEST_CASE("malformed input exits 2 with a line number") {
    RunResult r = run("printf 'Bw\\nB\\n' | " + bin + " stats");
    CHECK(r.exit_code == 2);
    RunResult bad = run("echo 'zz!' | " + bin + " canonical");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify exit codes and determinism across jobs") {
    RunResult ok = run(bin + " verify --enumerate 6 --mode connected --format json");
    CHECK(ok.exit_code == 0);
    RunResult j1 = run(bin + " verify --enumerate 6 --mode connected --jobs 1");
    RunResult j4 = run(bin + " verify --enumerate 6 --mode connected --jobs 4");
    CHECK(j1.exit_code == 0);
    CHECK(j1.out == j4.out);
}

TEST_CASE("verify rejects disconnected input in connected mode") {
    RunResult r = run(bin + " gen triangles 2 | " + bin + " verify --mode connected");
    CHECK(r.exit_code == 2);
}

TEST_CASE("stats output does not depend on the worker count") {
    std::string input = "printf 'Bw\\nDhc\\nCs\\nGpM?GK\\nD~{\\n'";
    RunResult j1 = run(input + " | " + bin + " stats --jobs 1");
    RunResult j4 = run(input + " | " + bin + " stats --jobs 4");
    CHECK(j1.exit_code == 0);
    CHECK(j1.out == j4.out);
}

TEST_CASE("stdin dash is honored everywhere") {
    RunResult r = run(bin + " gen c5 | " + bin + " canonical --input -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"c\":{\"2\":1}") != std::string::npos);
}
