#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_path(const std::string& suffix) {
    static int counter = 0;
    return "/tmp/symgeo_cli_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++) + suffix;
}

RunResult run(const std::string& args) {
    const std::string path = temp_path(".out");
    const std::string cmd = std::string(CLI_PATH) + " " + args + " > " + path + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream is(path, std::ios::binary);
    std::ostringstream buf;
    buf << is.rdbuf();
    r.out = buf.str();
    std::remove(path.c_str());
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("plan exit codes") {
    CHECK(run("plan --c 2 --chi 2").exit_code == 0);
    CHECK(run("plan --c 7 --chi 2").exit_code == 0);  // sporadic
    CHECK(run("plan --c 5 --chi 1").exit_code == 2);  // exception
    CHECK(run("plan --m 1 --n 4").exit_code == 2);    // same pair, blow-up label
    CHECK(run("plan --c 7 --chi 1").exit_code == 3);  // outside the cone
    CHECK(run("plan --e 11 --sigma -6").exit_code == 3); // chi_h not an integer
    CHECK(run("plan --c 2").exit_code == 1);          // half a target
    CHECK(run("plan --c 2 --chi 2 --e 22 --sigma -14").exit_code == 1);
    CHECK(run("plan").exit_code == 1);
    CHECK(run("plan --frobnicate 3").exit_code == 1);
    CHECK(run("").exit_code == 1); // subcommand required
}

TEST_CASE("target coordinate systems agree") {
    const RunResult by_c = run("plan --c 2 --chi 2 --format csv");
    const RunResult by_es = run("plan --e 22 --sigma -14 --format csv");
    const RunResult by_mn = run("plan --m 4 --n 18 --format csv"); // e=24? no: 2+4+18=24
    CHECK(by_c.out == by_es.out);
    CHECK(by_c.exit_code == 0);
    // m=4, n=18 gives e=24, sigma=-14: parity 24-14=10 not divisible by 4
    CHECK(by_mn.exit_code == 3);

    const RunResult mn_ok = run("plan --m 3 --n 17 --format csv"); // e=22, sigma=-14
    CHECK(mn_ok.out == by_c.out);
}

TEST_CASE("plan text output carries the recipe trace") {
    const RunResult r = run("plan --c 2 --chi 2");
    CHECK(r.out.find("status: realized") != std::string::npos);
    CHECK(r.out.find("decomposition: b=0 c=0 d=1 g=0 k=1") != std::string::npos);
    CHECK(r.out.find("base D") != std::string::npos);
    CHECK(r.out.find("base E(1)") != std::string::npos);
    CHECK(r.out.find("pi1: proved-trivial") != std::string::npos);
    CHECK(r.out.find("minimality:") != std::string::npos);
}

TEST_CASE("json plan output is byte-identical across runs") {
    const RunResult a = run("plan --c 78 --chi 11 --format json");
    const RunResult b = run("plan --c 78 --chi 11 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"recipe_id\"") != std::string::npos);
}

TEST_CASE("scan row counts and csv shape") {
    const RunResult r = run("scan --chi-max 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 1 + 7 + 15 + 23);
    CHECK(r.out.rfind("c,chi,e,sigma,status,pi1_status,recipe_id\n", 0) == 0);
    CHECK(r.out.find("5,1,7,-3,exception,-,-") != std::string::npos);

    const RunResult j = run("scan --chi-max 2 --jobs 3 --format csv");
    const RunResult s = run("scan --chi-max 2 --format csv");
    CHECK(j.out == s.out);
}

TEST_CASE("verify round-trips a plan report") {
    const std::string path = temp_path(".json");
    const RunResult p = run("plan --c 6 --chi 1 --format json --out " + path);
    REQUIRE(p.exit_code == 0);
    const RunResult v = run("verify " + path);
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("e=6 sigma=-2") != std::string::npos);
    CHECK(v.out.find("proved-trivial") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify rejects malformed input") {
    const std::string path = temp_path(".json");
    {
        std::ofstream os(path);
        os << "{\"op\": \"nope\"}";
    }
    CHECK(run("verify " + path).exit_code == 1);
    std::remove(path.c_str());
    CHECK(run("verify /definitely/not/a/file.json").exit_code == 1);
}

TEST_CASE("catalog prints one citation per block") {
    const RunResult r = run("catalog");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("B: e=6 sigma=-2") != std::string::npos);
    CHECK(r.out.find("E'(1)") != std::string::npos);
    CHECK(r.out.find("Xtilde35") != std::string::npos);
    const RunResult j = run("catalog --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"citation\"") != std::string::npos);
}
